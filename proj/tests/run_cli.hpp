#pragma once

#include <cstdio>
#include <string>
#include <sys/wait.h>

#ifndef GYROCLI_PATH
#error "GYROCLI_PATH must name the gyrocli executable"
#endif

struct CliResult {
  int exit_code{-1};
  std::string out;
};

/// Runs gyrocli with `args` through the shell; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string("'") + GYROCLI_PATH + "' " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
