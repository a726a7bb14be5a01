#pragma once

#include <stdexcept>
#include <string>

namespace gyro {

/// Base of every error raised by the library.
class GyroError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A velocity is not strictly inside the c-ball (or is not finite).
class OutOfBall : public GyroError {
 public:
  using GyroError::GyroError;
};

/// Operands were built in balls of different radius.
class MixedRadius : public GyroError {
 public:
  using GyroError::GyroError;
};

/// An angle was requested for a zero vector.
class ZeroVector : public GyroError {
 public:
  using GyroError::GyroError;
};

class AxisNotFixed : public GyroError {
 public:
  using GyroError::GyroError;
};

class CoincidentAnchors : public GyroError {
 public:
  using GyroError::GyroError;
};

class DegenerateTriangle : public GyroError {
 public:
  using GyroError::GyroError;
};

/// Invalid polygonal orbit (fewer than 3 sides, or speed outside (0, c)).
class BadOrbit : public GyroError {
 public:
  using GyroError::GyroError;
};

/// Planar operations got a vector with a nonzero z component.
class OutOfPlane : public GyroError {
 public:
  using GyroError::GyroError;
};

}  // namespace gyro
