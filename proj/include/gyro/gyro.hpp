#pragma once

#include "gyro/audit.hpp"
#include "gyro/ball_core.hpp"
#include "gyro/errors.hpp"
#include "gyro/gyration.hpp"
#include "gyro/hyperbolic.hpp"
#include "gyro/linalg.hpp"
#include "gyro/lorentz.hpp"
#include "gyro/precession_dynamics.hpp"
#include "gyro/sampling.hpp"
#include "gyro/sign_corroboration.hpp"
