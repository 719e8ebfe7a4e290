#pragma once

// Umbrella header for the full library (the CLI surface is separate in
// ubicap/cli.hpp so library users do not pull in the argument parser).

#include "ubicap/calibration.hpp"
#include "ubicap/dynamics.hpp"
#include "ubicap/economy.hpp"
#include "ubicap/errors.hpp"
#include "ubicap/format.hpp"
#include "ubicap/sweeps.hpp"
#include "ubicap/table.hpp"
#include "ubicap/thresholds.hpp"
#include "ubicap/version.hpp"
