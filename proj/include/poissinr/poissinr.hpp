#pragma once

// Umbrella header.
#include "errors.hpp"
#include "random.hpp"
#include "network.hpp"
#include "propagation.hpp"
#include "sinr.hpp"
#include "fluid.hpp"
#include "empirical.hpp"
#include "montecarlo.hpp"
#include "scenario.hpp"
#include "cdf_io.hpp"
#include "commands.hpp"
