#pragma once

// Umbrella header for the optsample library.

#include "bench.hpp"
#include "closedform.hpp"
#include "core.hpp"
#include "errors.hpp"
#include "layout.hpp"
#include "linalg.hpp"
#include "objective.hpp"
#include "optimize.hpp"
#include "random.hpp"
#include "rkhs.hpp"
#include "spectral.hpp"
#include "subspace.hpp"
