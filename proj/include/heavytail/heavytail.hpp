#pragma once

// Umbrella header for the heavytail library.

#include "heavytail/boxplot.hpp"
#include "heavytail/diagnose.hpp"
#include "heavytail/distribution.hpp"
#include "heavytail/empirical.hpp"
#include "heavytail/errors.hpp"
#include "heavytail/estimators.hpp"
#include "heavytail/montecarlo.hpp"
#include "heavytail/render.hpp"
#include "heavytail/rng.hpp"
#include "heavytail/special.hpp"
#include "heavytail/tail_measures.hpp"
