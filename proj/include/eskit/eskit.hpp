#pragma once

// Umbrella header for the whole toolkit.

#include "eskit/bigint.hpp"
#include "eskit/binomial.hpp"
#include "eskit/euler_seidel.hpp"
#include "eskit/identity_suite.hpp"
#include "eskit/polynomial.hpp"
#include "eskit/rational.hpp"
#include "eskit/sequences.hpp"
#include "eskit/series.hpp"
#include "eskit/series_engine.hpp"
