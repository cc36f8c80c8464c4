#pragma once

// Umbrella header for the probabilistic zero forcing library.

#include "pzf/classical.hpp"
#include "pzf/errors.hpp"
#include "pzf/graph.hpp"
#include "pzf/metrics.hpp"
#include "pzf/monte_carlo.hpp"
#include "pzf/pccr.hpp"
#include "pzf/rational.hpp"
#include "pzf/rng.hpp"
#include "pzf/state_space.hpp"
#include "pzf/vertex_set.hpp"
