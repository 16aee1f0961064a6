#pragma once

// Convenience umbrella: exact spectral theory of valued quivers under mutation.

#include "quiverspec/numeric.hpp"
#include "quiverspec/matrix.hpp"
#include "quiverspec/polynomial.hpp"
#include "quiverspec/quiver.hpp"
#include "quiverspec/exchange.hpp"
#include "quiverspec/mutation.hpp"
#include "quiverspec/charpoly.hpp"
#include "quiverspec/roots.hpp"
#include "quiverspec/spectral.hpp"
#include "quiverspec/canonical.hpp"
#include "quiverspec/explorer.hpp"
#include "quiverspec/io.hpp"
