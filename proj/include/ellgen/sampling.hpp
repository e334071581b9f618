#pragma once

#include <random>

#include "ellgen/chern.hpp"

namespace ellgen {

/// Uniform p/q with |p| <= max_num and 1 <= q <= max_den.
Rat random_rat(std::mt19937_64& rng, int max_num = 50, int max_den = 7);

/// 4n-manifold whose Pontryagin numbers are independent random rationals.
Manifold random_manifold(int n, std::mt19937_64& rng, int max_num = 50, int max_den = 7);

}  // namespace ellgen
