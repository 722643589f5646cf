#pragma once

#include <random>

#include "zkosc/shape_invariance.hpp"

namespace zkosc {

// Random parameter record satisfying the compatibility condition:
// k in [1, k_max], |omega_s| in [0.1, 5] with random sign, |delta| <= 2,
// sigma_s = omega_s (r0 + (s/k) delta).
SipParams random_params(std::mt19937_64& rng, int k_max);

}  // namespace zkosc
