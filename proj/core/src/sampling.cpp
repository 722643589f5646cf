#include "zkosc/sampling.hpp"

namespace zkosc {

SipParams random_params(std::mt19937_64& rng, int k_max) {
  std::uniform_int_distribution<int> pick_k(1, k_max);
  std::uniform_real_distribution<double> magnitude(0.1, 5.0);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::bernoulli_distribution negative(0.3);
  std::uniform_int_distribution<std::int64_t> pick_n0(0, 50);

  SipParams p;
  p.k = pick_k(rng);
  p.delta = 2.0 * unit(rng);
  p.a0 = 3.0 * unit(rng);
  p.n0 = pick_n0(rng);
  p.c0 = 5.0 * unit(rng);
  const double ratio0 = 3.0 * unit(rng);
  for (int s = 0; s < p.k; ++s) {
    const double w = negative(rng) ? -magnitude(rng) : magnitude(rng);
    p.omega.push_back(w);
    p.sigma.push_back(w * (ratio0 + static_cast<double>(s) / p.k * p.delta));
  }
  return p;
}

}  // namespace zkosc
