#include "zkosc/shape_invariance.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zkosc/error.hpp"

namespace zkosc {

namespace {

std::size_t idx(std::int64_t i) { return static_cast<std::size_t>(i); }

void require_level(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::NegativeLevel, "tower level must be nonnegative, got " + std::to_string(n));
}

// Smooth part of the closed form without C_0:
// -(Omega_k/k) (C + (n-1) delta / 2k) n.
double smooth_part(const ValidatedParams& vp, std::int64_t n) {
  const double k = vp.k();
  const double nd = static_cast<double>(n);
  return -(vp.omega_total() / k) * (vp.translation_constant() + (nd - 1.0) * vp.delta() / (2.0 * k)) * nd;
}

// Graded part for tower index s = n mod k:
// (C + (2n-1) delta / 2k) c_s - delta d_s.
double graded_part(const ValidatedParams& vp, const CoeffSet& coeffs, std::int64_t n, int s) {
  const double k = vp.k();
  const double nd = static_cast<double>(n);
  return (vp.translation_constant() + (2.0 * nd - 1.0) * vp.delta() / (2.0 * k)) * coeffs.c[idx(s)] -
         vp.delta() * coeffs.d[idx(s)];
}

}  // namespace

ValidatedParams ValidatedParams::with_c0(double c0) const {
  ValidatedParams copy = *this;
  copy.params_.c0 = c0;
  return copy;
}

ValidatedParams validate(const SipParams& params) {
  if (params.k < 1) throw Error(ErrorKind::ZeroK, "number of steps k must be at least 1");
  const auto k = static_cast<std::size_t>(params.k);
  if (params.sigma.size() != k || params.omega.size() != k) {
    throw Error(ErrorKind::InvalidParams, "sigma and omega must both have k = " + std::to_string(k) +
                                              " entries (got " + std::to_string(params.sigma.size()) + " and " +
                                              std::to_string(params.omega.size()) + ")");
  }
  if (params.n0 < 0) throw Error(ErrorKind::InvalidParams, "n0 must be nonnegative");
  const auto finite = [](double x) { return std::isfinite(x); };
  if (!std::all_of(params.sigma.begin(), params.sigma.end(), finite) ||
      !std::all_of(params.omega.begin(), params.omega.end(), finite) || !finite(params.a0) ||
      !finite(params.delta) || !finite(params.c0)) {
    throw Error(ErrorKind::InvalidParams, "parameters must be finite");
  }
  for (std::size_t s = 0; s < k; ++s) {
    if (params.omega[s] == 0.0) throw Error(ErrorKind::ZeroOmega, "omega_" + std::to_string(s) + " is zero");
  }

  const double base = params.sigma[0] / params.omega[0];
  for (std::size_t s = 1; s < k; ++s) {
    const double lhs = params.sigma[s] / params.omega[s];
    const double rhs = base + static_cast<double>(s) / params.k * params.delta;
    if (std::abs(lhs - rhs) > kCompatibilityTolerance * std::max({1.0, std::abs(lhs), std::abs(rhs)})) {
      throw Error(ErrorKind::IncompatibleRemainders,
                  "sigma_s/omega_s != sigma_0/omega_0 + (s/k) delta at s = " + std::to_string(s) + " (" +
                      std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
    }
  }

  ValidatedParams vp;
  vp.params_ = params;
  vp.constant_ = base + params.a0;
  vp.omega_total_ = 0.0;
  for (double w : params.omega) vp.omega_total_ += w;
  return vp;
}

double remainder_step(const ValidatedParams& vp, int s, std::int64_t m) {
  if (s < 0 || s >= vp.k()) throw Error(ErrorKind::BadGradeIndex, "step index outside [0, k)");
  require_level(m);
  const auto& p = vp.params();
  return p.sigma[idx(s)] + (p.a0 + static_cast<double>(m) * p.delta) * p.omega[idx(s)];
}

double unified_remainder(const ValidatedParams& vp, std::int64_t n) {
  require_level(n);
  const int s = tower_grade(n, vp.k());
  return (vp.translation_constant() + static_cast<double>(n) / vp.k() * vp.delta()) * vp.omega(s);
}

CoeffSet coefficients(const ValidatedParams& vp) {
  const int k = vp.k();
  CoeffSet out{std::vector<double>(idx(k), 0.0), std::vector<double>(idx(k), 0.0)};
  for (int s = 0; s < k; ++s) {
    double c = 0.0, d = 0.0;
    for (int t = 0; t < k; ++t) {
      const double w = vp.omega((s + t) % k);
      c += (k - 1 - 2 * t) * w;
      d += (t * t - (k - 1) * (t - 1)) * w;
    }
    out.c[idx(s)] = c / (2.0 * k);
    out.d[idx(s)] = d / (2.0 * k * k);
  }
  return out;
}

CoeffTable coefficient_table(int k) {
  if (k < 1) throw Error(ErrorKind::ZeroK, "number of steps k must be at least 1");
  CoeffTable table;
  table.k = k;
  table.c.assign(idx(k), std::vector<Rational>(idx(k), Rational(0)));
  table.d.assign(idx(k), std::vector<Rational>(idx(k), Rational(0)));
  const std::int64_t kk = k;
  for (std::int64_t s = 0; s < kk; ++s) {
    for (std::int64_t t = 0; t < kk; ++t) {
      const auto j = idx((s + t) % kk);
      table.c[idx(s)][j] += Rational(kk - 1 - 2 * t, 2 * kk);
      table.d[idx(s)][j] += Rational(t * t - (kk - 1) * (t - 1), 2 * kk * kk);
    }
  }
  return table;
}

std::vector<std::int64_t> d_polynomial(int k) {
  // t^2 - (k-1) t + (k-1)
  return {static_cast<std::int64_t>(k) - 1, -(static_cast<std::int64_t>(k) - 1), 1};
}

double structure_closed_unshifted(const ValidatedParams& vp, std::int64_t n) {
  require_level(n);
  const CoeffSet coeffs = coefficients(vp);
  // Delta_{s,n} keeps exactly one term of the graded sum.
  return smooth_part(vp, n) + graded_part(vp, coeffs, n, tower_grade(n, vp.k()));
}

double structure_closed(const ValidatedParams& vp, std::int64_t n) {
  return vp.c0() + structure_closed_unshifted(vp, n);
}

StructureTable structure_table(const ValidatedParams& vp, std::int64_t n_max) {
  require_level(n_max);
  const CoeffSet coeffs = coefficients(vp);
  StructureTable table{vp.params(), {}, StructureMethod::Closed, vp.omega_total()};
  table.values.reserve(idx(n_max + 1));
  for (std::int64_t n = 0; n <= n_max; ++n) {
    table.values.push_back(vp.c0() + smooth_part(vp, n) + graded_part(vp, coeffs, n, tower_grade(n, vp.k())));
  }
  return table;
}

StructureTable structure_recursive(const ValidatedParams& vp, std::int64_t n_max) {
  require_level(n_max);
  StructureTable table{vp.params(), {}, StructureMethod::Recursive, vp.omega_total()};
  table.values.reserve(idx(n_max + 1));
  table.values.push_back(structure_closed(vp, 0));
  for (std::int64_t n = 0; n < n_max; ++n) {
    table.values.push_back(table.values.back() - unified_remainder(vp, n));
  }
  return table;
}

double choose_c0(const ValidatedParams& vp, std::int64_t n_max, double margin) {
  require_level(n_max);
  if (n_max == 0) return 0.0;
  const auto table = structure_table(vp.with_c0(0.0), n_max);
  const double lowest = *std::min_element(table.values.begin() + 1, table.values.end());
  return std::max(0.0, margin - lowest);
}

SpectrumReport energy_spectrum(const ValidatedParams& vp, std::int64_t n_max, SpectrumMethod method) {
  require_level(n_max);
  SpectrumReport report{{}, method, vp.params(), true};
  auto& E = report.energies;
  E.reserve(idx(n_max + 1));
  const int k = vp.k();

  switch (method) {
    case SpectrumMethod::UnifiedSum: {
      double sum = 0.0;
      E.push_back(0.0);
      for (std::int64_t n = 1; n <= n_max; ++n) {
        sum += unified_remainder(vp, n - 1);
        E.push_back(sum);
      }
      break;
    }
    case SpectrumMethod::Blocks: {
      // E_{nk+s} = sum_{m<n} sum_t R_t(a_m) + sum_{t<s} R_t(a_n).
      for (std::int64_t level = 0; level <= n_max; ++level) {
        const std::int64_t n = level / k;
        const int s = static_cast<int>(level % k);
        double full = 0.0;
        for (std::int64_t m = 0; m < n; ++m) {
          for (int t = 0; t < k; ++t) full += remainder_step(vp, t, m);
        }
        double partial = 0.0;
        for (int t = 0; t < s; ++t) partial += remainder_step(vp, t, n);
        E.push_back(full + partial);
      }
      break;
    }
    case SpectrumMethod::StructureDiff: {
      // C_0 cancels identically, so it is left out of both terms.
      const double top = structure_closed_unshifted(vp, 0);
      for (std::int64_t n = 0; n <= n_max; ++n) E.push_back(top - structure_closed_unshifted(vp, n));
      E.front() = 0.0;
      break;
    }
  }

  for (std::size_t i = 1; i < E.size(); ++i) {
    if (E[i] < E[i - 1]) report.monotone = false;
  }
  return report;
}

double relative_deviation(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double method_deviation(const ValidatedParams& vp, std::int64_t n_max) {
  const auto u = energy_spectrum(vp, n_max, SpectrumMethod::UnifiedSum).energies;
  const auto b = energy_spectrum(vp, n_max, SpectrumMethod::Blocks).energies;
  const auto f = energy_spectrum(vp, n_max, SpectrumMethod::StructureDiff).energies;
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    worst = std::max({worst, relative_deviation(u[i], b[i]), relative_deviation(u[i], f[i]),
                      relative_deviation(b[i], f[i])});
  }
  return worst;
}

bool is_cyclic(const ValidatedParams& vp) { return vp.delta() == 0.0; }

std::optional<std::vector<double>> remainder_cycle(const ValidatedParams& vp) {
  if (!is_cyclic(vp)) return std::nullopt;
  return vp.params().omega;
}

std::int64_t tower_level(const ValidatedParams& vp, double nu) {
  const double x = vp.k() * (static_cast<double>(vp.params().n0) - nu);
  const auto n = static_cast<std::int64_t>(std::llround(x));
  if (std::abs(x - static_cast<double>(n)) > 1e-9) {
    throw Error(ErrorKind::InvalidWindow, "nu = " + std::to_string(nu) + " is not on the 1/k tower below N0");
  }
  require_level(n);
  return n;
}

StructureFn structure_as_fn(const ValidatedParams& vp, std::optional<std::int64_t> pin_level) {
  const CoeffSet coeffs = coefficients(vp);
  const double shift = pin_level ? structure_closed(vp, *pin_level) : 0.0;
  const int k = vp.k();

  StructureFn fn;
  fn.value = [vp, shift](double nu) { return structure_closed(vp, tower_level(vp, nu)) - shift; };

  GradedParts parts;
  parts.smooth = [vp, shift](double nu) { return vp.c0() + smooth_part(vp, tower_level(vp, nu)) - shift; };
  for (int g = 0; g < k; ++g) {
    // Fock grade g holds the tower states with n = -g mod k.
    const int s = fock_grade_of_tower(g, k);
    parts.by_grade.push_back(
        [vp, coeffs, s](double nu) { return graded_part(vp, coeffs, tower_level(vp, nu), s); });
  }
  fn.graded = std::move(parts);
  return fn;
}

StructureFn structure_for_window(const ValidatedParams& vp, const FockWindow& window, bool lowest_weight) {
  if (window.k() != vp.k()) throw Error(ErrorKind::InvalidWindow, "window grading order differs from params k");
  if (window.convention() == Convention::Descending && window.n0() != vp.params().n0) {
    throw Error(ErrorKind::InvalidWindow, "descending window anchor differs from params n0");
  }
  std::optional<std::int64_t> pin;
  if (lowest_weight) pin = tower_level(vp, window.nu(window.bottom_index()));
  StructureFn fn = structure_as_fn(vp, pin);
  for (std::size_t j = 0; j < window.depth(); ++j) {
    const double value = fn(window.nu(j));
    if (value < 0.0) {
      throw Error(ErrorKind::NegativeStructure, "structure function is " + std::to_string(value) +
                                                    " at nu = " + std::to_string(window.nu(j)) +
                                                    "; raise C_0 (see choose_c0) or shrink the window");
    }
  }
  return fn;
}

}  // namespace zkosc
