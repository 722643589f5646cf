#include "zkosc/schrodinger_check.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <lapacke.h>

#include "zkosc/error.hpp"

namespace zkosc {

namespace {

void require_matching(const Grid& grid, const std::vector<double>& values, const std::string& what) {
  if (values.size() != grid.points) {
    throw Error(ErrorKind::GridMismatch, what + " has " + std::to_string(values.size()) + " samples, grid has " +
                                             std::to_string(grid.points));
  }
}

SampledPotential sample(const Grid& grid, const std::string& tag, auto&& fn) {
  SampledPotential out{grid, std::vector<double>(grid.points), tag};
  for (std::size_t j = 0; j < grid.points; ++j) {
    out.values[j] = fn(grid.x(j));
    if (!std::isfinite(out.values[j])) {
      throw Error(ErrorKind::DomainViolation, tag + " is not finite at x = " + std::to_string(grid.x(j)));
    }
  }
  return out;
}

SampledPotential combine(const SampledPotential& w, const SampledPotential& w_prime, double sign,
                         const std::string& tag) {
  SampledPotential out{w.grid, std::vector<double>(w.values.size()), tag};
  for (std::size_t j = 0; j < w.values.size(); ++j) {
    out.values[j] = w.values[j] * w.values[j] + sign * w_prime.values[j];
  }
  return out;
}

}  // namespace

Grid make_grid(double x_min, double x_max, std::size_t points) {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_min < x_max)) {
    throw Error(ErrorKind::InvalidGrid, "grid needs finite x_min < x_max");
  }
  if (points < kMinGridPoints) {
    throw Error(ErrorKind::InvalidGrid, "grid needs at least " + std::to_string(kMinGridPoints) + " points");
  }
  return Grid{x_min, x_max, points};
}

Grid interior_grid(double lo, double hi, std::size_t points) {
  const double h = (hi - lo) / static_cast<double>(points + 1);
  return make_grid(lo + h, hi - h, points);
}

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::Harmonic: return "Harmonic";
    case FamilyKind::PoschlTellerI: return "PoschlTellerI";
    case FamilyKind::PoschlTellerII: return "PoschlTellerII";
  }
  return "Unknown";
}

FamilySample sample_family(const Family& family, const Grid& grid) {
  if (!(family.strength > 0.0)) throw Error(ErrorKind::InvalidParams, "family strength must be positive");
  const double A = family.strength;
  const std::string tag = family_name(family.kind);
  FamilySample out;
  switch (family.kind) {
    case FamilyKind::Harmonic:
      out.w = sample(grid, tag + ":W", [&](double x) { return 0.5 * A * x; });
      out.w_prime = sample(grid, tag + ":W'", [&](double) { return 0.5 * A; });
      break;
    case FamilyKind::PoschlTellerI: {
      const double edge = std::numbers::pi / 2.0;
      if (!(grid.x_min > -edge) || !(grid.x_max < edge)) {
        throw Error(ErrorKind::DomainViolation, "PoschlTellerI grid must lie strictly inside (-pi/2, pi/2)");
      }
      out.w = sample(grid, tag + ":W", [&](double x) { return A * std::tan(x); });
      out.w_prime = sample(grid, tag + ":W'", [&](double x) {
        const double c = std::cos(x);
        return A / (c * c);
      });
      break;
    }
    case FamilyKind::PoschlTellerII:
      out.w = sample(grid, tag + ":W", [&](double x) { return A * std::tanh(x); });
      out.w_prime = sample(grid, tag + ":W'", [&](double x) {
        const double c = std::cosh(x);
        return A / (c * c);
      });
      break;
  }
  out.v_minus = combine(out.w, out.w_prime, -1.0, tag + ":V-");
  out.v_plus = combine(out.w, out.w_prime, +1.0, tag + ":V+");
  for (const auto* v : {&out.v_minus, &out.v_plus}) {
    for (double value : v->values) {
      if (!std::isfinite(value)) throw Error(ErrorKind::DomainViolation, v->family_tag + " overflows on this grid");
    }
  }
  return out;
}

SipParams family_params(const Family& family) {
  const double A = family.strength;
  switch (family.kind) {
    case FamilyKind::Harmonic: return SipParams{1, {A}, {1.0}, 0.0, 0.0, 0, 0.0};
    case FamilyKind::PoschlTellerI: return SipParams{1, {1.0}, {2.0}, A, 1.0, 0, 0.0};
    case FamilyKind::PoschlTellerII: return SipParams{1, {-1.0}, {2.0}, A, -1.0, 0, 0.0};
  }
  return {};
}

std::optional<double> continuum_edge(const Family& family) {
  if (family.kind == FamilyKind::PoschlTellerII) return family.strength * family.strength;
  return std::nullopt;
}

EigenResult eigensolve(const SampledPotential& potential, std::size_t count) {
  const Grid& grid = potential.grid;
  require_matching(grid, potential.values, "potential");
  if (count == 0 || count > grid.points / 4) {
    throw Error(ErrorKind::CountTooLarge, "requested " + std::to_string(count) + " levels from " +
                                              std::to_string(grid.points) + " points (max points/4)");
  }
  const double h = grid.spacing();
  const double inv_h2 = 1.0 / (h * h);
  const auto n = static_cast<lapack_int>(grid.points);

  std::vector<double> diag(grid.points), off(grid.points - 1, -inv_h2);
  for (std::size_t j = 0; j < grid.points; ++j) diag[j] = 2.0 * inv_h2 + potential.values[j];

  std::vector<double> w(grid.points);
  std::vector<lapack_int> iblock(grid.points), isplit(grid.points);
  lapack_int found = 0, nsplit = 0;
  const double abstol = 2.0 * LAPACKE_dlamch('S');
  const lapack_int info =
      LAPACKE_dstebz('I', 'E', n, 0.0, 0.0, 1, static_cast<lapack_int>(count), abstol, diag.data(), off.data(),
                     &found, &nsplit, w.data(), iblock.data(), isplit.data());
  if (info != 0 || found != static_cast<lapack_int>(count)) {
    throw Error(ErrorKind::ConvergenceFailure, "bisection failed (info = " + std::to_string(info) + ")");
  }

  EigenResult result;
  result.eigenvalues.assign(w.begin(), w.begin() + found);
  result.count = count;
  result.grid = grid;
  result.ceiling = *std::max_element(potential.values.begin(), potential.values.end()) + 4.0 * inv_h2;
  return result;
}

PartnerReport verify_partners(const SampledPotential& w, const SampledPotential& w_prime, std::size_t count,
                              double tol) {
  require_matching(w.grid, w.values, "W");
  require_matching(w.grid, w_prime.values, "W'");
  const auto v_minus = combine(w, w_prime, -1.0, "V-");
  const auto v_plus = combine(w, w_prime, +1.0, "V+");
  const auto is_zero = [](double x) { return x == 0.0; };

  PartnerReport report;
  report.tolerance = tol;
  report.identical_partners = std::all_of(w.values.begin(), w.values.end(), is_zero) &&
                              std::all_of(w_prime.values.begin(), w_prime.values.end(), is_zero);

  const std::size_t dropped = report.identical_partners ? 0 : 1;
  const auto minus = eigensolve(v_minus, count + dropped).eigenvalues;
  report.plus_levels = eigensolve(v_plus, count).eigenvalues;
  report.minus_levels.assign(minus.begin() + static_cast<std::ptrdiff_t>(dropped), minus.end());
  for (std::size_t i = 0; i < count; ++i) {
    const double diff = std::abs(report.plus_levels[i] - report.minus_levels[i]);
    report.differences.push_back(diff);
    report.max_difference = std::max(report.max_difference, diff);
  }
  report.pass = report.max_difference <= tol;
  return report;
}

ChainSpec family_chain(const Family& family, const Grid& grid) {
  if (!(family.strength > 0.0)) throw Error(ErrorKind::InvalidParams, "family strength must be positive");
  const auto p = validate(family_params(family));
  const double a0 = p.params().a0;
  const double a1 = a0 + p.delta();

  // W(x, a) and W'(x, a) of each family.
  auto w = [&](double a, double x) {
    switch (family.kind) {
      case FamilyKind::Harmonic: return 0.5 * family.strength * x;
      case FamilyKind::PoschlTellerI: return a * std::tan(x);
      case FamilyKind::PoschlTellerII: return a * std::tanh(x);
    }
    return 0.0;
  };
  auto wp = [&](double a, double x) {
    switch (family.kind) {
      case FamilyKind::Harmonic: return 0.5 * family.strength;
      case FamilyKind::PoschlTellerI: return a / (std::cos(x) * std::cos(x));
      case FamilyKind::PoschlTellerII: return a / (std::cosh(x) * std::cosh(x));
    }
    return 0.0;
  };
  if (family.kind == FamilyKind::PoschlTellerI &&
      (!(grid.x_min > -std::numbers::pi / 2.0) || !(grid.x_max < std::numbers::pi / 2.0))) {
    throw Error(ErrorKind::DomainViolation, "PoschlTellerI grid must lie strictly inside (-pi/2, pi/2)");
  }

  ChainSpec chain;
  chain.grid = grid;
  chain.w.assign(1, std::vector<double>(grid.points));
  chain.w_prime.assign(1, std::vector<double>(grid.points));
  chain.w_shifted.resize(grid.points);
  chain.w_shifted_prime.resize(grid.points);
  for (std::size_t j = 0; j < grid.points; ++j) {
    const double x = grid.x(j);
    chain.w[0][j] = w(a0, x);
    chain.w_prime[0][j] = wp(a0, x);
    chain.w_shifted[j] = w(a1, x);
    chain.w_shifted_prime[j] = wp(a1, x);
  }
  chain.remainders = {remainder_step(p, 0, 0)};
  return chain;
}

std::vector<double> differentiate(const std::vector<double>& f, double h) {
  const std::size_t n = f.size();
  if (n < 5) throw Error(ErrorKind::InvalidGrid, "fourth-order differences need at least 5 samples");
  std::vector<double> out(n);
  const double s = 1.0 / (12.0 * h);
  out[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) * s;
  out[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) * s;
  for (std::size_t j = 2; j + 2 < n; ++j) {
    out[j] = (f[j - 2] - 8.0 * f[j - 1] + 8.0 * f[j + 1] - f[j + 2]) * s;
  }
  out[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] - f[n - 5]) * s;
  out[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] + 3.0 * f[n - 5]) * s;
  return out;
}

ChainReport verify_chain(const ChainSpec& chain, double tol) {
  if (chain.w.empty()) throw Error(ErrorKind::EmptyInput, "chain has no superpotentials");
  const std::size_t k = chain.w.size();
  if (chain.remainders.size() != k) {
    throw Error(ErrorKind::GridMismatch, "chain needs one remainder per superpotential");
  }
  const bool analytic = chain.w_prime.size() == k && !chain.w_shifted_prime.empty();
  if (!chain.w_prime.empty() && chain.w_prime.size() != k) {
    throw Error(ErrorKind::GridMismatch, "chain derivative count differs from superpotential count");
  }

  const double h = chain.grid.spacing();
  std::vector<std::vector<double>> w(chain.w), wp;
  for (std::size_t s = 0; s < k; ++s) {
    require_matching(chain.grid, w[s], "W_" + std::to_string(s));
    if (analytic) {
      require_matching(chain.grid, chain.w_prime[s], "W'_" + std::to_string(s));
      wp.push_back(chain.w_prime[s]);
    } else {
      wp.push_back(differentiate(w[s], h));
    }
  }
  require_matching(chain.grid, chain.w_shifted, "W_0(a_1)");
  w.push_back(chain.w_shifted);
  if (analytic) {
    require_matching(chain.grid, chain.w_shifted_prime, "W_0'(a_1)");
    wp.push_back(chain.w_shifted_prime);
  } else {
    wp.push_back(differentiate(chain.w_shifted, h));
  }

  ChainReport report;
  report.tolerance = tol;
  report.derivative_order = analytic ? 0 : 4;
  for (std::size_t s = 0; s < k; ++s) {
    double worst = 0.0;
    for (std::size_t j = 0; j < chain.grid.points; ++j) {
      const double lhs = w[s][j] * w[s][j] + wp[s][j];
      const double rhs = w[s + 1][j] * w[s + 1][j] - wp[s + 1][j] + chain.remainders[s];
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    report.residuals.push_back(worst);
    report.max_residual = std::max(report.max_residual, worst);
  }
  report.pass = report.max_residual <= tol;
  return report;
}

SpectrumComparison compare_spectra(const EigenResult& numeric, const SpectrumReport& algebraic, double tol,
                                   std::optional<double> continuum) {
  if (numeric.eigenvalues.empty() || algebraic.energies.empty()) {
    throw Error(ErrorKind::EmptyInput, "both spectra must be nonempty");
  }
  SpectrumComparison cmp;
  cmp.numeric = numeric.eigenvalues;
  cmp.algebraic = algebraic.energies;
  cmp.tolerance = tol;
  const double edge = continuum ? std::min(*continuum, numeric.ceiling) : numeric.ceiling;
  cmp.cutoff = edge - (1.0 - kCeilingFraction) * std::abs(edge);

  const std::size_t overlap = std::min(cmp.numeric.size(), cmp.algebraic.size());
  bool all_ok = true;
  for (std::size_t i = 0; i < cmp.algebraic.size(); ++i) {
    if (cmp.algebraic[i] >= cmp.cutoff) {
      cmp.excluded.push_back(i);
      continue;
    }
    if (i >= overlap) continue;
    const double diff = std::abs(cmp.numeric[i] - cmp.algebraic[i]);
    cmp.differences.push_back(diff);
    cmp.level_pass.push_back(diff <= tol);
    all_ok = all_ok && diff <= tol;
    ++cmp.compared;
  }
  cmp.pass = all_ok && cmp.compared > 0;
  return cmp;
}

}  // namespace zkosc
