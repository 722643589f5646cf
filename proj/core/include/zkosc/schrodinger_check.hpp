#pragma once

// Finite-difference cross-checks in units hbar = 2m = 1:
//   V(-/+) = W^2 -/+ W',   H = -d^2/dx^2 + V.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "zkosc/shape_invariance.hpp"

namespace zkosc {

// Uniform mesh of `points` nodes from x_min to x_max inclusive. The solver
// puts Dirichlet walls one spacing outside the first and last node.
struct Grid {
  double x_min = 0.0;
  double x_max = 1.0;
  std::size_t points = 16;

  double spacing() const { return (x_max - x_min) / static_cast<double>(points - 1); }
  double x(std::size_t j) const { return x_min + spacing() * static_cast<double>(j); }
};

inline constexpr std::size_t kMinGridPoints = 16;

// Throws Error{InvalidGrid} unless points >= 16 and x_min < x_max (both finite).
Grid make_grid(double x_min, double x_max, std::size_t points);

// Grid whose Dirichlet walls sit exactly at lo and hi: all nodes strictly inside.
Grid interior_grid(double lo, double hi, std::size_t points);

struct SampledPotential {
  Grid grid;
  std::vector<double> values;
  std::string family_tag;
};

enum class FamilyKind { Harmonic, PoschlTellerI, PoschlTellerII };

struct Family {
  FamilyKind kind = FamilyKind::Harmonic;
  double strength = 1.0;  // omega for Harmonic, A for Poschl-Teller
};

std::string family_name(FamilyKind kind);

struct FamilySample {
  SampledPotential w;
  SampledPotential w_prime;
  SampledPotential v_minus;
  SampledPotential v_plus;
};

// Harmonic: W = (omega/2) x; PT-I: W = A tan x; PT-II: W = A tanh x.
// Throws Error{DomainViolation} if a PT-I node is not strictly inside
// (-pi/2, pi/2) or a sampled value is not finite, Error{InvalidParams} for
// nonpositive strength.
FamilySample sample_family(const Family& family, const Grid& grid);

// One-step shape-invariance parameters of a built-in family:
// Harmonic R = omega; PT-I R(a) = 2a + 1, a -> a + 1; PT-II R(a) = 2a - 1, a -> a - 1.
SipParams family_params(const Family& family);

// lim |x| -> inf of V-, when finite (PT-II: A^2).
std::optional<double> continuum_edge(const Family& family);

struct EigenResult {
  std::vector<double> eigenvalues;
  std::size_t count = 0;
  Grid grid;
  // Upper bound of the discrete spectrum: max V + 4/h^2.
  double ceiling = 0.0;
};

// Lowest `count` eigenvalues of the tridiagonal matrix
// (-(u_{j-1} - 2u_j + u_{j+1})/h^2 + V_j u_j) with u = 0 beyond both ends.
// Throws Error{CountTooLarge} if count > points/4, Error{ConvergenceFailure}
// when bisection fails.
EigenResult eigensolve(const SampledPotential& potential, std::size_t count);

struct PartnerReport {
  std::vector<double> minus_levels;  // V- levels 1..count (or 0..count-1 when identical)
  std::vector<double> plus_levels;   // V+ levels 0..count-1
  std::vector<double> differences;
  bool identical_partners = false;  // W == 0: no ground state is dropped
  double max_difference = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

PartnerReport verify_partners(const SampledPotential& w, const SampledPotential& w_prime, std::size_t count,
                              double tol);

struct ChainSpec {
  Grid grid;
  std::vector<std::vector<double>> w;          // W_s(x, a_0), s = 0..k-1
  std::vector<std::vector<double>> w_prime;    // optional analytic derivatives
  std::vector<double> w_shifted;               // W_0(x, a_1)
  std::vector<double> w_shifted_prime;         // optional
  std::vector<double> remainders;              // R_s(a_0)
};

struct ChainReport {
  std::vector<double> residuals;  // per relation, max over x
  double max_residual = 0.0;
  int derivative_order = 0;  // 0 when every derivative was supplied, else 4
  double tolerance = 0.0;
  bool pass = false;
};

// One-step chain of a built-in family: W(x, a_0), W(x, a_1) with analytic
// derivatives and the remainder R(a_0).
ChainSpec family_chain(const Family& family, const Grid& grid);

// W_s^2 + W_s' = W_{s+1}^2 - W_{s+1}' + R_s with W_k = W_0(., a_1).
// Throws Error{GridMismatch} when a sampling does not match the grid,
// Error{EmptyInput} for an empty chain.
ChainReport verify_chain(const ChainSpec& chain, double tol);

// Fourth-order central differences; one-sided fourth-order stencils at the
// two edge nodes on each side.
std::vector<double> differentiate(const std::vector<double>& f, double h);

struct SpectrumComparison {
  std::vector<double> numeric;
  std::vector<double> algebraic;
  std::vector<double> differences;  // for compared levels
  std::vector<bool> level_pass;
  std::size_t compared = 0;
  std::vector<std::size_t> excluded;  // algebraic levels at or above the cutoff
  double cutoff = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

inline constexpr double kCeilingFraction = 0.95;

// Compares the overlapping prefix. Algebraic levels within 5% of the
// continuum edge (if given) or of the discretization ceiling are excluded.
SpectrumComparison compare_spectra(const EigenResult& numeric, const SpectrumReport& algebraic, double tol,
                                   std::optional<double> continuum = std::nullopt);

}  // namespace zkosc
