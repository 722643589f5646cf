#pragma once

// Translational k-step shape invariance with linear remainders
//   R_s(a_m) = sigma_s + a_m omega_s,   a_m = a_0 + m delta.
//
// Levels are indexed along the descending tower n = 0, 1, 2, ... which
// corresponds to the number eigenvalue N0 - n/k and to the parameter pair
// (s, m) = (n mod k, n div k).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "zkosc/graded_fock.hpp"
#include "zkosc/oscillator_algebra.hpp"

namespace zkosc {

struct SipParams {
  int k = 1;
  std::vector<double> sigma;
  std::vector<double> omega;
  double a0 = 0.0;
  double delta = 0.0;
  std::int64_t n0 = 0;
  double c0 = 0.0;
};

inline constexpr double kCompatibilityTolerance = 1e-12;

// A SipParams record that passed validate(). Holds the derived constant
// C = sigma_0/omega_0 + a_0.
class ValidatedParams {
 public:
  const SipParams& params() const noexcept { return params_; }
  int k() const noexcept { return params_.k; }
  double delta() const noexcept { return params_.delta; }
  double c0() const noexcept { return params_.c0; }
  double translation_constant() const noexcept { return constant_; }
  double omega(int s) const { return params_.omega.at(static_cast<std::size_t>(s)); }
  double omega_total() const noexcept { return omega_total_; }

  // Same record with a different C_0; C_0 never enters validation.
  ValidatedParams with_c0(double c0) const;

 private:
  friend ValidatedParams validate(const SipParams& params);
  ValidatedParams() = default;

  SipParams params_;
  double constant_ = 0.0;
  double omega_total_ = 0.0;
};

// Checks sequence lengths, omega_s != 0 and
// sigma_s/omega_s = sigma_0/omega_0 + (s/k) delta (relative tolerance 1e-12).
// Throws Error{InvalidParams | ZeroK | ZeroOmega | IncompatibleRemainders}.
ValidatedParams validate(const SipParams& params);

// sigma_s + (a_0 + m delta) omega_s.
double remainder_step(const ValidatedParams& vp, int s, std::int64_t m);

// (C + (n/k) delta) omega_{n mod k}.
double unified_remainder(const ValidatedParams& vp, std::int64_t n);

struct CoeffSet {
  std::vector<double> c;
  std::vector<double> d;
};

// c_s = (1/2k) sum_t (k-1-2t) omega_{s+t},
// d_s = (1/2k^2) sum_t (t^2 - (k-1)(t-1)) omega_{s+t}, indices mod k.
CoeffSet coefficients(const ValidatedParams& vp);

// Exact weights of omega_j in c_s and d_s: c[s][j], d[s][j].
struct CoeffTable {
  int k = 1;
  std::vector<std::vector<Rational>> c;
  std::vector<std::vector<Rational>> d;
};

CoeffTable coefficient_table(int k);

// D(t) = t^2 - (k-1)(t-1) as {constant, linear, quadratic} coefficients.
std::vector<std::int64_t> d_polynomial(int k);

// Closed-form F(alpha(N0 - n/k)). Throws Error{NegativeLevel} for n < 0.
double structure_closed(const ValidatedParams& vp, std::int64_t n);

// structure_closed without the additive C_0.
double structure_closed_unshifted(const ValidatedParams& vp, std::int64_t n);

enum class StructureMethod { Closed, Recursive };

struct StructureTable {
  SipParams params;
  std::vector<double> values;
  StructureMethod method = StructureMethod::Closed;
  double omega_total = 0.0;
};

StructureTable structure_table(const ValidatedParams& vp, std::int64_t n_max);

// G(0) = structure_closed(0), G(n+1) = G(n) - R(n).
StructureTable structure_recursive(const ValidatedParams& vp, std::int64_t n_max);

// Smallest C_0 >= 0 with G(n) > margin for n = 1..n_max (0 when n_max = 0).
double choose_c0(const ValidatedParams& vp, std::int64_t n_max, double margin);

enum class SpectrumMethod { UnifiedSum, Blocks, StructureDiff };

struct SpectrumReport {
  std::vector<double> energies;
  SpectrumMethod method = SpectrumMethod::UnifiedSum;
  SipParams params;
  bool monotone = true;
};

SpectrumReport energy_spectrum(const ValidatedParams& vp, std::int64_t n_max, SpectrumMethod method);

// |a - b| / max(1, |a|, |b|).
double relative_deviation(double a, double b);

// Largest pairwise relative deviation across the three spectrum methods.
double method_deviation(const ValidatedParams& vp, std::int64_t n_max);

bool is_cyclic(const ValidatedParams& vp);

// For delta = 0 the remainders repeat as C * (omega_0, ..., omega_{k-1}).
std::optional<std::vector<double>> remainder_cycle(const ValidatedParams& vp);

// Structure function over nu = N0 - n/k with graded parts indexed by Fock
// grade. pin_level, when given, is the tower level shifted to F = 0.
StructureFn structure_as_fn(const ValidatedParams& vp, std::optional<std::int64_t> pin_level = std::nullopt);

// Structure function for a window anchored at the params' N0. With
// lowest_weight the bottom window state is pinned to F = 0. Throws
// Error{NegativeStructure} if any window value is negative.
StructureFn structure_for_window(const ValidatedParams& vp, const FockWindow& window, bool lowest_weight);

// Tower level n = k (N0 - nu) of a number eigenvalue.
std::int64_t tower_level(const ValidatedParams& vp, double nu);

}  // namespace zkosc
