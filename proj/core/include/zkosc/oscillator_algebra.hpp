#pragma once

// Dense matrix realization of the Z_k-graded generalized deformed oscillator
// {I, a, a^dagger, N, T, Pi_s} on a truncated Fock window, plus a checker for
// every defining relation.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "zkosc/graded_fock.hpp"

namespace zkosc {

using ComplexMatrix = Eigen::MatrixXcd;

enum class OperatorKind { Identity, Number, Annihilation, Creation, Grading, Projector, Custom };

struct OperatorMatrix {
  OperatorKind kind = OperatorKind::Custom;
  int grade = -1;  // projector grade s, -1 otherwise
  ComplexMatrix entries;

  std::size_t dim() const { return static_cast<std::size_t>(entries.rows()); }
};

// f(nu) + g_{grade(nu)}(nu). The graded parts are indexed by Fock grade.
struct GradedParts {
  std::function<double(double)> smooth;
  std::vector<std::function<double(double)>> by_grade;
};

struct StructureFn {
  std::function<double(double)> value;
  std::optional<GradedParts> graded;

  double operator()(double nu) const { return value(nu); }
};

// Undeformed structure function F(nu) = nu.
StructureFn linear_structure();

OperatorMatrix build_identity(const FockWindow& window);
OperatorMatrix build_number(const FockWindow& window);

struct Ladders {
  OperatorMatrix annihilation;
  OperatorMatrix creation;
};

// a|nu> = sqrt(F(nu)) |nu - 1/k>; a^dagger is the conjugate transpose.
// Throws Error{NegativeStructure} if F < 0 on a window state.
Ladders build_ladders(const FockWindow& window, const StructureFn& F);

// T = exp(2 pi i N), built entrywise from nu.
OperatorMatrix build_grading(const FockWindow& window);

// T^t = exp(2 pi i t N), also built entrywise, so T^k = I holds exactly.
OperatorMatrix build_grading_power(const FockWindow& window, std::int64_t t);

// Pi_s by eigen-action: 1 on states of Fock grade s, 0 elsewhere.
// Throws Error{BadGradeIndex} unless 0 <= s < k.
OperatorMatrix build_projector(const FockWindow& window, int s);

// (1/k) sum_t exp(-2 pi i t s / k) T^t. Agrees with build_projector(window, s).
OperatorMatrix build_projector_from_grading(const FockWindow& window, int s);

struct GeneratorSet {
  OperatorMatrix identity;
  OperatorMatrix number;
  OperatorMatrix annihilation;
  OperatorMatrix creation;
  OperatorMatrix grading;
  std::vector<OperatorMatrix> projectors;
};

GeneratorSet build_generators(const FockWindow& window, const StructureFn& F);

struct RelationReport {
  std::map<std::string, double> residuals;
  bool boundary_excluded = false;
  std::size_t boundary_index = 0;
  double tolerance = 0.0;
  bool pass = false;

  double max_residual() const;
};

inline constexpr double kDefaultAlgebraTolerance = 1e-10;

// Residuals of every defining relation. The aa^dagger relation and the
// ladder commutators skip the row and column of the top-nu state, where
// truncation removes the image of a^dagger.
RelationReport check_relations(const FockWindow& window, const StructureFn& F,
                               const GeneratorSet& generators, double tol,
                               bool include_grading = true);

RelationReport check_algebra(const FockWindow& window, const StructureFn& F,
                             double tol = kDefaultAlgebraTolerance, bool include_grading = true);

// Largest |F(nu) - f(nu) - g_grade(nu)| over the window; 0 without a decomposition.
double decomposition_residual(const FockWindow& window, const StructureFn& F);

}  // namespace zkosc
