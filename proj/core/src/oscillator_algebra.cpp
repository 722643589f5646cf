#include "zkosc/oscillator_algebra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "zkosc/error.hpp"

namespace zkosc {

namespace {

using cd = std::complex<double>;

double max_abs(const ComplexMatrix& m, std::optional<std::size_t> excluded = std::nullopt) {
  double worst = 0.0;
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    if (excluded && static_cast<std::size_t>(r) == *excluded) continue;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (excluded && static_cast<std::size_t>(c) == *excluded) continue;
      worst = std::max(worst, std::abs(m(r, c)));
    }
  }
  return worst;
}

ComplexMatrix diagonal_of(const FockWindow& window, const std::function<cd(std::size_t)>& entry) {
  const auto dim = static_cast<Eigen::Index>(window.depth());
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  for (Eigen::Index j = 0; j < dim; ++j) m(j, j) = entry(static_cast<std::size_t>(j));
  return m;
}

// exp(2 pi i num/den). Quarter turns are returned exactly.
cd root_of_unity(std::int64_t num, std::int64_t den) {
  std::int64_t r = num % den;
  if (r < 0) r += den;
  if ((4 * r) % den == 0) {
    switch ((4 * r) / den) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(den);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

StructureFn linear_structure() {
  return StructureFn{[](double nu) { return nu; }, std::nullopt};
}

OperatorMatrix build_identity(const FockWindow& window) {
  const auto dim = static_cast<Eigen::Index>(window.depth());
  return {OperatorKind::Identity, -1, ComplexMatrix::Identity(dim, dim)};
}

OperatorMatrix build_number(const FockWindow& window) {
  return {OperatorKind::Number, -1, diagonal_of(window, [&](std::size_t j) { return cd(window.nu(j)); })};
}

Ladders build_ladders(const FockWindow& window, const StructureFn& F) {
  const auto dim = static_cast<Eigen::Index>(window.depth());
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (std::size_t j = 0; j < window.depth(); ++j) {
    const double value = F(window.nu(j));
    if (!(value >= 0.0)) {
      throw Error(ErrorKind::NegativeStructure,
                  "structure function is " + std::to_string(value) + " at nu = " + std::to_string(window.nu(j)));
    }
    if (!window.has_lower(j)) continue;
    a(static_cast<Eigen::Index>(window.lower(j)), static_cast<Eigen::Index>(j)) = std::sqrt(value);
  }
  ComplexMatrix adag = a.adjoint();
  return {{OperatorKind::Annihilation, -1, std::move(a)}, {OperatorKind::Creation, -1, std::move(adag)}};
}

OperatorMatrix build_grading(const FockWindow& window) { return build_grading_power(window, 1); }

OperatorMatrix build_grading_power(const FockWindow& window, std::int64_t t) {
  // exp(2 pi i t nu) only depends on the grade g: exp(2 pi i t g / k).
  return {OperatorKind::Grading, -1,
          diagonal_of(window, [&](std::size_t j) { return root_of_unity(t * window.grade(j), window.k()); })};
}

OperatorMatrix build_projector(const FockWindow& window, int s) {
  if (s < 0 || s >= window.k()) {
    throw Error(ErrorKind::BadGradeIndex, "projector grade " + std::to_string(s) + " outside [0, k)");
  }
  return {OperatorKind::Projector, s, diagonal_of(window, [&](std::size_t j) { return cd(window.grade(j) == s ? 1.0 : 0.0); })};
}

OperatorMatrix build_projector_from_grading(const FockWindow& window, int s) {
  if (s < 0 || s >= window.k()) {
    throw Error(ErrorKind::BadGradeIndex, "projector grade " + std::to_string(s) + " outside [0, k)");
  }
  const int k = window.k();
  const auto dim = static_cast<Eigen::Index>(window.depth());
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (int t = 0; t < k; ++t) {
    sum += root_of_unity(-static_cast<std::int64_t>(t) * s, k) * build_grading_power(window, t).entries;
  }
  return {OperatorKind::Projector, s, sum / static_cast<double>(k)};
}

double RelationReport::max_residual() const {
  double worst = 0.0;
  for (const auto& [name, value] : residuals) worst = std::max(worst, value);
  return worst;
}

GeneratorSet build_generators(const FockWindow& window, const StructureFn& F) {
  auto ladders = build_ladders(window, F);
  GeneratorSet g{build_identity(window), build_number(window), std::move(ladders.annihilation),
                 std::move(ladders.creation), build_grading(window), {}};
  for (int s = 0; s < window.k(); ++s) g.projectors.push_back(build_projector(window, s));
  return g;
}

RelationReport check_relations(const FockWindow& window, const StructureFn& F, const GeneratorSet& gens,
                               double tol, bool include_grading) {
  const int k = window.k();
  const double inv_k = 1.0 / k;
  const ComplexMatrix& I = gens.identity.entries;
  const ComplexMatrix& N = gens.number.entries;
  const ComplexMatrix& a = gens.annihilation.entries;
  const ComplexMatrix& ad = gens.creation.entries;
  const std::size_t top = window.top_index();

  RelationReport report;
  report.tolerance = tol;
  report.boundary_excluded = true;
  report.boundary_index = top;
  auto& r = report.residuals;

  ComplexMatrix F_N = diagonal_of(window, [&](std::size_t j) { return cd(F(window.nu(j))); });
  // F(N + 1/k) is not evaluated on the top state: its image under a^dagger is
  // outside the window and the entry is excluded below.
  ComplexMatrix F_shift = diagonal_of(window, [&](std::size_t j) {
    return cd(j == top ? 0.0 : F(window.nu(j) + inv_k));
  });

  r["hermiticity_ladder"] = max_abs(ad - a.adjoint());
  r["hermiticity_number"] = max_abs(N - N.adjoint());
  r["commutator_a_N"] = max_abs(a * N - N * a - inv_k * a, top);
  r["commutator_adag_N"] = max_abs(ad * N - N * ad + inv_k * ad, top);
  r["adag_a"] = max_abs(ad * a - F_N);
  r["a_adag"] = max_abs(a * ad - F_shift, top);

  if (include_grading) {
    const ComplexMatrix& T = gens.grading.entries;
    const cd phase = root_of_unity(-1, k);
    ComplexMatrix T_product = I;
    for (int t = 0; t < k; ++t) T_product = T_product * T;
    r["grading_power"] = max_abs(build_grading_power(window, k).entries - I);
    r["grading_power_product"] = max_abs(T_product - I);
    r["grading_unitarity"] = max_abs(T.adjoint() * T - I);
    r["commutator_N_T"] = max_abs(N * T - T * N);
    r["grading_exchange_creation"] = max_abs(ad * T - phase * (T * ad));
    r["grading_exchange_annihilation"] = max_abs(T.adjoint() * a - std::conj(phase) * (a * T.adjoint()));

    double ortho = 0.0, herm = 0.0, commute = 0.0, up = 0.0, down = 0.0;
    ComplexMatrix total = ComplexMatrix::Zero(I.rows(), I.cols());
    for (int s = 0; s < k; ++s) {
      const ComplexMatrix& Ps = gens.projectors.at(static_cast<std::size_t>(s)).entries;
      const ComplexMatrix& Pnext = gens.projectors.at(static_cast<std::size_t>((s + 1) % k)).entries;
      const ComplexMatrix& Pprev = gens.projectors.at(static_cast<std::size_t>((s + k - 1) % k)).entries;
      total += Ps;
      herm = std::max(herm, max_abs(Ps - Ps.adjoint()));
      commute = std::max(commute, max_abs(N * Ps - Ps * N));
      up = std::max(up, max_abs(ad * Ps - Pnext * ad));
      down = std::max(down, max_abs(a * Ps - Pprev * a));
      for (int t = 0; t < k; ++t) {
        const ComplexMatrix& Pt = gens.projectors.at(static_cast<std::size_t>(t)).entries;
        ortho = std::max(ortho, max_abs(Ps * Pt - (s == t ? Ps : ComplexMatrix::Zero(I.rows(), I.cols()))));
      }
    }
    r["projector_hermiticity"] = herm;
    r["commutator_N_projector"] = commute;
    r["projector_orthogonality"] = ortho;
    r["projector_transport_creation"] = up;
    r["projector_transport_annihilation"] = down;
    r["projector_completeness"] = max_abs(total - I);
  }

  report.pass = std::all_of(r.begin(), r.end(), [&](const auto& kv) { return kv.second <= tol; });
  return report;
}

RelationReport check_algebra(const FockWindow& window, const StructureFn& F, double tol, bool include_grading) {
  return check_relations(window, F, build_generators(window, F), tol, include_grading);
}

double decomposition_residual(const FockWindow& window, const StructureFn& F) {
  if (!F.graded) return 0.0;
  double worst = 0.0;
  for (std::size_t j = 0; j < window.depth(); ++j) {
    const double nu = window.nu(j);
    const auto& g = F.graded->by_grade.at(static_cast<std::size_t>(window.grade(j)));
    worst = std::max(worst, std::abs(F(nu) - F.graded->smooth(nu) - g(nu)));
  }
  return worst;
}

}  // namespace zkosc
