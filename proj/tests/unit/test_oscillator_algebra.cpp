#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "zkosc/error.hpp"
#include "zkosc/oscillator_algebra.hpp"
#include "zkosc/shape_invariance.hpp"

using namespace zkosc;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

SipParams positive_params(int k, std::int64_t n0) {
  SipParams p;
  p.k = k;
  p.a0 = 0.7;
  p.delta = 0.3;
  p.n0 = n0;
  for (int s = 0; s < k; ++s) {
    const double w = 1.0 + 0.5 * s;
    p.omega.push_back(w);
    p.sigma.push_back(w * (1.0 + p.delta * s / k));
  }
  return p;
}

StructureFn zero_structure() { return StructureFn{[](double) { return 0.0; }, std::nullopt}; }

}  // namespace

TEST(NumberOperator, Diagonals) {
  const auto n2 = build_number(make_window(2, 3, 0, Convention::Ascending)).entries;
  EXPECT_EQ(n2.diagonal().real(), Eigen::Vector3d(0, 0.5, 1));
  const auto n1 = build_number(make_window(1, 3, 0, Convention::Ascending)).entries;
  EXPECT_EQ(n1.diagonal().real(), Eigen::Vector3d(0, 1, 2));
  const auto n3 = build_number(make_window(3, 2, 5, Convention::Descending)).entries;
  EXPECT_EQ(n3(0, 0).real(), 5.0);
  EXPECT_DOUBLE_EQ(n3(1, 1).real(), 14.0 / 3.0);
  EXPECT_EQ(n3(0, 1), cd(0.0));
}

TEST(Ladders, UndeformedOscillator) {
  const auto w = make_window(1, 3, 0, Convention::Ascending);
  const auto a = build_ladders(w, linear_structure()).annihilation.entries;
  EXPECT_DOUBLE_EQ(a(0, 1).real(), 1.0);
  EXPECT_DOUBLE_EQ(a(1, 2).real(), std::sqrt(2.0));
  EXPECT_EQ(a.cwiseAbs().sum(), 1.0 + std::sqrt(2.0));
}

TEST(Ladders, HalfStepAmplitudes) {
  const auto w = make_window(2, 3, 0, Convention::Ascending);
  const auto l = build_ladders(w, linear_structure());
  EXPECT_DOUBLE_EQ(l.annihilation.entries(0, 1).real(), std::sqrt(0.5));
  EXPECT_DOUBLE_EQ(l.annihilation.entries(1, 2).real(), 1.0);
  EXPECT_TRUE(l.creation.entries.isApprox(l.annihilation.entries.adjoint()));
}

TEST(Ladders, ZeroStructureGivesZeroMatrices) {
  const auto w = make_window(3, 6, 2, Convention::Descending);
  const auto l = build_ladders(w, zero_structure());
  EXPECT_TRUE(l.annihilation.entries.isZero(0.0));
  EXPECT_TRUE(l.creation.entries.isZero(0.0));
}

TEST(Ladders, NegativeStructureRejected) {
  const auto w = make_window(2, 4, 0, Convention::Ascending);
  const StructureFn bad{[](double nu) { return 1.0 - nu; }, std::nullopt};
  try {
    build_ladders(w, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NegativeStructure);
  }
}

TEST(Grading, KleinOperatorForTwoGrades) {
  const auto t = build_grading(make_window(2, 6, 3, Convention::Descending)).entries;
  for (Eigen::Index j = 0; j < t.rows(); ++j) EXPECT_EQ(t(j, j), cd(j % 2 == 0 ? 1.0 : -1.0));
}

TEST(Grading, TrivialForOneGrade) {
  const auto t = build_grading(make_window(1, 5, 0, Convention::Ascending)).entries;
  EXPECT_TRUE(t.isIdentity(0.0));
}

TEST(Grading, ThirdRootOfUnity) {
  const auto w = make_window(3, 4, 0, Convention::Ascending);
  const auto t = build_grading(w).entries;
  ASSERT_DOUBLE_EQ(w.nu(2), 2.0 / 3.0);
  const cd expected = std::polar(1.0, 4.0 * kPi / 3.0);
  EXPECT_NEAR(std::abs(t(2, 2) - expected), 0.0, 1e-15);
}

TEST(Grading, PowerKIsExactIdentity) {
  for (int k = 1; k <= 7; ++k) {
    const auto w = make_window(k, static_cast<std::size_t>(3 * k), 5, Convention::Descending);
    EXPECT_TRUE(build_grading_power(w, k).entries.isIdentity(0.0)) << "k=" << k;
  }
}

TEST(Projector, AscendingPicksGrade) {
  const auto w = make_window(3, 7, 0, Convention::Ascending);
  const auto p = build_projector(w, 1).entries;
  for (std::size_t j = 0; j < w.depth(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    const bool picked = w.state(j).nu == Rational(1, 3) || w.state(j).nu == Rational(4, 3);
    EXPECT_EQ(p(jj, jj), cd(picked ? 1.0 : 0.0)) << j;
  }
}

TEST(Projector, TwoGradeParityProjectors) {
  const auto w = make_window(2, 8, 4, Convention::Descending);
  const auto id = build_identity(w).entries;
  // (-1)^{2N} as a diagonal matrix evaluated directly from nu.
  ComplexMatrix parity = ComplexMatrix::Zero(8, 8);
  for (Eigen::Index j = 0; j < 8; ++j) parity(j, j) = std::cos(2.0 * kPi * w.nu(static_cast<std::size_t>(j)));
  const ComplexMatrix even = 0.5 * (id + parity), odd = 0.5 * (id - parity);
  EXPECT_LE((build_projector(w, 0).entries - even).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((build_projector(w, 1).entries - odd).cwiseAbs().maxCoeff(), 1e-15);
  // Pi_1 selects |N0 - n - 1/2>.
  for (Eigen::Index j = 0; j < 8; ++j) EXPECT_EQ(build_projector(w, 1).entries(j, j), cd(j % 2 == 1 ? 1.0 : 0.0));
}

TEST(Projector, Completeness) {
  for (int k = 1; k <= 6; ++k) {
    const auto w = make_window(k, 13, 13, Convention::Descending);
    ComplexMatrix sum = ComplexMatrix::Zero(13, 13);
    for (int s = 0; s < k; ++s) sum += build_projector(w, s).entries;
    EXPECT_TRUE(sum.isIdentity(0.0));
  }
}

TEST(Projector, FromGradingMatchesEigenAction) {
  for (int k = 1; k <= 6; ++k) {
    const auto w = make_window(k, 11, 0, Convention::Ascending);
    for (int s = 0; s < k; ++s) {
      const auto diff = build_projector_from_grading(w, s).entries - build_projector(w, s).entries;
      EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-14) << "k=" << k << " s=" << s;
    }
  }
}

TEST(Projector, BadGradeIndex) {
  const auto w = make_window(3, 4, 0, Convention::Ascending);
  for (int s : {-1, 3, 7}) {
    try {
      build_projector(w, s);
      FAIL() << s;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::BadGradeIndex);
    }
  }
}

TEST(CheckAlgebra, UndeformedOscillatorPasses) {
  const auto w = make_window(1, 8, 0, Convention::Ascending);
  const auto report = check_algebra(w, linear_structure(), 1e-12);
  EXPECT_TRUE(report.pass) << report.max_residual();
  EXPECT_TRUE(report.boundary_excluded);
  EXPECT_EQ(report.boundary_index, w.top_index());
}

TEST(CheckAlgebra, ShapeInvariantStructurePasses) {
  const auto vp = validate(positive_params(3, 4));
  const auto w = make_window(3, 12, 4, Convention::Descending);
  const auto F = structure_for_window(vp, w, true);
  const auto report = check_algebra(w, F, 1e-10);
  EXPECT_TRUE(report.pass) << report.max_residual();
  EXPECT_LE(decomposition_residual(w, F), 1e-10);
}

TEST(CheckAlgebra, CorruptedCreationDetected) {
  const auto w = make_window(2, 3, 0, Convention::Ascending);
  const auto F = linear_structure();
  auto gens = build_generators(w, F);
  gens.creation.entries(1, 0) += 0.25;
  const auto report = check_relations(w, F, gens, 1e-10);
  EXPECT_FALSE(report.pass);
  EXPECT_GT(report.residuals.at("adag_a"), 1e-3);
}

TEST(CheckAlgebra, CorruptedProjectorDetected) {
  const auto w = make_window(3, 9, 0, Convention::Ascending);
  auto gens = build_generators(w, linear_structure());
  gens.projectors[1].entries(2, 2) = 0.5;
  const auto report = check_relations(w, linear_structure(), gens, 1e-10);
  EXPECT_FALSE(report.pass);
  EXPECT_GT(report.residuals.at("projector_orthogonality"), 0.1);
}

TEST(CheckAlgebra, SingleGradeReducesToUngradedAlgebra) {
  const auto vp = validate(positive_params(1, 20));
  const auto w = make_window(1, 15, 20, Convention::Descending);
  const auto F = structure_for_window(vp, w, true);
  const auto with = check_algebra(w, F, 1e-10, true);
  const auto without = check_algebra(w, F, 1e-10, false);
  EXPECT_EQ(with.pass, without.pass);
  EXPECT_EQ(with.max_residual(), without.max_residual());
  for (const auto& [name, value] : without.residuals) EXPECT_EQ(with.residuals.at(name), value) << name;
}

TEST(CheckAlgebra, NumberOfAnnihilatedLadderEqualsStructure) {
  const auto vp = validate(positive_params(4, 5));
  const auto w = make_window(4, 16, 5, Convention::Descending);
  const auto F = structure_for_window(vp, w, true);
  const auto l = build_ladders(w, F);
  const ComplexMatrix ada = l.creation.entries * l.annihilation.entries;
  for (std::size_t j = 0; j < w.depth(); ++j) {
    const auto jj = static_cast<Eigen::Index>(j);
    EXPECT_NEAR(ada(jj, jj).real(), F(w.nu(j)), 1e-12 * std::max(1.0, std::abs(F(w.nu(j)))));
  }
  EXPECT_EQ(F(w.nu(w.bottom_index())), 0.0);
}

TEST(CheckAlgebra, GradeTransportOfLadders) {
  const auto vp = validate(positive_params(3, 6));
  const auto w = make_window(3, 18, 6, Convention::Descending);
  const auto l = build_ladders(w, structure_for_window(vp, w, true));
  const auto& adag = l.creation.entries;
  for (Eigen::Index c = 0; c < adag.cols(); ++c) {
    for (Eigen::Index r = 0; r < adag.rows(); ++r) {
      if (adag(r, c) == cd(0.0)) continue;
      EXPECT_EQ(w.grade(static_cast<std::size_t>(r)), (w.grade(static_cast<std::size_t>(c)) + 1) % 3);
    }
  }
}
