#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "zkosc/error.hpp"
#include "zkosc/graded_fock.hpp"

using namespace zkosc;

namespace {

std::vector<double> nus(const FockWindow& w) {
  std::vector<double> out;
  for (std::size_t j = 0; j < w.depth(); ++j) out.push_back(w.nu(j));
  return out;
}

std::vector<int> grades(const FockWindow& w) {
  std::vector<int> out;
  for (std::size_t j = 0; j < w.depth(); ++j) out.push_back(w.grade(j));
  return out;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no zkosc::Error thrown";
  return ErrorKind::ConfigParse;
}

}  // namespace

TEST(FockWindow, DescendingHalfSteps) {
  const auto w = make_window(2, 4, 10, Convention::Descending);
  EXPECT_EQ(nus(w), (std::vector<double>{10, 9.5, 9, 8.5}));
  EXPECT_EQ(grades(w), (std::vector<int>{0, 1, 0, 1}));
  EXPECT_EQ(w.top_index(), 0u);
  EXPECT_EQ(w.bottom_index(), 3u);
}

TEST(FockWindow, AscendingSingleGrade) {
  const auto w = make_window(1, 3, 0, Convention::Ascending);
  EXPECT_EQ(nus(w), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(grades(w), (std::vector<int>{0, 0, 0}));
}

TEST(FockWindow, ExactRationalLabels) {
  const auto w = make_window(3, 4, 5, Convention::Descending);
  EXPECT_EQ(w.state(1).nu, Rational(14, 3));
  EXPECT_EQ(w.state(3).nu, Rational(4));
}

TEST(FockWindow, DescendingBelowZeroRejected) {
  EXPECT_EQ(kind_of([] { make_window(3, 4, 0, Convention::Descending); }), ErrorKind::InvalidWindow);
  EXPECT_NO_THROW(make_window(3, 4, 1, Convention::Descending));
  EXPECT_NO_THROW(make_window(3, 4, 1, Convention::Descending));
  EXPECT_EQ(kind_of([] { make_window(3, 5, 1, Convention::Descending); }), ErrorKind::InvalidWindow);
}

TEST(FockWindow, ErrorPaths) {
  EXPECT_EQ(kind_of([] { make_window(0, 4, 1, Convention::Ascending); }), ErrorKind::ZeroK);
  EXPECT_EQ(kind_of([] { make_window(-2, 4, 1, Convention::Ascending); }), ErrorKind::ZeroK);
  EXPECT_EQ(kind_of([] { make_window(2, 1, 1, Convention::Ascending); }), ErrorKind::InvalidWindow);
  EXPECT_EQ(kind_of([] { make_window(2, 4, -1, Convention::Ascending); }), ErrorKind::InvalidWindow);
}

TEST(FockWindow, LowerNeighbour) {
  const auto asc = make_window(2, 3, 0, Convention::Ascending);
  EXPECT_FALSE(asc.has_lower(0));
  ASSERT_TRUE(asc.has_lower(2));
  EXPECT_EQ(asc.lower(2), 1u);

  const auto desc = make_window(2, 3, 4, Convention::Descending);
  EXPECT_FALSE(desc.has_lower(2));
  ASSERT_TRUE(desc.has_lower(0));
  EXPECT_EQ(desc.lower(0), 1u);
}

TEST(TowerGrade, Examples) {
  EXPECT_EQ(tower_grade(5, 3), 2);
  EXPECT_EQ(tower_grade(0, 7), 0);
  EXPECT_EQ(tower_grade(4, 4), 0);
}

TEST(TowerGrade, NegativeLevelRejected) {
  EXPECT_EQ(kind_of([] { tower_grade(-1, 3); }), ErrorKind::NegativeLevel);
}

TEST(GradeOf, FromNuAlone) {
  EXPECT_EQ(grade_of(Rational(4, 3), 3), 1);
  EXPECT_EQ(grade_of(Rational(14, 3), 3), 2);
  EXPECT_EQ(grade_of(Rational(7), 3), 0);
  EXPECT_EQ(grade_of(Rational(1, 2), 2), 1);
}

TEST(GradedFockProperty, ConsecutiveStatesCoverAllGrades) {
  for (int k = 1; k <= 7; ++k) {
    for (auto conv : {Convention::Ascending, Convention::Descending}) {
      const std::int64_t n0 = 6;
      const std::size_t depth = static_cast<std::size_t>(k) * 4 + 1;
      const auto w = make_window(k, depth, n0, conv);
      for (std::size_t start = 0; start + static_cast<std::size_t>(k) <= w.depth(); ++start) {
        std::multiset<int> seen;
        for (int t = 0; t < k; ++t) seen.insert(w.grade(start + static_cast<std::size_t>(t)));
        std::multiset<int> expected;
        for (int g = 0; g < k; ++g) expected.insert(g);
        EXPECT_EQ(seen, expected) << "k=" << k << " start=" << start;
      }
    }
  }
}

TEST(GradedFockProperty, GradeRoundTripFromNu) {
  for (int k = 1; k <= 6; ++k) {
    const auto w = make_window(k, static_cast<std::size_t>(k) * 3, 3, Convention::Descending);
    for (const auto& st : w.states()) EXPECT_EQ(grade_of(st.nu, k), st.grade);
  }
}

TEST(GradedFockProperty, FockGradeIsNegatedTowerGrade) {
  for (int k = 1; k <= 8; ++k) {
    const std::int64_t n0 = 4;
    const auto w = make_window(k, static_cast<std::size_t>(k) * 3, n0, Convention::Descending);
    for (std::size_t n = 0; n < w.depth(); ++n) {
      const auto level = static_cast<std::int64_t>(n);
      const int fock = fock_grade_of_tower(level, k);
      EXPECT_EQ(fock, w.grade(n));
      EXPECT_EQ(fock, (k - tower_grade(level, k)) % k);
    }
  }
}
