#include "zkosc/graded_fock.hpp"

#include <string>

#include "zkosc/error.hpp"

namespace zkosc {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::size_t FockWindow::top_index() const noexcept {
  return convention_ == Convention::Ascending ? states_.size() - 1 : 0;
}

std::size_t FockWindow::bottom_index() const noexcept {
  return convention_ == Convention::Ascending ? 0 : states_.size() - 1;
}

bool FockWindow::has_lower(std::size_t j) const noexcept {
  return convention_ == Convention::Ascending ? j > 0 : j + 1 < states_.size();
}

std::size_t FockWindow::lower(std::size_t j) const noexcept {
  return convention_ == Convention::Ascending ? j - 1 : j + 1;
}

FockWindow make_window(int k, std::size_t depth, std::int64_t n0, Convention convention) {
  if (k < 1) throw Error(ErrorKind::ZeroK, "grading order k must be at least 1, got " + std::to_string(k));
  if (depth < 2) throw Error(ErrorKind::InvalidWindow, "window depth must be at least 2");
  if (n0 < 0) throw Error(ErrorKind::InvalidWindow, "anchor n0 must be nonnegative");
  if (convention == Convention::Descending) {
    const auto max_depth = static_cast<std::size_t>(k) * static_cast<std::size_t>(n0) + 1;
    if (depth > max_depth) {
      throw Error(ErrorKind::InvalidWindow, "descending window of depth " + std::to_string(depth) +
                                                " reaches below nu = 0 (max depth k*n0+1 = " +
                                                std::to_string(max_depth) + ")");
    }
  }

  FockWindow w;
  w.k_ = k;
  w.n0_ = n0;
  w.convention_ = convention;
  w.states_.reserve(depth);
  for (std::size_t j = 0; j < depth; ++j) {
    const Rational step(static_cast<std::int64_t>(j), k);
    StateLabel label;
    label.index = j;
    label.nu = convention == Convention::Ascending ? step : Rational(n0) - step;
    label.grade = grade_of(label.nu, k);
    w.states_.push_back(label);
  }
  return w;
}

namespace {

void require_level(std::int64_t n, int k) {
  if (k < 1) throw Error(ErrorKind::ZeroK, "grading order k must be at least 1, got " + std::to_string(k));
  if (n < 0) throw Error(ErrorKind::NegativeLevel, "tower level must be nonnegative, got " + std::to_string(n));
}

}  // namespace

int tower_grade(std::int64_t n, int k) {
  require_level(n, k);
  return static_cast<int>(floor_mod(n, k));
}

int fock_grade_of_tower(std::int64_t n, int k) {
  require_level(n, k);
  return static_cast<int>(floor_mod(-n, k));
}

int grade_of(const Rational& nu, int k) {
  // nu = p/q in lowest terms; k*nu must be an integer.
  const Rational scaled = nu * Rational(k);
  if (scaled.denominator() != 1) {
    throw Error(ErrorKind::InvalidWindow, "eigenvalue is not a multiple of 1/k");
  }
  return static_cast<int>(floor_mod(scaled.numerator(), k));
}

}  // namespace zkosc
