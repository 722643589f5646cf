#pragma once

// Truncated Z_k-graded Fock space.
//
// Two labelings of the same tower are supported:
//   Ascending   |j/k>        nu_j = j/k          (built up from the vacuum)
//   Descending  |N0 - j/k>   nu_j = N0 - j/k     (built down from the anchor N0)
// The grade of a state is defined from nu alone: the g in [0, k) with
// nu - g/k an integer. For the descending tower this gives
// fock_grade = (-j) mod k, which differs in sign from the tower index
// n mod k used by the remainder bookkeeping.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/rational.hpp>

namespace zkosc {

using Rational = boost::rational<std::int64_t>;

enum class Convention { Ascending, Descending };

struct StateLabel {
  std::size_t index = 0;
  Rational nu;
  int grade = 0;

  double nu_value() const { return boost::rational_cast<double>(nu); }
};

class FockWindow {
 public:
  int k() const noexcept { return k_; }
  std::size_t depth() const noexcept { return states_.size(); }
  std::int64_t n0() const noexcept { return n0_; }
  Convention convention() const noexcept { return convention_; }

  const std::vector<StateLabel>& states() const noexcept { return states_; }
  const StateLabel& state(std::size_t j) const { return states_.at(j); }
  double nu(std::size_t j) const { return states_.at(j).nu_value(); }
  int grade(std::size_t j) const { return states_.at(j).grade; }

  // Index of the state with the largest / smallest number eigenvalue.
  std::size_t top_index() const noexcept;
  std::size_t bottom_index() const noexcept;

  // Index of the state whose eigenvalue is nu_j - 1/k, if it is in the window.
  bool has_lower(std::size_t j) const noexcept;
  std::size_t lower(std::size_t j) const noexcept;

 private:
  friend FockWindow make_window(int k, std::size_t depth, std::int64_t n0, Convention convention);
  FockWindow() = default;

  int k_ = 1;
  std::int64_t n0_ = 0;
  Convention convention_ = Convention::Ascending;
  std::vector<StateLabel> states_;
};

// Throws Error{ZeroK} for k < 1, Error{InvalidWindow} for depth < 2, n0 < 0,
// or a descending window reaching below nu = 0 (depth > k*n0 + 1).
FockWindow make_window(int k, std::size_t depth, std::int64_t n0, Convention convention);

// n mod k: the step index s selected by the cyclic Kronecker delta Delta_{s,n}.
// Throws Error{NegativeLevel} for n < 0, Error{ZeroK} for k < 1.
int tower_grade(std::int64_t n, int k);

// Fock grade of the descending state |N0 - n/k> for integer N0: (-n) mod k.
int fock_grade_of_tower(std::int64_t n, int k);

// The g in [0, k) with nu - g/k integral. nu must be a multiple of 1/k.
int grade_of(const Rational& nu, int k);

}  // namespace zkosc
