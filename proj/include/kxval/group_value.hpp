#pragma once

#include "kxval/rational.hpp"

#include <compare>
#include <utility>
#include <vector>

namespace kxval {

// Element of a fixed-rank vector group over the rationals, ordered
// lexicographically, extended by a top element `inf`. The dimension is fixed
// per computation context; mixing finite values of different dimensions is an
// error, never a coercion.
class GroupValue {
public:
  GroupValue() : coords_(1, Rational(0)) {}

  static GroupValue infinity(int dim = 1);
  static GroupValue zero(int dim = 1);
  static GroupValue scalar(Rational v);
  static GroupValue vec(std::vector<Rational> coords);

  bool is_infinity() const { return infinite_; }
  bool is_finite() const { return !infinite_; }
  int dim() const { return static_cast<int>(coords_.size()); }

  // Finite values only.
  const std::vector<Rational>& coords() const;

  // "p/q" or "inf" in rank 1, "(a1,...,an)" otherwise.
  std::string str() const;

  // Pure arithmetic; scaling does not claim anything about order unless the
  // factor is positive.
  GroupValue scaled(const Rational& factor) const;

  friend GroupValue operator+(const GroupValue& u, const GroupValue& v);
  friend GroupValue operator-(const GroupValue& u, const GroupValue& v);

private:
  bool infinite_ = false;
  std::vector<Rational> coords_; // nominal size kept for infinity too

  friend std::strong_ordering vg_compare(const GroupValue& u, const GroupValue& v);
};

// Lexicographic; infinity exceeds every finite value. Throws
// dimension_mismatch when both are finite with different dimensions.
std::strong_ordering vg_compare(const GroupValue& u, const GroupValue& v);

bool operator==(const GroupValue& u, const GroupValue& v);
bool operator!=(const GroupValue& u, const GroupValue& v);
bool operator<(const GroupValue& u, const GroupValue& v);
bool operator<=(const GroupValue& u, const GroupValue& v);
bool operator>(const GroupValue& u, const GroupValue& v);
bool operator>=(const GroupValue& u, const GroupValue& v);

// gamma + i*delta; infinity absorbs, i = 0 returns gamma untouched.
GroupValue vg_affine(const GroupValue& gamma, unsigned long i, const GroupValue& delta);

// (top - bottom)/run with run >= 1; throws infinite_slope when either
// argument is infinite.
GroupValue vg_slope(const GroupValue& top, const GroupValue& bottom, unsigned long run);

// (rank, rational rank) of the subgroup generated by the inputs, read off a
// triangularized basis: rank counts distinct pivot levels, rational rank
// counts rows. Empty input yields (0, 0).
std::pair<int, int> vg_subgroup_ranks(const std::vector<GroupValue>& generators);

} // namespace kxval
