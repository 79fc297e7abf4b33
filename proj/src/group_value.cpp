#include "kxval/group_value.hpp"

#include "kxval/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace kxval {

GroupValue GroupValue::infinity(int dim) {
  GroupValue v = zero(dim);
  v.infinite_ = true;
  return v;
}

GroupValue GroupValue::zero(int dim) {
  if (dim < 1) fail(errc::dimension_mismatch, "dimension must be >= 1");
  GroupValue v;
  v.coords_.assign(static_cast<std::size_t>(dim), Rational(0));
  return v;
}

GroupValue GroupValue::scalar(Rational v) {
  GroupValue g;
  g.coords_ = {std::move(v)};
  return g;
}

GroupValue GroupValue::vec(std::vector<Rational> coords) {
  if (coords.empty()) fail(errc::dimension_mismatch, "dimension must be >= 1");
  GroupValue g;
  g.coords_ = std::move(coords);
  return g;
}

const std::vector<Rational>& GroupValue::coords() const {
  if (infinite_)
    fail(errc::infinite_slope, "no coordinates on the infinite value");
  return coords_;
}

std::string GroupValue::str() const {
  if (infinite_) return "inf";
  if (coords_.size() == 1) return rational_str(coords_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ",";
    out += rational_str(coords_[i]);
  }
  out += ")";
  return out;
}

GroupValue GroupValue::scaled(const Rational& factor) const {
  if (infinite_) return *this;
  GroupValue g = *this;
  for (auto& c : g.coords_) c *= factor;
  return g;
}

GroupValue operator+(const GroupValue& u, const GroupValue& v) {
  if (u.is_infinity()) return u;
  if (v.is_infinity()) return v;
  if (u.dim() != v.dim())
    fail(errc::dimension_mismatch, "cannot add " + u.str() + " and " + v.str());
  GroupValue g = u;
  for (std::size_t i = 0; i < g.coords_.size(); ++i) g.coords_[i] += v.coords_[i];
  return g;
}

GroupValue operator-(const GroupValue& u, const GroupValue& v) {
  if (u.is_infinity() || v.is_infinity())
    fail(errc::infinite_slope,
         "cannot subtract with an infinite value: " + u.str() + ", " + v.str());
  if (u.dim() != v.dim())
    fail(errc::dimension_mismatch,
         "cannot subtract " + v.str() + " from " + u.str());
  GroupValue g = u;
  for (std::size_t i = 0; i < g.coords_.size(); ++i) g.coords_[i] -= v.coords_[i];
  return g;
}

std::strong_ordering vg_compare(const GroupValue& u, const GroupValue& v) {
  if (u.is_infinity() && v.is_infinity()) return std::strong_ordering::equal;
  if (u.is_infinity()) return std::strong_ordering::greater;
  if (v.is_infinity()) return std::strong_ordering::less;
  if (u.dim() != v.dim())
    fail(errc::dimension_mismatch, "cannot compare " + u.str() + " and " + v.str());
  for (std::size_t i = 0; i < u.coords_.size(); ++i) {
    if (u.coords_[i] < v.coords_[i]) return std::strong_ordering::less;
    if (u.coords_[i] > v.coords_[i]) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

bool operator==(const GroupValue& u, const GroupValue& v) {
  return vg_compare(u, v) == std::strong_ordering::equal;
}
bool operator!=(const GroupValue& u, const GroupValue& v) { return !(u == v); }
bool operator<(const GroupValue& u, const GroupValue& v) {
  return vg_compare(u, v) == std::strong_ordering::less;
}
bool operator<=(const GroupValue& u, const GroupValue& v) {
  return vg_compare(u, v) != std::strong_ordering::greater;
}
bool operator>(const GroupValue& u, const GroupValue& v) {
  return vg_compare(u, v) == std::strong_ordering::greater;
}
bool operator>=(const GroupValue& u, const GroupValue& v) {
  return vg_compare(u, v) != std::strong_ordering::less;
}

GroupValue vg_affine(const GroupValue& gamma, unsigned long i,
                     const GroupValue& delta) {
  if (i == 0) return gamma;
  if (gamma.is_infinity()) return gamma;
  if (delta.is_infinity()) return delta;
  return gamma + delta.scaled(Rational(i));
}

GroupValue vg_slope(const GroupValue& top, const GroupValue& bottom,
                    unsigned long run) {
  if (run == 0) fail(errc::infinite_slope, "zero run");
  if (top.is_infinity() || bottom.is_infinity())
    fail(errc::infinite_slope,
         "slope needs finite endpoints: " + top.str() + ", " + bottom.str());
  return (top - bottom).scaled(Rational(1, run));
}

std::pair<int, int> vg_subgroup_ranks(const std::vector<GroupValue>& generators) {
  if (generators.empty()) return {0, 0};
  int d = -1;
  for (const auto& g : generators) {
    if (g.is_infinity())
      fail(errc::precondition_violated, "generators must be finite");
    if (d == -1)
      d = g.dim();
    else if (g.dim() != d)
      fail(errc::dimension_mismatch, "generators of mixed dimension");
  }

  // Triangularized basis keyed by pivot index, leading coefficients 1.
  std::map<long, std::vector<Rational>> basis;
  auto pivot_of = [](const std::vector<Rational>& row) {
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) return static_cast<long>(i);
    return static_cast<long>(-1);
  };
  for (const auto& g : generators) {
    std::vector<Rational> row = g.coords();
    for (;;) {
      long p = pivot_of(row);
      if (p < 0) break;
      auto hit = basis.find(p);
      if (hit == basis.end()) {
        Rational lead = row[static_cast<std::size_t>(p)];
        for (auto& c : row) c /= lead;
        basis.emplace(p, std::move(row));
        break;
      }
      Rational factor = row[static_cast<std::size_t>(p)];
      for (std::size_t i = 0; i < row.size(); ++i)
        row[i] -= factor * hit->second[i];
    }
  }

  std::set<long> levels;
  for (const auto& entry : basis) levels.insert(entry.first);
  return {static_cast<int>(levels.size()), static_cast<int>(basis.size())};
}

} // namespace kxval
