#pragma once

#include "kxval/valuation.hpp"

namespace kxval {

struct HullPoint {
  long abscissa = 0;
  GroupValue value;
};

// Lower boundary of a point set over the value group. Slopes follow the
// falling convention (value drop per unit of abscissa), so they are strictly
// decreasing along the polygon.
struct NewtonPolygon {
  std::vector<HullPoint> vertices;
  std::vector<GroupValue> slopes;
  std::vector<HullPoint> points; // finite inputs after per-abscissa minima

  Json to_json() const; // {"vertices":[[a,"v"],...],"slopes":["s",...]}
};

// Infinite values are discarded (they never support a face); per abscissa
// only the minimum survives. Comparisons cross-multiply by integer runs, so
// no division happens during construction.
NewtonPolygon lower_hull(const std::vector<HullPoint>& points);

// Hull of the points (i, value(d_i f)) for i = 0..deg f.
NewtonPolygon slope_data(const Polynomial& f, const PolyValuation& mu);

// Reference hull: a point is a vertex iff it is an endpoint or lies strictly
// below every line through a straddling pair. Quadratic per point, kept as an
// independent cross-check for the fast construction.
NewtonPolygon oracle_hull(const std::vector<HullPoint>& points);

// Every input point lies weakly above every face line, strictly so outside
// the face's abscissa range.
bool polygon_supports(const NewtonPolygon& polygon);

struct RootConfiguration {
  // (multiplicity, value of X - root), values strictly decreasing.
  std::vector<std::pair<unsigned long, GroupValue>> groups;

  Json to_json() const;
};

RootConfiguration root_configuration(const std::vector<FieldElement>& roots,
                                     const PolyValuation& mu);

// Face count, face lengths, and slopes of slope_data(f) must match the
// multiplicities and values of the root configuration. The root list must
// reconstruct f exactly (leading coefficient times the monic product).
Report verify_slope_root_equivalence(const Polynomial& f,
                                     const std::vector<FieldElement>& roots,
                                     const PolyValuation& mu);

enum class RenderFormat { ascii, svg, json };

// Deterministic rendering; ascii and svg need a rank-1 value group.
std::string render(const NewtonPolygon& polygon, RenderFormat format);

} // namespace kxval
