#include "kxval/newton_polygon.hpp"

#include "kxval/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace kxval {

namespace {

// Finite inputs only, one point per abscissa (the minimum), sorted.
std::vector<HullPoint> normalize_points(const std::vector<HullPoint>& points) {
  std::map<long, GroupValue> best;
  for (const auto& p : points) {
    if (p.value.is_infinity()) continue; // no constraint on the lower boundary
    auto it = best.find(p.abscissa);
    if (it == best.end())
      best.emplace(p.abscissa, p.value);
    else if (p.value < it->second)
      it->second = p.value;
  }
  if (best.empty())
    fail(errc::no_finite_points, "a polygon needs at least one finite point");
  std::vector<HullPoint> out;
  out.reserve(best.size());
  for (auto& [a, v] : best) out.push_back(HullPoint{a, std::move(v)});
  return out;
}

// Is mid weakly above the segment lo--hi? Cross-multiplied by the positive
// runs, so no division happens.
bool weakly_above(const HullPoint& lo, const HullPoint& mid, const HullPoint& hi) {
  GroupValue lhs = (mid.value - lo.value).scaled(Rational(hi.abscissa - lo.abscissa));
  GroupValue rhs = (hi.value - lo.value).scaled(Rational(mid.abscissa - lo.abscissa));
  return lhs >= rhs;
}

bool strictly_below(const HullPoint& lo, const HullPoint& mid, const HullPoint& hi) {
  GroupValue lhs = (mid.value - lo.value).scaled(Rational(hi.abscissa - lo.abscissa));
  GroupValue rhs = (hi.value - lo.value).scaled(Rational(mid.abscissa - lo.abscissa));
  return lhs < rhs;
}

std::vector<GroupValue> falling_slopes(const std::vector<HullPoint>& vertices) {
  std::vector<GroupValue> slopes;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    slopes.push_back(vg_slope(
        vertices[i - 1].value, vertices[i].value,
        static_cast<unsigned long>(vertices[i].abscissa - vertices[i - 1].abscissa)));
  }
  return slopes;
}

Int scale_round(const Rational& q) { return nearest_int(q); }

std::string dec4(const Rational& q) {
  Int scaled = nearest_int(Rational(q * 10000));
  bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  Int whole = scaled / 10000;
  Int frac = scaled % 10000;
  std::string out = (negative ? "-" : "") + whole.str();
  if (frac != 0) {
    std::string digits = frac.str();
    digits.insert(digits.begin(), 4 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Rational scalar_of(const GroupValue& v) {
  if (!v.is_finite() || v.dim() != 1)
    fail(errc::unplottable_rank, "graphical output needs finite rank-1 values");
  return v.coords()[0];
}

std::string render_ascii(const NewtonPolygon& polygon) {
  const long xmin = polygon.points.front().abscissa;
  const long xmax = polygon.points.back().abscissa;
  Rational vmin = scalar_of(polygon.points.front().value);
  Rational vmax = vmin;
  for (const auto& p : polygon.points) {
    Rational v = scalar_of(p.value);
    if (v < vmin) vmin = v;
    if (v > vmax) vmax = v;
  }

  const long width = xmax == xmin ? 1 : std::min<long>(xmax - xmin, 60) + 1;
  const long height = vmax == vmin ? 1 : 17;
  auto col = [&](long x) {
    if (xmax == xmin) return 0L;
    Rational q = Rational(x - xmin) * Rational(width - 1) / Rational(xmax - xmin);
    return static_cast<long>(scale_round(q));
  };
  auto row = [&](const Rational& v) {
    if (vmax == vmin) return 0L;
    Rational q = (vmax - v) * Rational(height - 1) / (vmax - vmin);
    return static_cast<long>(scale_round(Rational(q)));
  };

  std::vector<std::string> grid(static_cast<std::size_t>(height),
                                std::string(static_cast<std::size_t>(width), ' '));
  auto put = [&](long r, long c, char ch, bool overwrite) {
    char& cell = grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    if (overwrite || cell == ' ') cell = ch;
  };

  // Faces first, then input points, then vertices on top.
  for (std::size_t i = 1; i < polygon.vertices.size(); ++i) {
    const auto& a = polygon.vertices[i - 1];
    const auto& b = polygon.vertices[i];
    const long ca = col(a.abscissa);
    const long cb = col(b.abscissa);
    Rational va = scalar_of(a.value);
    Rational vb = scalar_of(b.value);
    for (long c = ca + 1; c < cb; ++c) {
      Rational tfrac = Rational(c - ca) / Rational(cb - ca);
      Rational v = va + tfrac * (vb - va);
      put(row(v), c, '*', false);
    }
  }
  for (const auto& p : polygon.points)
    put(row(scalar_of(p.value)), col(p.abscissa), '.', true);
  for (const auto& v : polygon.vertices)
    put(row(scalar_of(v.value)), col(v.abscissa), 'o', true);

  std::string out = "value range [" + rational_str(vmin) + ", " + rational_str(vmax) +
                    "], abscissa range [" + std::to_string(xmin) + ", " +
                    std::to_string(xmax) + "]\n";
  for (auto& line : grid) {
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += "|" + line + "\n";
  }
  out += "+" + std::string(static_cast<std::size_t>(width), '-') + "\n";
  std::string labels = std::to_string(xmin);
  std::string right = std::to_string(xmax);
  if (width > static_cast<long>(labels.size() + right.size()))
    labels += std::string(static_cast<std::size_t>(width) - labels.size() -
                              right.size() + 1,
                          ' ') +
              right;
  out += " " + labels + "\n";
  return out;
}

std::string render_svg(const NewtonPolygon& polygon) {
  const long xmin = polygon.points.front().abscissa;
  const long xmax = polygon.points.back().abscissa;
  Rational vmin = scalar_of(polygon.points.front().value);
  Rational vmax = vmin;
  for (const auto& p : polygon.points) {
    Rational v = scalar_of(p.value);
    if (v < vmin) vmin = v;
    if (v > vmax) vmax = v;
  }
  const long width = 40 * (xmax - xmin) + 40;
  const long height = 360;
  auto px = [&](long a) { return 20 + 40 * (a - xmin); };
  auto py = [&](const Rational& v) {
    if (vmax == vmin) return std::string("20");
    return dec4(Rational(20) + (vmax - v) * Rational(320) / (vmax - vmin));
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << " "
      << height << "\">\n";
  for (const auto& v : polygon.vertices) {
    svg << "  <line x1=\"" << px(v.abscissa) << "\" y1=\"" << py(scalar_of(v.value))
        << "\" x2=\"" << px(v.abscissa) << "\" y2=\"" << height - 20
        << "\" stroke=\"#999\" stroke-dasharray=\"4 3\"/>\n";
  }
  svg << "  <polyline fill=\"none\" stroke=\"#000\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
    if (i) svg << " ";
    svg << px(polygon.vertices[i].abscissa) << ","
        << py(scalar_of(polygon.vertices[i].value));
  }
  svg << "\"/>\n";
  for (const auto& p : polygon.points) {
    svg << "  <circle cx=\"" << px(p.abscissa) << "\" cy=\"" << py(scalar_of(p.value))
        << "\" r=\"3\" fill=\"#444\"/>\n";
  }
  for (const auto& v : polygon.vertices) {
    svg << "  <circle cx=\"" << px(v.abscissa) << "\" cy=\"" << py(scalar_of(v.value))
        << "\" r=\"5\" fill=\"none\" stroke=\"#000\" stroke-width=\"2\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

} // namespace

Json NewtonPolygon::to_json() const {
  Json vs = Json::array();
  for (const auto& v : vertices) vs.push_back(Json::array({v.abscissa, v.value.str()}));
  Json ss = Json::array();
  for (const auto& s : slopes) ss.push_back(s.str());
  return Json{{"vertices", vs}, {"slopes", ss}};
}

NewtonPolygon lower_hull(const std::vector<HullPoint>& points) {
  std::vector<HullPoint> pts = normalize_points(points);
  std::vector<HullPoint> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 &&
           weakly_above(hull[hull.size() - 2], hull.back(), p))
      hull.pop_back();
    hull.push_back(p);
  }
  NewtonPolygon polygon;
  polygon.slopes = falling_slopes(hull);
  polygon.vertices = std::move(hull);
  polygon.points = std::move(pts);
  return polygon;
}

NewtonPolygon oracle_hull(const std::vector<HullPoint>& points) {
  std::vector<HullPoint> pts = normalize_points(points);
  std::vector<HullPoint> vertices;
  for (std::size_t m = 0; m < pts.size(); ++m) {
    bool vertex = true;
    if (m != 0 && m + 1 != pts.size()) {
      for (std::size_t i = 0; i < pts.size() && vertex; ++i) {
        if (pts[i].abscissa >= pts[m].abscissa) continue;
        for (std::size_t j = 0; j < pts.size() && vertex; ++j) {
          if (pts[j].abscissa <= pts[m].abscissa) continue;
          if (!strictly_below(pts[i], pts[m], pts[j])) vertex = false;
        }
      }
    }
    if (vertex) vertices.push_back(pts[m]);
  }
  NewtonPolygon polygon;
  polygon.slopes = falling_slopes(vertices);
  polygon.vertices = std::move(vertices);
  polygon.points = std::move(pts);
  return polygon;
}

bool polygon_supports(const NewtonPolygon& polygon) {
  for (std::size_t t = 1; t < polygon.vertices.size(); ++t) {
    const HullPoint& lo = polygon.vertices[t - 1];
    const HullPoint& hi = polygon.vertices[t];
    for (const auto& p : polygon.points) {
      // p weakly above the face line, strictly so outside [lo, hi].
      GroupValue lhs =
          (p.value - lo.value).scaled(Rational(hi.abscissa - lo.abscissa));
      GroupValue rhs =
          (hi.value - lo.value).scaled(Rational(p.abscissa - lo.abscissa));
      const bool outside = p.abscissa < lo.abscissa || p.abscissa > hi.abscissa;
      if (outside ? !(lhs > rhs) : !(lhs >= rhs)) return false;
    }
  }
  return true;
}

NewtonPolygon slope_data(const Polynomial& f, const PolyValuation& mu) {
  if (f.degree() < 1)
    fail(errc::constant_polynomial, "slope data needs degree >= 1");
  std::vector<HullPoint> points;
  for (long i = 0; i <= f.degree(); ++i) {
    points.push_back(HullPoint{
        i, value_of(mu, hasse_derivative(f, static_cast<unsigned long>(i)))});
  }
  return lower_hull(points);
}

Json RootConfiguration::to_json() const {
  Json out = Json::array();
  for (const auto& [mult, value] : groups)
    out.push_back(Json::array({mult, value.str()}));
  return out;
}

RootConfiguration root_configuration(const std::vector<FieldElement>& roots,
                                     const PolyValuation& mu) {
  if (roots.empty()) fail(errc::empty_roots, "root configuration needs roots");
  const FieldContext& ctx = mu.context();
  Polynomial x = Polynomial::variable(ctx);
  std::vector<std::pair<unsigned long, GroupValue>> groups;
  for (const auto& c : roots) {
    GroupValue v = value_of(mu, x - Polynomial::constant(c));
    bool merged = false;
    for (auto& [mult, value] : groups) {
      if (value == v) {
        ++mult;
        merged = true;
        break;
      }
    }
    if (!merged) groups.emplace_back(1, std::move(v));
  }
  std::sort(groups.begin(), groups.end(),
            [](const auto& a, const auto& b) { return a.second > b.second; });
  RootConfiguration config;
  config.groups = std::move(groups);
  return config;
}

Report verify_slope_root_equivalence(const Polynomial& f,
                                     const std::vector<FieldElement>& roots,
                                     const PolyValuation& mu) {
  const FieldContext& ctx = f.context();
  Polynomial rebuilt = Polynomial::constant(
      f.is_zero() ? FieldElement::one(ctx) : f.leading());
  Polynomial x = Polynomial::variable(ctx);
  for (const auto& c : roots) rebuilt = rebuilt * (x - Polynomial::constant(c));
  if (rebuilt != f)
    fail(errc::roots_dont_factor,
         "the supplied roots do not rebuild the polynomial: got " + rebuilt.str() +
             ", expected " + f.str());

  NewtonPolygon polygon = slope_data(f, mu);
  RootConfiguration config = root_configuration(roots, mu);

  Report report;
  report.claim = "slope data encodes the root configuration";
  report.note(Json{{"polynomial", f.str()},
                   {"valuation", mu.str()},
                   {"polygon", polygon.to_json()},
                   {"roots", config.to_json()}});
  report.check(polygon.slopes.size() == config.groups.size(),
               Json{{"what", "face count equals value-class count"},
                    {"faces", polygon.slopes.size()},
                    {"classes", config.groups.size()}});
  if (polygon.slopes.size() == config.groups.size()) {
    for (std::size_t t = 0; t < polygon.slopes.size(); ++t) {
      const unsigned long length = static_cast<unsigned long>(
          polygon.vertices[t + 1].abscissa - polygon.vertices[t].abscissa);
      report.check(length == config.groups[t].first,
                   Json{{"what", "face length equals multiplicity"},
                        {"face", t},
                        {"length", length},
                        {"multiplicity", config.groups[t].first}});
      report.check(polygon.slopes[t] == config.groups[t].second,
                   Json{{"what", "slope equals root value"},
                        {"face", t},
                        {"slope", polygon.slopes[t].str()},
                        {"root_value", config.groups[t].second.str()}});
    }
  }
  return report;
}

std::string render(const NewtonPolygon& polygon, RenderFormat format) {
  switch (format) {
    case RenderFormat::json:
      return polygon.to_json().dump(2);
    case RenderFormat::ascii:
      return render_ascii(polygon);
    case RenderFormat::svg:
      return render_svg(polygon);
  }
  fail(errc::precondition_violated, "unknown render format");
}

} // namespace kxval
