#pragma once

#include "kxval/newton_polygon.hpp"

namespace kxval {

// Closed ball around a center; an infinite radius means the singleton.
struct Ball {
  FieldElement center;
  GroupValue radius;

  bool contains(const FieldElement& x) const;
  Json to_json() const;
};

// Sublevel set of a polynomial, carried together with its cover by balls at
// the supplied roots.
struct Diskoid {
  Polynomial defining;
  GroupValue rho;
  std::vector<Ball> balls;

  bool contains(const FieldElement& x) const;
  Json to_json() const;
};

// min over the ball of the value of g: min_i value(d_i g(a)) + i*delta. An
// infinite delta degenerates to plain evaluation at the center.
GroupValue ball_value(const FieldElement& a, const GroupValue& delta,
                      const Polynomial& g);

// Smallest ball radius at the root a that keeps the ball inside the sublevel
// set of f at rho: max over i >= 1 of (rho - value(d_i f(a)))/i.
GroupValue epsilon_radius(const FieldElement& a, const Polynomial& f,
                          const GroupValue& rho);

// One ball per distinct root, radius from epsilon_radius. The root list must
// reconstruct f exactly.
Diskoid decompose(const Polynomial& f, const std::vector<FieldElement>& roots,
                  const GroupValue& rho);

// min over the component balls of ball_value.
GroupValue diskoid_value(const Diskoid& d, const Polynomial& g);

// The two membership definitions, value(f(x)) >= rho and "x lies in some
// ball", must agree; both booleans are reported.
Report membership(const FieldElement& x, const Polynomial& f,
                  const GroupValue& rho, const Diskoid& d);

// ball_value at every supplied root must coincide on every base-ring sample.
Report verify_conjugate_invariance(const std::vector<FieldElement>& roots,
                                   const GroupValue& delta,
                                   const std::vector<Polynomial>& samples);

// Searches the bijections between the two root lists for one in which every
// matched pair differs by at least (min coefficient value of f - fstar)/deg.
Report verify_root_matching(const Polynomial& f, const Polynomial& fstar,
                            const std::vector<FieldElement>& roots,
                            const std::vector<FieldElement>& rootsstar);

struct BallWitness {
  FieldElement point;
  GroupValue value;
  unsigned long attempts = 0;
};

// Constructive witness for the ball minimum: walks x = a + u*t^delta over
// integer residue lifts u until the residue polynomial is nonzero there. A
// nonzero residue polynomial of degree <= deg g has at most deg g roots, so
// at most deg g + 1 attempts happen.
BallWitness attain_ball_minimum(const FieldElement& a, const GroupValue& delta,
                                const Polynomial& g);

} // namespace kxval
