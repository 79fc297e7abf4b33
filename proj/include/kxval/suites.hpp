#pragma once

#include "kxval/diskoid.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace kxval {

// Deterministic sample stream. mt19937_64 output is fixed by the standard and
// all derived draws use plain modular arithmetic, so equal seeds give
// byte-identical corpora on every platform.
class SampleGen {
public:
  explicit SampleGen(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t raw() { return eng_(); }
  long integer(long lo, long hi); // inclusive
  Rational rational(long max_abs_num, long max_den);
  Rational nonzero_rational(long max_abs_num, long max_den);

  // Sum of up to max_terms monomials with integer exponents (an element of
  // the base ring); may be zero.
  FieldElement base_element(const FieldContext& ctx, int max_terms);
  FieldElement nonzero_base_element(const FieldContext& ctx, int max_terms);
  // Allows exponent denominators up to 4 (a point of the extension model).
  FieldElement model_element(const FieldContext& ctx, int max_terms);

  // Coefficients from base_element; may be zero.
  Polynomial base_polynomial(const FieldContext& ctx, long max_degree);
  Polynomial nonzero_base_polynomial(const FieldContext& ctx, long max_degree);

private:
  std::mt19937_64 eng_;
};

std::uint64_t fnv1a(std::uint64_t state, const std::string& piece);
std::string hex64(std::uint64_t value);

// Granular randomized checks; counts are minimums actually run. Each report
// echoes the seed and an fnv1a corpus hash.
Report check_valuation_axioms(std::uint64_t seed, int pairs);
Report check_hasse_identities(std::uint64_t seed, int pairs);
Report check_field_axioms(std::uint64_t seed, int samples);
Report check_hull_oracle(std::uint64_t seed, int sets);
Report check_slope_root_equivalence(std::uint64_t seed, int samples);
Report check_truncation_pair_agreement(std::uint64_t seed, int samples);
Report check_epsilon_bound_biconditional(std::uint64_t seed, int samples);
Report check_graded_rewrite_samples(std::uint64_t seed, int samples);
Report check_ball_witnesses(std::uint64_t seed, int samples);
Report check_ball_pair_identity(std::uint64_t seed, int samples);
Report check_diskoid_ultrametric(std::uint64_t seed, int samples);
Report check_single_ball_multiplicative(std::uint64_t seed, int samples);
Report check_membership_coherence(std::uint64_t seed, int samples);
Report check_diskoid_truncation_agreement(std::uint64_t seed, int samples);

// Fixture bundle used by the diskoid and correspondence suites.
Report fixture_product_rule_reports();
Report fixture_pair_equivalence_report();
Report fixture_conjugate_invariance_report();
Report fixture_root_matching_report();

// The multiplicativity gap of the diskoid minimum on f = X(X-a): the value of
// the product stays at value(a) instead of doubling. Passes when the gap is
// exhibited for the given center.
Report product_gap_report(const FieldContext& ctx, const FieldElement& a);

std::vector<std::string> suite_names(); // axioms, newton, correspondence, diskoid, all
Report run_suite(const std::string& name, std::uint64_t seed);

Report suite_axioms(std::uint64_t seed);
Report suite_newton(std::uint64_t seed);
Report suite_correspondence(std::uint64_t seed);
Report suite_diskoid(std::uint64_t seed);
Report suite_all(std::uint64_t seed);

} // namespace kxval
