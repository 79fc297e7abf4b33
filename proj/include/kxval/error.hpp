#pragma once

#include <stdexcept>
#include <string>

namespace kxval {

enum class errc {
  dimension_mismatch,
  infinite_slope,
  context_mismatch,
  division_by_zero,
  nonterminating_inverse,
  not_a_unit,
  not_representable,
  non_monic,
  degree_zero_key,
  zero_polynomial,
  constant_polynomial,
  empty_roots,
  bad_candidate_degree,
  not_a_root,
  sample_not_in_base_ring,
  precondition_violated,
  roots_dont_factor,
  degree_mismatch,
  no_finite_points,
  unplottable_rank,
  unknown_suite,
  parse_error,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
  error(errc code, const std::string& message);
  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

} // namespace kxval
