#include "kxval/error.hpp"

namespace kxval {

const char* errc_name(errc code) {
  switch (code) {
    case errc::dimension_mismatch: return "dimension_mismatch";
    case errc::infinite_slope: return "infinite_slope";
    case errc::context_mismatch: return "context_mismatch";
    case errc::division_by_zero: return "division_by_zero";
    case errc::nonterminating_inverse: return "nonterminating_inverse";
    case errc::not_a_unit: return "not_a_unit";
    case errc::not_representable: return "not_representable";
    case errc::non_monic: return "non_monic";
    case errc::degree_zero_key: return "degree_zero_key";
    case errc::zero_polynomial: return "zero_polynomial";
    case errc::constant_polynomial: return "constant_polynomial";
    case errc::empty_roots: return "empty_roots";
    case errc::bad_candidate_degree: return "bad_candidate_degree";
    case errc::not_a_root: return "not_a_root";
    case errc::sample_not_in_base_ring: return "sample_not_in_base_ring";
    case errc::precondition_violated: return "precondition_violated";
    case errc::roots_dont_factor: return "roots_dont_factor";
    case errc::degree_mismatch: return "degree_mismatch";
    case errc::no_finite_points: return "no_finite_points";
    case errc::unplottable_rank: return "unplottable_rank";
    case errc::unknown_suite: return "unknown_suite";
    case errc::parse_error: return "parse_error";
  }
  return "unknown";
}

error::error(errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message),
      code_(code) {}

void fail(errc code, const std::string& message) { throw error(code, message); }

} // namespace kxval
