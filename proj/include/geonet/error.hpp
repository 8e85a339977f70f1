#pragma once

#include <stdexcept>
#include <string>

namespace geonet {

enum class ErrorCode {
  invalid_argument,
  unknown_vertex,
  duplicate_vertex,
  non_finite,
  degenerate_edge,
  unbalanced_net,
  special_radius,
  precondition,
  degenerate_geometry,
  dispatch_ambiguous,
  wing_coincidence,
  no_intersection,
  singular_coefficient,
  claim_failed,
  not_converged,
  parse_error,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::unknown_vertex: return "unknown_vertex";
    case ErrorCode::duplicate_vertex: return "duplicate_vertex";
    case ErrorCode::non_finite: return "non_finite";
    case ErrorCode::degenerate_edge: return "degenerate_edge";
    case ErrorCode::unbalanced_net: return "unbalanced_net";
    case ErrorCode::special_radius: return "special_radius";
    case ErrorCode::precondition: return "precondition";
    case ErrorCode::degenerate_geometry: return "degenerate_geometry";
    case ErrorCode::dispatch_ambiguous: return "dispatch_ambiguous";
    case ErrorCode::wing_coincidence: return "wing_coincidence";
    case ErrorCode::no_intersection: return "no_intersection";
    case ErrorCode::singular_coefficient: return "singular_coefficient";
    case ErrorCode::claim_failed: return "claim_failed";
    case ErrorCode::not_converged: return "not_converged";
    case ErrorCode::parse_error: return "parse_error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geonet
