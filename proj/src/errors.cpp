#include "simplex_sections/errors.hpp"

namespace simplex_sections {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::EmptySection: return "EmptySection";
    case ErrorCode::PointSection: return "PointSection";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::DegeneratePolytope: return "DegeneratePolytope";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TolUnreachable: return "TolUnreachable";
    case ErrorCode::NotSupported: return "NotSupported";
    case ErrorCode::ZeroHits: return "ZeroHits";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::CounterexampleFound: return "CounterexampleFound";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

}  // namespace simplex_sections
