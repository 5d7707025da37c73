#include "sphinc/error.hpp"

namespace sphinc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::CollinearInput: return "CollinearInput";
    case ErrorKind::IdenticalSpheres: return "IdenticalSpheres";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::NotDegenerate: return "NotDegenerate";
    case ErrorKind::NotIncident: return "NotIncident";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::InfeasibleCircle: return "InfeasibleCircle";
    case ErrorKind::ImaginarySphere: return "ImaginarySphere";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::NonPositiveValue: return "NonPositiveValue";
    case ErrorKind::DuplicateEntry: return "DuplicateEntry";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace sphinc
