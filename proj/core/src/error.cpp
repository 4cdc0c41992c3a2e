#include "bdecat/error.hpp"

namespace bdecat {

std::string_view errc_name(Errc c) {
  switch (c) {
    case Errc::MalformedMatching: return "MalformedMatching";
    case Errc::DisconnectedSurgery: return "DisconnectedSurgery";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::EndpointClash: return "EndpointClash";
    case Errc::SizeLimit: return "SizeLimit";
    case Errc::NotMiddleSummand: return "NotMiddleSummand";
    case Errc::NotInGZ: return "NotInGZ";
    case Errc::NotHomogeneous: return "NotHomogeneous";
    case Errc::StructureEquationFails: return "StructureEquationFails";
    case Errc::GradingIncompatible: return "GradingIncompatible";
    case Errc::Unbounded: return "Unbounded";
    case Errc::AInfRelationFails: return "AInfRelationFails";
    case Errc::BothUnbounded: return "BothUnbounded";
    case Errc::PmcMismatch: return "PmcMismatch";
    case Errc::MissingGrading: return "MissingGrading";
    case Errc::GenusMismatch: return "GenusMismatch";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::BigradingViolation: return "BigradingViolation";
    case Errc::CFKInvariantViolation: return "CFKInvariantViolation";
    case Errc::CalibrationConflict: return "CalibrationConflict";
    case Errc::Mismatch: return "Mismatch";
    case Errc::A2NonZero: return "A2NonZero";
    case Errc::FormulaMismatch: return "FormulaMismatch";
    case Errc::TheoremViolation: return "TheoremViolation";
    case Errc::BadIndex: return "BadIndex";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_verification_failure(Errc c) {
  switch (c) {
    case Errc::StructureEquationFails:
    case Errc::GradingIncompatible:
    case Errc::AInfRelationFails:
    case Errc::BigradingViolation:
    case Errc::CalibrationConflict:
    case Errc::Mismatch:
    case Errc::A2NonZero:
    case Errc::FormulaMismatch:
    case Errc::TheoremViolation:
      return true;
    default:
      return false;
  }
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace bdecat
