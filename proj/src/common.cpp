#include "scherk/common.hpp"

namespace scherk {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NotPitot: return "NotPitot";
    case ErrorCode::DegenerateVertices: return "DegenerateVertices";
    case ErrorCode::SelfIntersecting: return "SelfIntersecting";
    case ErrorCode::ZeroArea: return "ZeroArea";
    case ErrorCode::OffHyperbola: return "OffHyperbola";
    case ErrorCode::WrongBranch: return "WrongBranch";
    case ErrorCode::DegenerateRightAngle: return "DegenerateRightAngle";
    case ErrorCode::EqualRapidities: return "EqualRapidities";
    case ErrorCode::DivisionDegenerate: return "DivisionDegenerate";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::ToleranceNotMet: return "ToleranceNotMet";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::StencilOutOfDomain: return "StencilOutOfDomain";
    case ErrorCode::NoRootFound: return "NoRootFound";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace scherk
