#include "chaingeo/error.hpp"

namespace chaingeo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotHermitian: return "NotHermitian";
    case ErrorKind::NotAntiHermitian: return "NotAntiHermitian";
    case ErrorKind::SingularCayley: return "SingularCayley";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::NotShilovPoint: return "NotShilovPoint";
    case ErrorKind::NotChain: return "NotChain";
    case ErrorKind::NotTransverse: return "NotTransverse";
    case ErrorKind::NotCoplanar: return "NotCoplanar";
    case ErrorKind::DegeneratePairing: return "DegeneratePairing";
    case ErrorKind::NotTransverseToVinf: return "NotTransverseToVinf";
    case ErrorKind::VerticalChain: return "VerticalChain";
    case ErrorKind::NotOnCircle: return "NotOnCircle";
    case ErrorKind::NoRationalFrame: return "NoRationalFrame";
    case ErrorKind::NotInDomain: return "NotInDomain";
    case ErrorKind::NoPreimageFound: return "NoPreimageFound";
    case ErrorKind::NoCommonPoint: return "NoCommonPoint";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::InvalidRegime: return "InvalidRegime";
    case ErrorKind::UnknownCheck: return "UnknownCheck";
    case ErrorKind::Schema: return "Schema";
  }
  return "Unknown";
}

}  // namespace chaingeo
