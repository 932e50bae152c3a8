#include "quadnet/error.hpp"

namespace quadnet {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateResultant: return "DegenerateResultant";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::UnclassifiedExtensionPoint: return "UnclassifiedExtensionPoint";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::PointNotOnQuadric: return "PointNotOnQuadric";
    case ErrorKind::DegenerateGale: return "DegenerateGale";
    case ErrorKind::NoSmoothMember: return "NoSmoothMember";
    case ErrorKind::ProvenanceInvalid: return "ProvenanceInvalid";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::MixedExtension: return "MixedExtension";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::Degenerate: return "Degenerate";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace quadnet
