#include "lorcal/error.hpp"

namespace lorcal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidObserver: return "InvalidObserver";
    case ErrorKind::UnsupportedObserver: return "UnsupportedObserver";
    case ErrorKind::NotInRestSpace: return "NotInRestSpace";
    case ErrorKind::DegenerateSpan: return "DegenerateSpan";
    case ErrorKind::MixedChirality: return "MixedChirality";
    case ErrorKind::ZeroOperator: return "ZeroOperator";
    case ErrorKind::NotLorentz: return "NotLorentz";
    case ErrorKind::NotOrthochronous: return "NotOrthochronous";
    case ErrorKind::BranchAmbiguous: return "BranchAmbiguous";
    case ErrorKind::NullBase: return "NullBase";
    case ErrorKind::Unresolvable: return "Unresolvable";
    case ErrorKind::ExcludedCase: return "ExcludedCase";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::BranchCut: return "BranchCut";
  }
  return "Unknown";
}

}  // namespace lorcal
