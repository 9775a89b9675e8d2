#include "quotcone/error.hpp"

namespace quotcone {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::ShapeError: return "ShapeError";
    case ErrorKind::ParamError: return "ParamError";
    case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorKind::EmptyRay: return "EmptyRay";
    case ErrorKind::DegenerateCone: return "DegenerateCone";
    case ErrorKind::NotUnital: return "NotUnital";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::DirectrixUndefined: return "DirectrixUndefined";
    case ErrorKind::GenericityFailure: return "GenericityFailure";
    case ErrorKind::Underdetermined: return "Underdetermined";
    case ErrorKind::Inconsistent: return "Inconsistent";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    }
    return "Unknown";
}

} // namespace quotcone
