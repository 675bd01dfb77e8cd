#include "clarcube/error.hpp"

namespace clarcube {

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::EmptyInput: return "EmptyInput";
        case ErrorCode::DisconnectedHexagons: return "DisconnectedHexagons";
        case ErrorCode::HoleDetected: return "HoleDetected";
        case ErrorCode::InvalidChiralVector: return "InvalidChiralVector";
        case ErrorCode::NotCubic: return "NotCubic";
        case ErrorCode::NotPlanarEmbedding: return "NotPlanarEmbedding";
        case ErrorCode::BadFaceSize: return "BadFaceSize";
        case ErrorCode::NotAHexagon: return "NotAHexagon";
        case ErrorCode::NotASextet: return "NotASextet";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::InvalidCover: return "InvalidCover";
        case ErrorCode::CoefficientOverflow: return "CoefficientOverflow";
        case ErrorCode::UnknownPreset: return "UnknownPreset";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    }
    return "UnknownError";
}

} // namespace clarcube
