#ifndef CLARCUBE_ERROR_HPP
#define CLARCUBE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace clarcube {

enum class ErrorCode {
    EmptyInput,
    DisconnectedHexagons,
    HoleDetected,
    InvalidChiralVector,
    NotCubic,
    NotPlanarEmbedding,
    BadFaceSize,
    NotAHexagon,
    NotASextet,
    UnknownVertex,
    InvalidCover,
    CoefficientOverflow,
    UnknownPreset,
    ParseError,
    BudgetExceeded,
};

const char* error_code_name(ErrorCode c);

// Carries a stable code so callers (and the CLI) can name the violated
// invariant without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const { return code_; }
    const char* code_name() const { return error_code_name(code_); }

private:
    ErrorCode code_;
};

} // namespace clarcube

#endif
