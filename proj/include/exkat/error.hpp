#pragma once

#include <stdexcept>
#include <string>

namespace exkat {

enum class ErrorKind {
    InvalidInput,
    WidthMismatch,
    ShapeMismatch,
    AmbientMismatch,
    InconsistentConstraints,
    GeneratorsInsufficient,
    OutOfBounds,
    NotBijective,
    MalformedResolution,
    ClassNotInSub,
    Unsupported,
    NotRealizable,
    Refutation,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid input";
    case ErrorKind::WidthMismatch: return "width mismatch";
    case ErrorKind::ShapeMismatch: return "shape mismatch";
    case ErrorKind::AmbientMismatch: return "ambient mismatch";
    case ErrorKind::InconsistentConstraints: return "inconsistent constraints";
    case ErrorKind::GeneratorsInsufficient: return "generators insufficient";
    case ErrorKind::OutOfBounds: return "out of bounds";
    case ErrorKind::NotBijective: return "not bijective";
    case ErrorKind::MalformedResolution: return "malformed resolution";
    case ErrorKind::ClassNotInSub: return "class not in sub-bifunctor";
    case ErrorKind::Unsupported: return "outside supported morphism class";
    case ErrorKind::NotRealizable: return "tail step not realizable from registry";
    case ErrorKind::Refutation: return "refutation";
    }
    return "error";
}

} // namespace exkat
