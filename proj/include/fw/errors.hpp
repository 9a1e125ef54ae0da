#pragma once

#include <stdexcept>
#include <string>

namespace fw {

enum class Errc {
    DimensionMismatch,
    NonFiniteEntry,
    EmptyFamily,
    NotAFrame,
    ZeroExcess,
    HypothesisFailed,
    ZeroDirection,
    DirectionNotNull,
    ThetaNotNull,
    ShapeMismatch,
    EnumerationTooLarge,
    NotRieszBasis,
    NotWovenInput,
    SingularOperator,
    SpecInconsistent,
    InvalidAlpha,
    InfeasibleShape,
    ParseError,
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::DimensionMismatch:   return "DimensionMismatch";
        case Errc::NonFiniteEntry:      return "NonFiniteEntry";
        case Errc::EmptyFamily:         return "EmptyFamily";
        case Errc::NotAFrame:           return "NotAFrame";
        case Errc::ZeroExcess:          return "ZeroExcess";
        case Errc::HypothesisFailed:    return "HypothesisFailed";
        case Errc::ZeroDirection:       return "ZeroDirection";
        case Errc::DirectionNotNull:    return "DirectionNotNull";
        case Errc::ThetaNotNull:        return "ThetaNotNull";
        case Errc::ShapeMismatch:       return "ShapeMismatch";
        case Errc::EnumerationTooLarge: return "EnumerationTooLarge";
        case Errc::NotRieszBasis:       return "NotRieszBasis";
        case Errc::NotWovenInput:       return "NotWovenInput";
        case Errc::SingularOperator:    return "SingularOperator";
        case Errc::SpecInconsistent:    return "SpecInconsistent";
        case Errc::InvalidAlpha:        return "InvalidAlpha";
        case Errc::InfeasibleShape:     return "InfeasibleShape";
        case Errc::ParseError:          return "ParseError";
    }
    return "UnknownError";
}

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace fw
