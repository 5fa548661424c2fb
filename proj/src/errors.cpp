#include "quadnorm/errors.hpp"

namespace quadnorm {

const char* errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::MixedRings: return "MixedRings";
        case Errc::MixedAlgebras: return "MixedAlgebras";
        case Errc::NotAUnit: return "NotAUnit";
        case Errc::UnknownVariable: return "UnknownVariable";
        case Errc::NotDivisible: return "NotDivisible";
        case Errc::NotRepresentable: return "NotRepresentable";
        case Errc::LocalizationUnsupported: return "LocalizationUnsupported";
        case Errc::DimensionMismatch: return "DimensionMismatch";
        case Errc::NotSquare: return "NotSquare";
        case Errc::PartitionMismatch: return "PartitionMismatch";
        case Errc::HomMismatch: return "HomMismatch";
        case Errc::TowerMismatch: return "TowerMismatch";
        case Errc::NotNormPreserving: return "NotNormPreserving";
        case Errc::ChainMismatch: return "ChainMismatch";
        case Errc::BaseMismatch: return "BaseMismatch";
        case Errc::InternalContradiction: return "InternalContradiction";
        case Errc::CocycleViolation: return "CocycleViolation";
        case Errc::UnsupportedBase: return "UnsupportedBase";
        case Errc::InfiniteRing: return "InfiniteRing";
        case Errc::GenerationExhausted: return "GenerationExhausted";
        case Errc::ParseError: return "ParseError";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

AlgebraError::AlgebraError(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

void fail(Errc code, const std::string& message) { throw AlgebraError(code, message); }

} // namespace quadnorm
