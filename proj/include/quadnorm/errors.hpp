#pragma once

#include <stdexcept>
#include <string>

namespace quadnorm {

// Machine-readable failure codes surfaced through AlgebraError and the CLI.
enum class Errc {
    MixedRings,
    MixedAlgebras,
    NotAUnit,
    UnknownVariable,
    NotDivisible,
    NotRepresentable,
    LocalizationUnsupported,
    DimensionMismatch,
    NotSquare,
    PartitionMismatch,
    HomMismatch,
    TowerMismatch,
    NotNormPreserving,
    ChainMismatch,
    BaseMismatch,
    InternalContradiction,
    CocycleViolation,
    UnsupportedBase,
    InfiniteRing,
    GenerationExhausted,
    ParseError,
    InvalidArgument,
};

const char* errc_name(Errc code) noexcept;

class AlgebraError : public std::runtime_error {
public:
    AlgebraError(Errc code, const std::string& message);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& message);

inline void require(bool condition, Errc code, const std::string& message) {
    if (!condition) fail(code, message);
}

} // namespace quadnorm
