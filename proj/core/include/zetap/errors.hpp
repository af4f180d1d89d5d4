#ifndef ZETAP_ERRORS_HPP
#define ZETAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zetap {

struct ZetapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : ZetapError {
    using ZetapError::ZetapError;
};
struct NotPrincipalUnit : ZetapError {
    using ZetapError::ZetapError;
};
struct OutsideConvergenceDisk : ZetapError {
    using ZetapError::ZetapError;
};
struct BadConductor : ZetapError {
    using ZetapError::ZetapError;
};
struct RingTooSmall : ZetapError {
    using ZetapError::ZetapError;
};
struct RingMismatch : ZetapError {
    using ZetapError::ZetapError;
};
struct TruncationExceeded : ZetapError {
    using ZetapError::ZetapError;
};
struct BadSmoothing : ZetapError {
    using ZetapError::ZetapError;
};
struct BadParameter : ZetapError {
    using ZetapError::ZetapError;
};
struct OddCharacter : ZetapError {
    using ZetapError::ZetapError;
};
struct DescentFailure : ZetapError {
    using ZetapError::ZetapError;
};
struct InsufficientDepth : ZetapError {
    using ZetapError::ZetapError;
};
struct NotNormInvariant : ZetapError {
    using ZetapError::ZetapError;
};
struct NotPsiFixed : ZetapError {
    using ZetapError::ZetapError;
};
struct NotCoprime : ZetapError {
    using ZetapError::ZetapError;
};
struct FitFailure : ZetapError {
    using ZetapError::ZetapError;
};
struct LevelTooSmall : ZetapError {
    using ZetapError::ZetapError;
};
struct IndeterminateInvariants : ZetapError {
    using ZetapError::ZetapError;
};
struct BadWeight : ZetapError {
    using ZetapError::ZetapError;
};

// Evaluation of a pseudo-measure at its simple pole. Carries the numerator
// value and the vanished denominator so callers can report a residue instead
// of a value.
struct PoleAtTrivialCharacter : ZetapError {
    std::string numerator_repr;
    PoleAtTrivialCharacter(const std::string& msg, std::string num_repr = {})
        : ZetapError(msg), numerator_repr(std::move(num_repr)) {}
};

}  // namespace zetap

#endif
