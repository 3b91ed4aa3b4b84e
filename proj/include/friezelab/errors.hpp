#pragma once

#include <stdexcept>
#include <string>

namespace friezelab {

/// Base class for every expected mathematical failure. `code()` is the
/// machine-readable identifier used by the CLI and the HTTP service.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define FRIEZELAB_DEFINE_ERROR(Name, Code)                                            \
    class Name : public DomainError {                                                 \
    public:                                                                           \
        explicit Name(const std::string& detail) : DomainError(Code, detail) {}       \
    };

FRIEZELAB_DEFINE_ERROR(InvalidInput, "invalid_input")
FRIEZELAB_DEFINE_ERROR(NotDivisible, "not_divisible")
FRIEZELAB_DEFINE_ERROR(LaurentViolation, "laurent_violation")
FRIEZELAB_DEFINE_ERROR(NonInteger, "non_integer")
FRIEZELAB_DEFINE_ERROR(NonPositive, "non_positive")
FRIEZELAB_DEFINE_ERROR(DoesNotClose, "does_not_close")
FRIEZELAB_DEFINE_ERROR(MalformedFrieze, "malformed_frieze")
FRIEZELAB_DEFINE_ERROR(NotFiniteType, "not_finite_type")
FRIEZELAB_DEFINE_ERROR(WindowTooSmall, "window_too_small")
FRIEZELAB_DEFINE_ERROR(LimitExceeded, "limit_exceeded")
FRIEZELAB_DEFINE_ERROR(MalformedInput, "malformed_input")

#undef FRIEZELAB_DEFINE_ERROR

}  // namespace friezelab
