#pragma once
#include <stdexcept>
#include <string>

namespace diagsemi {

struct DiagError : std::runtime_error {
    explicit DiagError(const std::string& msg) : std::runtime_error(msg) {}
};

#define DIAGSEMI_DEFINE_ERROR(Name)                                     \
    struct Name : DiagError {                                           \
        explicit Name(const std::string& msg) : DiagError(msg) {}       \
    }

DIAGSEMI_DEFINE_ERROR(MissingVertex);
DIAGSEMI_DEFINE_ERROR(DuplicateVertex);
DIAGSEMI_DEFINE_ERROR(IndexOutOfRange);
DIAGSEMI_DEFINE_ERROR(DegreeMismatch);
DIAGSEMI_DEFINE_ERROR(ParseError);
DIAGSEMI_DEFINE_ERROR(CongruenceViolation);
DIAGSEMI_DEFINE_ERROR(RangeError);
DIAGSEMI_DEFINE_ERROR(OverlapError);
DIAGSEMI_DEFINE_ERROR(ExplosionGuard);
DIAGSEMI_DEFINE_ERROR(LimitExceeded);
DIAGSEMI_DEFINE_ERROR(NotStarClosed);
DIAGSEMI_DEFINE_ERROR(UnsupportedFamily);
DIAGSEMI_DEFINE_ERROR(UnsupportedRange);
DIAGSEMI_DEFINE_ERROR(IllegalLetter);

#undef DIAGSEMI_DEFINE_ERROR

}  // namespace diagsemi
