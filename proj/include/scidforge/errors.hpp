#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace scidforge {

/// Base class for all toolkit errors. `kind()` is a stable machine-readable
/// tag, the what() string carries context.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define SCIDFORGE_DEFINE_ERROR(Name)                                   \
    struct Name : Error {                                              \
        explicit Name(const std::string& msg) : Error(#Name, msg) {}   \
    }

SCIDFORGE_DEFINE_ERROR(NotPrime);
SCIDFORGE_DEFINE_ERROR(NotIrreducible);
SCIDFORGE_DEFINE_ERROR(FieldTooLarge);
SCIDFORGE_DEFINE_ERROR(DivisionByZero);
SCIDFORGE_DEFINE_ERROR(KOutOfRange);
SCIDFORGE_DEFINE_ERROR(DimensionMismatch);
SCIDFORGE_DEFINE_ERROR(AmbientMismatch);
SCIDFORGE_DEFINE_ERROR(TooManySubspaces);
SCIDFORGE_DEFINE_ERROR(EmptySubspace);
SCIDFORGE_DEFINE_ERROR(MixedParameters);
SCIDFORGE_DEFINE_ERROR(NotVerified);
SCIDFORGE_DEFINE_ERROR(IsSunflower);
SCIDFORGE_DEFINE_ERROR(ParamOutOfRange);
SCIDFORGE_DEFINE_ERROR(QTooSmall);
SCIDFORGE_DEFINE_ERROR(BadParams);
SCIDFORGE_DEFINE_ERROR(CannotPlace);
SCIDFORGE_DEFINE_ERROR(NoFeasiblePoint);
SCIDFORGE_DEFINE_ERROR(UnknownInequality);
SCIDFORGE_DEFINE_ERROR(ZeroPolynomial);
SCIDFORGE_DEFINE_ERROR(BoundViolated);
SCIDFORGE_DEFINE_ERROR(Inconsistency);

#undef SCIDFORGE_DEFINE_ERROR

}  // namespace scidforge
