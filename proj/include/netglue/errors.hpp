#ifndef NETGLUE_ERRORS_HPP
#define NETGLUE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netglue {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define NETGLUE_ERROR_TYPE(Name)                                    \
    struct Name : Error {                                           \
        explicit Name(const std::string& what) : Error(what) {}     \
    }

NETGLUE_ERROR_TYPE(GraphError);
NETGLUE_ERROR_TYPE(InvalidPorts);
NETGLUE_ERROR_TYPE(PortArityMismatch);
NETGLUE_ERROR_TYPE(UnknownSymbol);
NETGLUE_ERROR_TYPE(SizeBoundExceeded);
NETGLUE_ERROR_TYPE(WidthMismatch);
NETGLUE_ERROR_TYPE(InvalidNode);
NETGLUE_ERROR_TYPE(InvalidPath);
NETGLUE_ERROR_TYPE(FamilyMismatch);
NETGLUE_ERROR_TYPE(SyntaxError);
NETGLUE_ERROR_TYPE(FreeVariable);
NETGLUE_ERROR_TYPE(ArityMismatch);
NETGLUE_ERROR_TYPE(KindMismatch);
NETGLUE_ERROR_TYPE(SizeMismatch);
NETGLUE_ERROR_TYPE(PreconditionViolated);
NETGLUE_ERROR_TYPE(ConditionViolation);
NETGLUE_ERROR_TYPE(ArithmeticInfeasible);
NETGLUE_ERROR_TYPE(ModeViolation);
NETGLUE_ERROR_TYPE(BudgetExceeded);
NETGLUE_ERROR_TYPE(JsonFormatError);

#undef NETGLUE_ERROR_TYPE

}  // namespace netglue

#endif
