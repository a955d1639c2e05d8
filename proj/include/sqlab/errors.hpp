#pragma once

#include <stdexcept>
#include <string>

namespace sqlab {

// Validation errors come from bad inputs (CLI exit code 2),
// numerical errors from failed computations (CLI exit code 3).
enum class ErrorKind { Validation, Numerical };

struct Error : std::runtime_error {
    ErrorKind kind;
    Error(ErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

#define SQLAB_ERROR_TYPE(Name, Kind)                                        \
    struct Name : Error {                                                   \
        explicit Name(const std::string& msg = #Name)                       \
            : Error(ErrorKind::Kind, std::string(#Name) + ": " + msg) {}    \
    }

SQLAB_ERROR_TYPE(NonFinite, Numerical);
SQLAB_ERROR_TYPE(DegenerateGradient, Numerical);
SQLAB_ERROR_TYPE(NotOnBoundary, Validation);
SQLAB_ERROR_TYPE(NotSymmetric, Validation);
SQLAB_ERROR_TYPE(NoBoundaryFound, Numerical);
SQLAB_ERROR_TYPE(OutsideDomain, Validation);
SQLAB_ERROR_TYPE(OutOfRange, Validation);
SQLAB_ERROR_TYPE(ShapeMismatch, Validation);
SQLAB_ERROR_TYPE(SymmetryViolation, Validation);
SQLAB_ERROR_TYPE(EmptySamples, Validation);
SQLAB_ERROR_TYPE(BasepointNotMappedToZero, Validation);
SQLAB_ERROR_TYPE(ImageEscapesBall, Numerical);
SQLAB_ERROR_TYPE(NotGsc, Numerical);
SQLAB_ERROR_TYPE(NotDecreasing, Validation);
SQLAB_ERROR_TYPE(UnknownDomain, Validation);
SQLAB_ERROR_TYPE(UnknownEmbedding, Validation);
SQLAB_ERROR_TYPE(BadParams, Validation);

#undef SQLAB_ERROR_TYPE

}  // namespace sqlab
