#pragma once

#include <stdexcept>

namespace pl {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry kernel.
struct InadmissiblePair : Error { using Error::Error; };
struct FamilyMismatch : Error { using Error::Error; };

// Envelope trees.
struct OutOfSpan : Error { using Error::Error; };
struct MismatchedBoundary : Error { using Error::Error; };
struct OrderViolation : Error { using Error::Error; };

// Dynamic structure.
struct DuplicateId : Error { using Error::Error; };
struct UnknownId : Error { using Error::Error; };
struct EmptyStructure : Error { using Error::Error; };

// Search.
struct PreconditionViolation : Error { using Error::Error; };
struct StepBudgetExceeded : Error { using Error::Error; };

// Signals an implementation bug, never valid input.
struct InternalError : Error { using Error::Error; };

struct ValidationError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace pl
