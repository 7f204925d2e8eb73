#pragma once

#include <stdexcept>
#include <string>

namespace cylhook {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Validation of partitions / shapes.
struct NotWeaklyDecreasing : Error { using Error::Error; };
struct NotRestricted : Error { using Error::Error; };
struct BadLength : Error { using Error::Error; };
struct NotContained : Error { using Error::Error; };

// Geometry / enumeration.
struct CellNotInDiagram : Error { using Error::Error; };
struct NotActive : Error { using Error::Error; };
struct InvalidTuple : Error { using Error::Error; };
struct BadEndpoints : Error { using Error::Error; };
struct NoDecomposition : Error { using Error::Error; };
struct NotRepresentable : Error { using Error::Error; };

// Series / identity checks.
struct InsufficientData : Error { using Error::Error; };
struct BadSequence : Error { using Error::Error; };

} // namespace cylhook
