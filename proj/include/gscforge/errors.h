#pragma once

#include <stdexcept>
#include <string>

namespace gscforge {

/// Raised when a helper register is too small for the logical operator it must drive.
struct SizingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when an enumeration would exceed its configured budget.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an engine is asked to execute something it cannot represent
/// (e.g. a non-Clifford rotation in the tableau simulator).
struct CapabilityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace gscforge
