#pragma once

#include <stdexcept>
#include <string>

namespace salvetti {

// Malformed input text (unknown family name, bad explicit block, ...).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid data (asymmetric matrix, bad label, I not a subset of J, ...).
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Group enumeration exceeded its element budget; signals an infinite or
// too-large group.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal consistency failure (inexact division, d∘d != 0, shape mismatch).
struct ComputationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace salvetti
