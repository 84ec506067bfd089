#pragma once

#include <stdexcept>
#include <string>

namespace tstar {

// Raised when an arc has no line meeting it in >= 2 points.
struct NoSecantError : std::runtime_error {
    explicit NoSecantError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when no pair Q1, Q2 outside the secant meets the side condition,
// over every secant of the arc.
struct NoValidPairError : std::runtime_error {
    explicit NoValidPairError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when t <= q*(alpha - 1).
struct ThresholdFailError : std::runtime_error {
    explicit ThresholdFailError(const std::string& what) : std::runtime_error(what) {}
};

// Raised by apply_switch when the partition does not satisfy the switching
// hypotheses; there is no unchecked fast path.
struct HypothesesNotVerified : std::runtime_error {
    explicit HypothesesNotVerified(const std::string& what) : std::runtime_error(what) {}
};

// Postcondition self-check failed; indicates a bug in this library.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace tstar
