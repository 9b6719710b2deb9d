#pragma once

#include <stdexcept>
#include <string>

namespace qhex {

/// Exponent arithmetic left the machine-word range. Exponent overflow is a
/// hard error, never wraparound.
struct ExponentOverflow : std::overflow_error {
    explicit ExponentOverflow(const std::string& what) : std::overflow_error(what) {}
};

/// A search or expansion exceeded its configured resource cap.
struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A denominator that must be nonzero vanished identically.
struct ZeroDenominator : std::domain_error {
    explicit ZeroDenominator(const std::string& what) : std::domain_error(what) {}
};

/// Polynomial division was requested but the divisor does not divide exactly.
struct InexactDivision : std::domain_error {
    explicit InexactDivision(const std::string& what) : std::domain_error(what) {}
};

/// A symbolic computation was requested beyond its configured size bound.
struct SizeBoundExceeded : std::length_error {
    explicit SizeBoundExceeded(const std::string& what) : std::length_error(what) {}
};

/// Two routes that must agree disagreed; indicates an implementation bug.
struct InternalDisagreement : std::logic_error {
    explicit InternalDisagreement(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qhex
