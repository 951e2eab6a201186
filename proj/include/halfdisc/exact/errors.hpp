#pragma once

#include <stdexcept>
#include <string>

namespace halfdisc {

/// Mathematical precondition failure (zero valuation, singular cubic, shared components).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Floating-point pipeline failure: non-convergence, residual tolerance missed.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace halfdisc
