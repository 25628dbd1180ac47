#pragma once

#include <stdexcept>
#include <string>

namespace varpert {

/// Thrown when an argument lies outside the domain of a formula or type invariant.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown by iterative solvers that fail to converge. `diagnostics()` carries
/// the solver state at the point of failure.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, std::string diagnostics)
        : std::runtime_error(what + ": " + diagnostics), diagnostics_(std::move(diagnostics)) {}

    const std::string& diagnostics() const noexcept { return diagnostics_; }

private:
    std::string diagnostics_;
};

} // namespace varpert
