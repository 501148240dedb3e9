#pragma once

#include <stdexcept>
#include <string>

namespace flyq {

// Raised when inputs fall outside the mathematical domain of an operation
// (Gamma poles, closed forms used outside their branch, energies below a
// channel bottom). The CLI maps it to exit code 2.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Series or iteration that failed to reach its stopping criterion.
class ConvergenceError : public DomainError {
public:
    explicit ConvergenceError(const std::string& what) : DomainError(what) {}
};

} // namespace flyq
