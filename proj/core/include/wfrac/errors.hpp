#pragma once

#include <stdexcept>
#include <string>

namespace wfrac {

/// Failure categories. Each maps to a stable process exit code in the CLI.
enum class ErrorKind {
    domain,       ///< argument outside the mathematical domain of an operation
    accuracy,     ///< a numerical method cannot deliver its contracted accuracy
    convergence,  ///< an iteration or series did not terminate within its cap
    admissibility,///< parameters outside the range where the evolution theory applies
    no_crossing,  ///< a decay metric was never attained on the simulated range
    io,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

class AccuracyError : public Error {
public:
    explicit AccuracyError(const std::string& what) : Error(ErrorKind::accuracy, what) {}
};

class ConvergenceError : public Error {
public:
    explicit ConvergenceError(const std::string& what) : Error(ErrorKind::convergence, what) {}
};

class AdmissibilityError : public Error {
public:
    explicit AdmissibilityError(const std::string& what) : Error(ErrorKind::admissibility, what) {}
};

class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

}  // namespace wfrac
