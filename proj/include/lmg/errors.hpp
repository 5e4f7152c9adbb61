#pragma once

#include <stdexcept>
#include <string>

namespace lmg {

// |gamma - h| fell below the guard radius; the closed-form oscillator
// quantities divide by zero there.
class CriticalPointError : public std::domain_error {
public:
    CriticalPointError(double h, double gamma)
        : std::domain_error("coupling gamma=" + std::to_string(gamma) +
                            " is inside the critical guard radius of h=" + std::to_string(h)),
          h_(h), gamma_(gamma) {}
    double h() const noexcept { return h_; }
    double gamma() const noexcept { return gamma_; }

private:
    double h_;
    double gamma_;
};

// Invalid physical parameters or arguments.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Problem size exceeds a configured maximum.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An iterative numerical routine (eigensolver, quadrature) failed to converge.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A Fock-space truncation could not satisfy the requested tail bound.
class TruncationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Too few events of the conditioning type to form a histogram.
class InsufficientStatisticsError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Config-file problem, with a line number when one is known (-1 otherwise).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg, int line = -1)
        : std::runtime_error(line >= 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace lmg
