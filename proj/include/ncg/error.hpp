#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace ncg {

// Shortest readable rendering of a value for error messages.
inline std::string show(double value)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    return buf;
}

// Inputs outside an operation's domain (negative deformation, tau <= 0, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An iterative method stopped before meeting its tolerance.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

// A failure at one point of a sweep, tagged with the grid index.
class SweepPointError : public std::runtime_error {
public:
    SweepPointError(std::size_t index, const std::string& what)
        : std::runtime_error("point " + std::to_string(index) + ": " + what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

} // namespace ncg
