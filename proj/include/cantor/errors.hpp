#pragma once

#include <stdexcept>
#include <string>

namespace cantor {

/// Invalid ladder description (overlap, weights, normalization, empty step).
class LadderError : public std::invalid_argument {
public:
    enum class Kind { Overlap, Weight, Normalization, EmptyStep, Shape };

    LadderError(Kind kind, const std::string& what)
        : std::invalid_argument(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Argument outside the supported domain of a function.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Gamma evaluated at a non-positive integer.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Operation requires a regular ladder.
class RegularityError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation requires a non-degenerate ladder (C(t) != t).
class DegeneracyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative procedure did not stabilize within its cap.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Expansion requested at or past the critical point.
class CriticalPointError : public std::invalid_argument {
public:
    CriticalPointError(double critical, const std::string& what)
        : std::invalid_argument(what), critical_(critical) {}

    double critical_point() const noexcept { return critical_; }

private:
    double critical_;
};

}  // namespace cantor
