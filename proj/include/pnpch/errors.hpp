/// @file errors.hpp
/// @brief Exception types thrown across the library.

#pragma once

#include <stdexcept>
#include <string>

namespace pnpch {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Right-hand side of a zero-mean elliptic solve is not mean-free.
class NotMeanZero : public Error {
public:
    explicit NotMeanZero(double mean)
        : Error("elliptic rhs is not mean-zero (mean = " + std::to_string(mean) + ")"),
          mean_(mean) {}
    double mean() const { return mean_; }
private:
    double mean_;
};

/// Elliptic coefficient field must be strictly positive.
class NonPositiveCoefficient : public Error {
public:
    explicit NonPositiveCoefficient(double min_value)
        : Error("elliptic coefficient has non-positive entries (min = " +
                std::to_string(min_value) + ")") {}
};

/// An iterative solve exhausted its iteration budget.
class NoConvergence : public Error {
public:
    NoConvergence(const std::string& context, double residual, int iterations)
        : Error(context + ": no convergence after " + std::to_string(iterations) +
                " iterations (residual " + std::to_string(residual) + ")") {}
};

/// Steric matrix fails the symmetry requirement.
class NotSymmetric : public Error {
public:
    explicit NotSymmetric(double asymmetry)
        : Error("steric matrix is not symmetric (max asymmetry " +
                std::to_string(asymmetry) + ")") {}
};

/// Random initial-condition amplitude would break positivity.
class AmplitudeTooLarge : public Error {
public:
    AmplitudeTooLarge(double amplitude, double mean)
        : Error("perturbation amplitude " + std::to_string(amplitude) +
                " >= species mean " + std::to_string(mean)) {}
};

/// Two line charges map to the same grid column.
class LineOffGrid : public Error {
public:
    explicit LineOffGrid(const std::string& what) : Error(what) {}
};

/// A concentration hit zero or below where a logarithm is required.
class NonPositiveConcentration : public Error {
public:
    NonPositiveConcentration(int species, double value)
        : Error("species " + std::to_string(species + 1) +
                " has non-positive concentration " + std::to_string(value)) {}
};

/// Newton iteration failed to reach the residual tolerance.
class NewtonDiverged : public Error {
public:
    NewtonDiverged(double residual, int iterations)
        : Error("Newton iteration did not converge: residual " + std::to_string(residual) +
                " after " + std::to_string(iterations) + " iterations") {}
};

/// Inner linear solve within a Newton step failed.
class LinearSolveFailed : public Error {
public:
    explicit LinearSolveFailed(const std::string& what) : Error(what) {}
};

/// Damping drove the step length below its minimum fraction.
class PositivityLost : public Error {
public:
    explicit PositivityLost(double step_fraction)
        : Error("positivity damping collapsed (step fraction " +
                std::to_string(step_fraction) + ")") {}
};

/// A structure invariant (mass / positivity / energy) failed during a run.
class InvariantViolation : public Error {
public:
    enum class Kind { Mass, Positivity, Energy };

    InvariantViolation(Kind kind, int step, const std::string& detail)
        : Error("invariant violation (" + kind_name(kind) + ") at step " +
                std::to_string(step) + ": " + detail),
          kind_(kind), step_(step) {}

    Kind kind() const { return kind_; }
    int step() const { return step_; }

private:
    static std::string kind_name(Kind k) {
        switch (k) {
            case Kind::Mass: return "mass";
            case Kind::Positivity: return "positivity";
            case Kind::Energy: return "energy";
        }
        return "?";
    }
    Kind kind_;
    int step_;
};

/// Configuration file could not be parsed.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

/// Configuration parsed but failed validation; carries the offending key.
class ValidationError : public Error {
public:
    ValidationError(const std::string& key, const std::string& reason)
        : Error("invalid config key '" + key + "': " + reason), key_(key) {}
    const std::string& key() const { return key_; }
private:
    std::string key_;
};

} // namespace pnpch
