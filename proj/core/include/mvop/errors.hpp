#pragma once

#include <stdexcept>
#include <string>

namespace mvop {

/// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// 2x2 inversion attempted on a numerically singular matrix.
struct SingularMatrix : Error {
    using Error::Error;
};

/// Parameter triple outside the admissible window |alpha-beta| < |v| < alpha+beta+2.
struct ParamOutOfWindow : Error {
    enum class Side { lower, upper, nonfinite };
    Side side;
    ParamOutOfWindow(Side s, const std::string& msg) : Error(msg), side(s) {}
};

/// Evaluation point outside the weight's open interval (0,1).
struct DomainError : Error {
    using Error::Error;
};

/// A squared-norm matrix acquired a non-positive diagonal entry.
struct NormNotPositive : Error {
    using Error::Error;
};

/// The weight failed its construction-time positivity scan.
struct WeightNotPositive : Error {
    using Error::Error;
};

/// A coefficient recursion divisor fell below the collision threshold.
struct EigenvalueCollision : Error {
    using Error::Error;
};

/// Series evaluation hit the hard term cap before meeting the tolerance.
struct NoConvergence : Error {
    using Error::Error;
};

} // namespace mvop
