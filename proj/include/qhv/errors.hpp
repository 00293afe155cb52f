#pragma once

#include <stdexcept>
#include <string>

namespace qhv {

/// Root of the library's exception hierarchy.  Everything qhv throws on a
/// *mathematically meaningful* failure (poles, degenerate inputs, exponents
/// that refuse to be integers) derives from this, so callers can distinguish
/// "this sample point is bad, pick another" from genuine programming errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A sample point violates the basic nondegeneracy constraints
/// (t, c nonzero; |t| != 1 so the base q = t^2 is not a root of unity).
class DegeneratePoint : public Error {
public:
    explicit DegeneratePoint(const std::string& what) : Error(what) {}
};

/// rat_pow(0, e) with e < 0.
class ZeroToNegativePower : public Error {
public:
    explicit ZeroToNegativePower(const std::string& what) : Error(what) {}
};

/// A negative-index shifted factorial (x)_n hit a zero factor, i.e. x is a
/// positive integer inside the reflected range and the value would be 1/0.
class PoleInFactorial : public Error {
public:
    explicit PoleInFactorial(const std::string& what) : Error(what) {}
};

/// A denominator Pochhammer symbol of a term-fraction evaluated to zero.
class PoleInFraction : public Error {
public:
    explicit PoleInFraction(const std::string& what) : Error(what) {}
};

/// A series denominator vanished at the chosen point (division by zero while
/// summing); the point must be rejected and resampled.
class PoleInSeries : public Error {
public:
    explicit PoleInSeries(const std::string& what) : Error(what) {}
};

/// A closed-form right-hand side hit a vanishing denominator at the point.
class PoleInClosedForm : public Error {
public:
    explicit PoleInClosedForm(const std::string& what) : Error(what) {}
};

/// An exponent that must be an integer for the expression to live in the
/// rational world (e.g. (n+2i)/3 on a gated support) failed to be one.
/// This is always a bug or a misuse, never a sampling accident.
class NonintegralExponent : public Error {
public:
    explicit NonintegralExponent(const std::string& what) : Error(what) {}
};

/// The rejection sampler could not find an admissible point within its
/// attempt budget.
class SamplingExhausted : public Error {
public:
    explicit SamplingExhausted(const std::string& what) : Error(what) {}
};

} // namespace qhv
