#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qhv/errors.hpp"

namespace qhv {

/// Arbitrary-precision integer / rational.  cpp_rational keeps every value
/// in canonical form: lowest terms, denominator > 0, and 0 == 0/1.  All
/// engine arithmetic is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// x^e for integer e of either sign.  x^0 == 1 (including 0^0 == 1, the
/// empty-product convention used throughout).  0^e with e < 0 throws.
inline Rat rat_pow(const Rat& x, long long e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw ZeroToNegativePower("rat_pow: 0 raised to negative power");
        return Rat(0);
    }
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                 : static_cast<unsigned long long>(e);
    Rat base = x, acc(1);
    while (k != 0) {
        if (k & 1ULL) acc *= base;
        base *= base;
        k >>= 1;
    }
    if (e < 0) acc = Rat(1) / acc;
    return acc;
}

/// Render as "num/den", always with the explicit denominator ("3/1", "-2/5").
/// The canonical-form guarantee makes this a unique representation.
inline std::string rat_to_string(const Rat& x) {
    return numerator(x).str() + "/" + denominator(x).str();
}

/// Parse "num", "num/den", or "-num/den".  Whitespace is not tolerated;
/// a zero denominator throws.
inline Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    const std::string numPart = slash == std::string::npos ? s : s.substr(0, slash);
    const std::string denPart = slash == std::string::npos ? "1" : s.substr(slash + 1);
    // cpp_int's string constructor accepts "" as zero; reject it up front.
    if (numPart.empty() || denPart.empty())
        throw Error("rat_from_string: cannot parse '" + s + "'");
    Int num, den;
    try {
        num = Int(numPart);
        den = Int(denPart);
    } catch (const std::runtime_error&) {
        throw Error("rat_from_string: cannot parse '" + s + "'");
    }
    if (den == 0) throw Error("rat_from_string: zero denominator in '" + s + "'");
    return Rat(num, den);
}

} // namespace qhv
