#pragma once

#include <functional>
#include <string>

#include "qhv/errors.hpp"
#include "qhv/monomial.hpp"
#include "qhv/prng.hpp"
#include "qhv/rational.hpp"

namespace qhv {

/// Extra admissibility predicates on top of the SamplePoint invariants.
/// Leave a predicate empty to accept everything.
struct SampleConstraints {
    std::function<bool(const Rat& t, const Rat& c)> admitPoint;
    std::function<bool(const Rat& x)> admitParameter;
};

/// One nonzero rational with |numerator|, denominator <= bound, uniform over
/// the (sign, numerator, denominator) grid before reduction.  Reduction can
/// only shrink the entries, so the bound survives canonicalization.
inline Rat sample_rational(Prng& prng, int bound) {
    bool negative = prng.next_bool();
    int num = prng.next_int(1, bound);
    int den = prng.next_int(1, bound);
    Rat v(num, den);
    return negative ? -v : v;
}

/// Draw a (t, c) sample point: both coordinates nonzero with entries bounded
/// by `bound`, |t| != 1 (so q = t^2 avoids 0 and 1), and any caller
/// constraint satisfied.  Rejection-samples up to maxAttempts times.
inline SamplePoint sample_point(Prng& prng, int bound, const SampleConstraints& constraints = {},
                                int maxAttempts = 100) {
    if (bound < 2) throw Error("sample_point: bound must be >= 2");
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        Rat t = sample_rational(prng, bound);
        Rat c = sample_rational(prng, bound);
        if (t == 1 || t == -1) continue;
        if (constraints.admitPoint && !constraints.admitPoint(t, c)) continue;
        return make_sample_point(t, c);
    }
    throw SamplingExhausted("sample_point: no admissible (t,c) in " +
                            std::to_string(maxAttempts) + " attempts");
}

/// Draw a single nonzero rational parameter for the classical identities.
inline Rat sample_parameter(Prng& prng, int bound, const SampleConstraints& constraints = {},
                            int maxAttempts = 100) {
    if (bound < 2) throw Error("sample_parameter: bound must be >= 2");
    for (int attempt = 0; attempt < maxAttempts; ++attempt) {
        Rat x = sample_rational(prng, bound);
        if (constraints.admitParameter && !constraints.admitParameter(x)) continue;
        return x;
    }
    throw SamplingExhausted("sample_parameter: no admissible value in " +
                            std::to_string(maxAttempts) + " attempts");
}

} // namespace qhv
