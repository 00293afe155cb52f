#pragma once

#include <string>
#include <vector>

#include "qhv/errors.hpp"
#include "qhv/monomial.hpp"
#include "qhv/rational.hpp"

namespace qhv {

/// Shifted factorial $(x)_n$ for any integer n:
///   n>0: prod_{k=0}^{n-1} (x+k)
///   n=0: 1
///   n<0: (-1)^n / prod_{k=1}^{-n} (k-x)
/// The n<0 branch has poles at x in {1, ..., -n}.
inline Rat shifted_factorial(const Rat& x, int n) {
    if (n == 0) return Rat(1);
    Rat p(1);
    if (n > 0) {
        for (int k = 0; k < n; ++k) p *= x + k;
        return p;
    }
    for (int k = 1; k <= -n; ++k) {
        Rat f = Rat(k) - x;
        if (f == 0)
            throw PoleInFactorial("shifted_factorial: (x)_" + std::to_string(n) +
                                  " pole at x = " + rat_to_string(x));
        p *= f;
    }
    return (n % 2 == 0 ? Rat(1) : Rat(-1)) / p;
}

/// q-shifted factorial $(x;q)_n$ for any integer n:
///   n>0: prod_{i=0}^{n-1} (1 - x q^i)
///   n=0: 1
///   n<0: 1 / prod_{j=n}^{-1} (1 - x q^j)
/// The n<0 branch has poles where some 1 - x q^j vanishes.
inline Rat q_pochhammer(const Rat& x, const Rat& q, int n) {
    if (n == 0) return Rat(1);
    Rat p(1);
    if (n > 0) {
        Rat qi(1); // q^i
        for (int i = 0; i < n; ++i) {
            p *= 1 - x * qi;
            qi *= q;
        }
        return p;
    }
    if (q == 0)
        throw PoleInFactorial("q_pochhammer: negative index requires q != 0");
    Rat qj = rat_pow(q, n); // q^j starting at j = n
    for (int j = n; j < 0; ++j) {
        Rat f = 1 - x * qj;
        if (f == 0)
            throw PoleInFactorial("q_pochhammer: (x;q)_" + std::to_string(n) +
                                  " pole at x = " + rat_to_string(x) +
                                  ", q = " + rat_to_string(q));
        p *= f;
        qj *= q;
    }
    return Rat(1) / p;
}

/// One symbol $(base; q^step)_k$ with a monomial base; the index k is fixed
/// at evaluation time.  step=1 gives (x;q)_k, step=3 gives (x;q^3)_k.
struct PochSpec {
    Monomial base;
    int step = 1;
};

inline std::string poch_to_string(const PochSpec& p) {
    return "(" + mono_to_string(p.base) + ";q^" + std::to_string(p.step) + ")";
}

/// $(base; q^step)_n$ at the point, i.e. q_pochhammer with x the evaluated
/// base monomial and modulus t^{2*step}.
inline Rat poch_eval(const PochSpec& spec, int n, const SamplePoint& pt) {
    return q_pochhammer(monomial_eval(spec.base, pt), rat_pow(pt.q, spec.step), n);
}

/// Product of numerator symbols over product of denominator symbols, all at
/// one shared index: the bracket notation
///   [a, b, ..., c ; alpha, beta, ..., gamma]_n
/// used by every closed form here.
struct FractionSpec {
    std::vector<PochSpec> numerators;
    std::vector<PochSpec> denominators;
    int index = 0;
};

inline Rat fraction_eval(const FractionSpec& spec, const SamplePoint& pt) {
    Rat v(1);
    for (const auto& p : spec.numerators) v *= poch_eval(p, spec.index, pt);
    for (const auto& p : spec.denominators) {
        Rat d = poch_eval(p, spec.index, pt);
        if (d == 0)
            throw PoleInFraction("fraction_eval: " + poch_to_string(p) + "_" +
                                 std::to_string(spec.index) + " vanishes");
        v /= d;
    }
    return v;
}

} // namespace qhv
