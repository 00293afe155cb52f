#pragma once

#include <string>

#include "qhv/errors.hpp"
#include "qhv/rational.hpp"

namespace qhv {

/// Signed monomial  sign * t^tExp * c^cExp  in the two rationalizing
/// variables.  The whole q-side of the catalog works in the substitution
///   q = t^2,  a = c^2   (b = c^2 on the reversed side),
/// under which every radical the formulas mention becomes a monomial:
///   sqrt(a)      -> c            (by definition; the branch choice)
///   sqrt(q a)    -> t c
///   q^{-n}       -> t^{-2n}
/// so symbols like (t-units, c-units) exponents stay integers throughout.
struct Monomial {
    int sign = 1; ///< +1 or -1
    int tExp = 0;
    int cExp = 0;

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Handy constructors.
constexpr Monomial mono_one() { return {1, 0, 0}; }
constexpr Monomial mono_t(int e = 1) { return {1, e, 0}; }
constexpr Monomial mono_c(int e = 1) { return {1, 0, e}; }
/// q^j as a monomial: t^{2j}.
constexpr Monomial mono_q_pow(int j) { return {1, 2 * j, 0}; }

constexpr Monomial mono_mul(const Monomial& x, const Monomial& y) {
    return {x.sign * y.sign, x.tExp + y.tExp, x.cExp + y.cExp};
}

constexpr Monomial mono_neg(const Monomial& x) { return {-x.sign, x.tExp, x.cExp}; }

constexpr Monomial mono_pow(const Monomial& x, int e) {
    return {(e % 2 == 0) ? 1 : x.sign, x.tExp * e, x.cExp * e};
}

/// sqrt of a monomial with even exponents and positive sign.  This is how
/// phi65's very-well-poised parameter list gets its sqrt(a): the caller
/// supplies a as a monomial, we halve the exponents.  Odd exponents or a
/// negative sign have no monomial square root and throw.
inline Monomial mono_sqrt(const Monomial& x) {
    if (x.sign < 0 || x.tExp % 2 != 0 || x.cExp % 2 != 0)
        throw NonintegralExponent("mono_sqrt: monomial has no monomial square root");
    return {1, x.tExp / 2, x.cExp / 2};
}

inline std::string mono_to_string(const Monomial& m) {
    std::string s = m.sign < 0 ? "-" : "";
    bool any = false;
    if (m.tExp != 0) { s += "t^" + std::to_string(m.tExp); any = true; }
    if (m.cExp != 0) { s += (any ? "*" : "") + std::string("c^") + std::to_string(m.cExp); any = true; }
    if (!any) s += "1";
    return s;
}

/// A concrete rational evaluation point for the q-side.  q and a are
/// derived once (q = t^2, a = c^2); a doubles as b on reversed identities.
struct SamplePoint {
    Rat t, c;
    Rat q, a;
};

/// Validates the nondegeneracy constraints and precomputes q, a:
/// t and c nonzero, |t| != 1 so q = t^2 is neither 0 nor 1 (q a root of
/// unity would kill the (q;q)_k denominators).
inline SamplePoint make_sample_point(const Rat& t, const Rat& c) {
    if (t == 0 || c == 0)
        throw DegeneratePoint("make_sample_point: t and c must be nonzero");
    if (t == 1 || t == -1)
        throw DegeneratePoint("make_sample_point: |t| = 1 makes q = 1");
    SamplePoint pt;
    pt.t = t;
    pt.c = c;
    pt.q = t * t;
    pt.a = c * c;
    return pt;
}

inline Rat monomial_eval(const Monomial& m, const SamplePoint& pt) {
    Rat v = rat_pow(pt.t, m.tExp) * rat_pow(pt.c, m.cExp);
    return m.sign < 0 ? -v : v;
}

} // namespace qhv
