#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "qhv/errors.hpp"
#include "qhv/examples.hpp"
#include "qhv/lemmas.hpp"
#include "qhv/monomial.hpp"
#include "qhv/pochhammer.hpp"
#include "qhv/rational.hpp"
#include "qhv/series.hpp"

namespace qhv {

/// chi(n) = 1 iff n is a nonnegative multiple of 3.  The closed forms only
/// reference fractional powers like a^{(n+2i)/3} on the chi-support, and the
/// evaluators below gate on chi BEFORE forming any exponent, so fractional
/// powers never materialize.
inline int chi(int n) { return (n >= 0 && n % 3 == 0) ? 1 : 0; }

/// q-side identities evaluate at a (t, c) sample point; classical ones at a
/// single rational parameter.
using EvalPoint = std::variant<SamplePoint, Rat>;

inline const SamplePoint& as_sample_point(const EvalPoint& p) {
    if (const auto* sp = std::get_if<SamplePoint>(&p)) return *sp;
    throw Error("identity expects a (t,c) sample point");
}

inline const Rat& as_parameter(const EvalPoint& p) {
    if (const auto* r = std::get_if<Rat>(&p)) return *r;
    throw Error("identity expects a single rational parameter");
}

enum class Family { qside, classical };

/// One verifiable identity: a left-hand sum and a right-hand closed form
/// that must agree exactly at every admissible point.
struct IdentityDescriptor {
    std::string id;
    Family family = Family::qside;
    bool takesEll = false; ///< base equations and printed examples ignore l
    int fixedEll = 0;      ///< the pinned l of a printed example (1 or 2)
    std::function<Rat(int n, int ell, const EvalPoint&)> lhs;
    std::function<Rat(int n, int ell, const EvalPoint&)> rhs;
    std::string note;
};

/// Default rationalization sqrt(a) = c, i.e. a = c^2.  The reversed-side
/// sums read the same monomial as sqrt(b).
inline constexpr Monomial kSqrtParam{1, 0, 1};

/// The reversal substitution a -> q^{1-2n}/b in square-root form:
/// sqrt(a) = t^{1-2n}/c (with b = c^2).
inline Monomial reversal_sqrt_a(int n) { return Monomial{1, 1 - 2 * n, -1}; }

// ---------------------------------------------------------------------------
// Left-hand sum builders (q-side), parameterized by the sqrt(a) / sqrt(b)
// monomial so the reversal substitution can reuse them verbatim.
// ---------------------------------------------------------------------------

/// sum_{k=0}^{n} (a;q^3)_k [q^{-n}, q^{n-l}a ; q, sa, -sa, t*sa, -t*sa]_k q^k
inline QSeriesSpec lhs_spec_thm_a(int n, int ell, const Monomial& sa) {
    const Monomial a = mono_pow(sa, 2);
    QSeriesSpec s;
    s.numerators = {{a, 3}, {mono_q_pow(-n), 1}, {mono_mul(mono_q_pow(n - ell), a), 1}};
    s.denominators = {{mono_q_pow(1), 1},
                      {sa, 1},
                      {mono_neg(sa), 1},
                      {mono_mul(mono_t(1), sa), 1},
                      {mono_neg(mono_mul(mono_t(1), sa)), 1}};
    s.argument = mono_q_pow(1);
    s.upper = n;
    return s;
}

/// As lhs_spec_thm_a but with sqrt(q^{1-2l} a) = t^{1-2l} sa in place of
/// sqrt(qa) in the denominator list.
inline QSeriesSpec lhs_spec_thm_c(int n, int ell, const Monomial& sa) {
    QSeriesSpec s = lhs_spec_thm_a(n, ell, sa);
    s.denominators[3] = {mono_mul(mono_t(1 - 2 * ell), sa), 1};
    return s;
}

/// sum_{k=0}^{n} [q^{-n}, sb, -sb, t*sb, -t*sb ; q, q^l b]_k
///               / (q^{2-n}b;q^3)_k * q^{(1+l)k}
inline QSeriesSpec lhs_spec_thm_e(int n, int ell, const Monomial& sb) {
    const Monomial b = mono_pow(sb, 2);
    QSeriesSpec s;
    s.numerators = {{mono_q_pow(-n), 1},
                    {sb, 1},
                    {mono_neg(sb), 1},
                    {mono_mul(mono_t(1), sb), 1},
                    {mono_neg(mono_mul(mono_t(1), sb)), 1}};
    s.denominators = {{mono_q_pow(1), 1},
                      {mono_mul(mono_q_pow(ell), b), 1},
                      {mono_mul(mono_q_pow(2 - n), b), 3}};
    s.argument = mono_one();
    s.extraQPower = 2 * (1 + ell); // q^{(1+l)k} in t-units
    s.upper = n;
    return s;
}

/// As lhs_spec_thm_e but the sum carries q^l sb instead of sb among the
/// numerator symbols and plain q^k as the running power.
inline QSeriesSpec lhs_spec_thm_g(int n, int ell, const Monomial& sb) {
    const Monomial b = mono_pow(sb, 2);
    QSeriesSpec s;
    s.numerators = {{mono_q_pow(-n), 1},
                    {mono_mul(mono_q_pow(ell), sb), 1},
                    {mono_neg(sb), 1},
                    {mono_mul(mono_t(1), sb), 1},
                    {mono_neg(mono_mul(mono_t(1), sb)), 1}};
    s.denominators = {{mono_q_pow(1), 1},
                      {mono_mul(mono_q_pow(ell), b), 1},
                      {mono_mul(mono_q_pow(2 - n), b), 3}};
    s.argument = mono_q_pow(1);
    s.upper = n;
    return s;
}

// ---------------------------------------------------------------------------
// Left-hand sum builders (classical), parameterized by the free rational.
// ---------------------------------------------------------------------------

/// 3F2(3/4; -n, a, 3a+n-l ; 3a/2, (1+3a)/2)
inline ClassicalSeriesSpec lhs_spec_thm_b(int n, int ell, const Rat& a) {
    return {{Rat(-n), a, 3 * a + n - ell}, {3 * a / 2, (1 + 3 * a) / 2}, Rat(3, 4), n};
}

/// 3F2(3/4; -n, a, 3a+n-l ; 3a/2, (1+3a)/2 - l)
inline ClassicalSeriesSpec lhs_spec_thm_d(int n, int ell, const Rat& a) {
    return {{Rat(-n), a, 3 * a + n - ell}, {3 * a / 2, (1 + 3 * a) / 2 - ell}, Rat(3, 4), n};
}

/// 3F2(4/3; -n, 3b/2, (1+3b)/2 ; 3b+l, b-(n-2)/3)
inline ClassicalSeriesSpec lhs_spec_thm_f(int n, int ell, const Rat& b) {
    return {{Rat(-n), 3 * b / 2, (1 + 3 * b) / 2}, {3 * b + ell, b - Rat(n - 2, 3)}, Rat(4, 3), n};
}

/// 3F2(4/3; -n, 3b/2+l, (1+3b)/2 ; 3b+l, b-(n-2)/3)
inline ClassicalSeriesSpec lhs_spec_thm_h(int n, int ell, const Rat& b) {
    return {{Rat(-n), 3 * b / 2 + ell, (1 + 3 * b) / 2}, {3 * b + ell, b - Rat(n - 2, 3)},
            Rat(4, 3), n};
}

// ---------------------------------------------------------------------------
// Closed forms (q-side).  All are chi-gated i-sums; every exponent required
// to be integral on the chi-support is asserted, never rounded.
// ---------------------------------------------------------------------------

namespace detail {

/// [q, q^2 ; q a, q^2 a]_m in base q^3 — the closed-form tail of the first
/// q-side family.
inline Rat cube_tail_first(const Monomial& a, int m, const SamplePoint& pt) {
    return cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                         {mono_mul(mono_q_pow(1), a), mono_mul(mono_q_pow(2), a)}, m, pt);
}

/// [q, q^2 ; q^{2-2n}/b, q^{3-2n}/b]_m in base q^3 — the tail of the
/// reversed family.
inline Rat cube_tail_reversed(const Monomial& bi, int n, int m, const SamplePoint& pt) {
    return cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                         {mono_mul(mono_q_pow(2 - 2 * n), bi), mono_mul(mono_q_pow(3 - 2 * n), bi)},
                         m, pt);
}

} // namespace detail

/// a^{n/3} [q, q^2 ; qa, q^2 a]_{n/3} chi(n) — the base identity the first
/// family reduces to at l = 0.
inline Rat rhs_eq_q_andrews(int n, const Monomial& sa, const SamplePoint& pt) {
    if (!chi(n)) return Rat(0);
    const Monomial a = mono_pow(sa, 2);
    return rat_pow(monomial_eval(a, pt), n / 3) * detail::cube_tail_first(a, n / 3, pt);
}

/// [q, q^2 ; q/b, q^2 b]_{n/3} chi(n) — the reversed base identity.
inline Rat rhs_eq_q_andrews_rev(int n, const Monomial& sb, const SamplePoint& pt) {
    if (!chi(n)) return Rat(0);
    const Monomial b = mono_pow(sb, 2), bi = mono_pow(sb, -2);
    return detail::cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                                 {mono_mul(mono_q_pow(1), bi), mono_mul(mono_q_pow(2), b)},
                                 n / 3, pt);
}

inline Rat rhs_thm_a(int n, int ell, const Monomial& sa, const SamplePoint& pt) {
    const Monomial a = mono_pow(sa, 2), ai = mono_pow(sa, -2);
    FractionSpec pre;
    pre.numerators = {{mono_mul(mono_q_pow(n - ell), a), 1}};
    pre.denominators = {{mono_mul(mono_q_pow(2 * n - ell), a), 1}};
    pre.index = ell;
    const Rat prefactor = fraction_eval(pre, pt);

    const Rat aVal = monomial_eval(a, pt);
    const Rat normDen = aVal - rat_pow(pt.q, -2 * n);
    if (normDen == 0) throw PoleInClosedForm("closed form: a - q^{-2n} vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        if ((n + 2 * i) % 3 != 0)
            throw NonintegralExponent("closed form: (n+2i)/3 not integral on chi-support");
        Rat term = rat_pow(aVal, (n + 2 * i) / 3);
        term *= rat_pow(pt.q, static_cast<long long>(ell + 2 * n - i) * i);
        term *= (aVal - rat_pow(pt.q, 2 * i - 2 * n)) / normDen;
        FractionSpec fi;
        fi.numerators = {{mono_q_pow(-ell), 1}, {mono_q_pow(-n), 1},
                         {mono_mul(mono_q_pow(-2 * n), ai), 1}};
        fi.denominators = {{mono_q_pow(1), 1}, {mono_mul(mono_q_pow(1 + ell - 2 * n), ai), 1},
                           {mono_mul(mono_q_pow(n - i), a), 1}};
        fi.index = i;
        term *= fraction_eval(fi, pt);
        term *= detail::cube_tail_first(a, m, pt);
        total += term;
    }
    return prefactor * total;
}

inline Rat rhs_thm_c(int n, int ell, const Monomial& sa, const SamplePoint& pt) {
    const Monomial a = mono_pow(sa, 2), ai = mono_pow(sa, -2);
    FractionSpec pre;
    pre.numerators = {{mono_mul(mono_q_pow(n - ell), a), 1},
                      {mono_mul(mono_t(1 + 2 * n - 2 * ell), sa), 1}};
    pre.denominators = {{mono_mul(mono_q_pow(2 * n - ell), a), 1},
                        {mono_mul(mono_t(1 - 2 * ell), sa), 1}};
    pre.index = ell;
    const Rat prefactor = fraction_eval(pre, pt);

    const Rat aVal = monomial_eval(a, pt);
    const Rat saVal = monomial_eval(sa, pt);
    const Rat normDen = 1 - rat_pow(pt.q, 2 * n) * aVal;
    if (normDen == 0) throw PoleInClosedForm("closed form: 1 - q^{2n} a vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        if ((2 * n - 5 * i) % 3 != 0)
            throw NonintegralExponent("closed form: (2n-5i)/6 not integral on chi-support");
        // a^{(2n-5i)/6} = sa^{(2n-5i)/3}
        Rat term = rat_pow(saVal, (2 * n - 5 * i) / 3);
        term *= rat_pow(pt.t, static_cast<long long>(5 + 2 * ell) * i); // q^{(5/2+l)i}
        term *= (1 - rat_pow(pt.q, 2 * n - 2 * i) * aVal) / normDen;
        FractionSpec fi;
        fi.numerators = {{mono_q_pow(-ell), 1}, {mono_q_pow(-n), 1},
                         {mono_mul(mono_q_pow(-2 * n), ai), 1}};
        fi.denominators = {{mono_q_pow(1), 1}, {mono_mul(mono_q_pow(1 + ell - 2 * n), ai), 1},
                           {mono_mul(mono_q_pow(1 - n), ai), 1}};
        fi.index = i;
        term *= fraction_eval(fi, pt);
        term *= detail::cube_tail_first(a, m, pt);
        total += term;
    }
    return prefactor * total;
}

inline Rat rhs_thm_e(int n, int ell, const Monomial& sb, const SamplePoint& pt) {
    const Monomial b = mono_pow(sb, 2), bi = mono_pow(sb, -2);
    const PochSpec preBase1{mono_mul(mono_q_pow(1 - 2 * n), bi), 1};
    const PochSpec preBase3{mono_mul(mono_q_pow(1 - 2 * n), bi), 3};
    const Rat preDen = poch_eval(preBase3, n, pt);
    if (preDen == 0) throw PoleInClosedForm("closed form: (q^{1-2n}/b;q^3)_n vanishes");
    const Rat prefactor = poch_eval(preBase1, n, pt) / preDen;

    const Rat bVal = monomial_eval(b, pt);
    const Rat normDen = pt.q - bVal;
    if (normDen == 0) throw PoleInClosedForm("closed form: q - b vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        const long long E = static_cast<long long>(4 + 4 * n + 6 * ell - 6 * i) * i - n -
                            static_cast<long long>(n) * n;
        if (E % 3 != 0)
            throw NonintegralExponent("closed form: q-exponent /6 not integral on chi-support");
        if ((n + 2 * i) % 3 != 0)
            throw NonintegralExponent("closed form: (n+2i)/3 not integral on chi-support");
        Rat term = rat_pow(pt.t, E / 3); // q^{E/6} = t^{E/3}
        if (n % 2 != 0) term = -term;    // (-1)^n
        term *= rat_pow(bVal, -(n + 2 * i) / 3);
        term *= (pt.q - rat_pow(pt.q, 2 * i) * bVal) / normDen;
        FractionSpec fi;
        fi.numerators = {{mono_q_pow(-ell), 1}, {mono_q_pow(-n), 1},
                         {mono_mul(mono_q_pow(-1), b), 1}};
        fi.denominators = {{mono_q_pow(1), 1}, {mono_mul(mono_q_pow(ell), b), 1},
                           {mono_mul(mono_q_pow(1 - n - i), bi), 1}};
        fi.index = i;
        term *= fraction_eval(fi, pt);
        term *= detail::cube_tail_reversed(bi, n, m, pt);
        total += term;
    }
    return prefactor * total;
}

inline Rat rhs_thm_g(int n, int ell, const Monomial& sb, const SamplePoint& pt) {
    const Monomial b = mono_pow(sb, 2), bi = mono_pow(sb, -2);
    const PochSpec preBase1{mono_mul(mono_q_pow(1 - 2 * n), bi), 1};
    const PochSpec preBase3{mono_mul(mono_q_pow(1 - 2 * n), bi), 3};
    const Rat preDen = poch_eval(preBase3, n, pt);
    if (preDen == 0) throw PoleInClosedForm("closed form: (q^{1-2n}/b;q^3)_n vanishes");
    const Rat prefactor = poch_eval(preBase1, n, pt) / preDen;

    const Rat bVal = monomial_eval(b, pt);
    const Rat sbVal = monomial_eval(sb, pt);
    const Rat normDen = pt.q - bVal;
    if (normDen == 0) throw PoleInClosedForm("closed form: q - b vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        const long long E = static_cast<long long>(10 * n + 6 * ell - 2) * i - n -
                            static_cast<long long>(n) * n;
        if (E % 3 != 0)
            throw NonintegralExponent("closed form: q-exponent /6 not integral on chi-support");
        if ((2 * n - 5 * i) % 3 != 0)
            throw NonintegralExponent("closed form: (2n-5i)/6 not integral on chi-support");
        Rat term = rat_pow(pt.t, E / 3); // q^{E/6} = t^{E/3}
        if (n % 2 != 0) term = -term;    // (-1)^n
        // b^{-(2n-5i)/6} = sb^{-(2n-5i)/3}
        term *= rat_pow(sbVal, -(2 * n - 5 * i) / 3);
        term *= (pt.q - rat_pow(pt.q, 2 * i) * bVal) / normDen;
        FractionSpec fi;
        fi.numerators = {{mono_q_pow(-ell), 1}, {mono_q_pow(-n), 1},
                         {mono_mul(mono_q_pow(-1), b), 1}};
        fi.denominators = {{mono_q_pow(1), 1}, {mono_mul(mono_q_pow(ell), b), 1},
                           {mono_mul(mono_q_pow(n), b), 1}};
        fi.index = i;
        term *= fraction_eval(fi, pt);
        term *= detail::cube_tail_reversed(bi, n, m, pt);
        total += term;
    }
    return prefactor * total;
}

// ---------------------------------------------------------------------------
// Closed forms (classical).
// ---------------------------------------------------------------------------

/// [1/3, 2/3 ; 1/3+a, 2/3+a]_{n/3} chi(n)
inline Rat rhs_eq_andrews(int n, const Rat& a) {
    if (!chi(n)) return Rat(0);
    return detail::classical_fraction({Rat(1, 3), Rat(2, 3)}, {Rat(1, 3) + a, Rat(2, 3) + a},
                                      n / 3);
}

/// [1/3, 2/3 ; 1/3-b, 2/3+b]_{n/3} chi(n)
inline Rat rhs_eq_andrews_rev(int n, const Rat& b) {
    if (!chi(n)) return Rat(0);
    return detail::classical_fraction({Rat(1, 3), Rat(2, 3)}, {Rat(1, 3) - b, Rat(2, 3) + b},
                                      n / 3);
}

inline Rat rhs_thm_b(int n, int ell, const Rat& a) {
    const Rat preDen = shifted_factorial(1 - 2 * n - 3 * a, ell);
    if (preDen == 0) throw PoleInClosedForm("closed form: (1-2n-3a)_l vanishes");
    const Rat prefactor = shifted_factorial(1 - n - 3 * a, ell) / preDen;
    const Rat normDen = 3 * a + 2 * n;
    if (normDen == 0) throw PoleInClosedForm("closed form: 3a + 2n vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        Rat term = (3 * a + 2 * n - 2 * i) / normDen;
        if (i % 2 != 0) term = -term;
        term *= detail::classical_fraction({Rat(-ell), Rat(-n), -2 * n - 3 * a},
                                           {Rat(1), 1 - n - 3 * a, 1 + ell - 2 * n - 3 * a}, i);
        term *= detail::classical_fraction({Rat(1, 3), Rat(2, 3)},
                                           {Rat(1, 3) + a, Rat(2, 3) + a}, m);
        total += term;
    }
    return prefactor * total;
}

inline Rat rhs_thm_d(int n, int ell, const Rat& a) {
    const Rat preDen =
        shifted_factorial(1 - 3 * a - 2 * n, ell) * shifted_factorial((1 - 3 * a) / 2, ell);
    if (preDen == 0) throw PoleInClosedForm("closed form: (1-3a-2n)_l ((1-3a)/2)_l vanishes");
    const Rat prefactor =
        shifted_factorial(1 - 3 * a - n, ell) * shifted_factorial((1 - 3 * a) / 2 - n, ell) / preDen;
    const Rat normDen = 3 * a + 2 * n;
    if (normDen == 0) throw PoleInClosedForm("closed form: 3a + 2n vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        Rat term = (3 * a + 2 * n - 2 * i) / normDen;
        term *= detail::classical_fraction({Rat(-ell), Rat(-n), -2 * n - 3 * a},
                                           {Rat(1), 1 - n - 3 * a, 1 + ell - 2 * n - 3 * a}, i);
        term *= detail::classical_fraction({Rat(1, 3), Rat(2, 3)},
                                           {Rat(1, 3) + a, Rat(2, 3) + a}, m);
        total += term;
    }
    return prefactor * total;
}

inline Rat rhs_thm_f(int n, int ell, const Rat& b) {
    const Rat preDen = shifted_factorial(Rat(1 - 2 * n, 3) - b, n);
    if (preDen == 0) throw PoleInClosedForm("closed form: ((1-2n)/3 - b)_n vanishes");
    // The 3^{-n} weight is i-independent, so it lives with the prefactor.
    const Rat prefactor = shifted_factorial(3 * b + n, n) / (preDen * rat_pow(Rat(3), n));
    const Rat normDen = 3 * b - 1;
    if (normDen == 0) throw PoleInClosedForm("closed form: 3b - 1 vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        Rat term = (3 * b - 1 + 2 * i) / normDen;
        if (i % 2 != 0) term = -term;
        term *= detail::classical_fraction({Rat(-ell), Rat(-n), 3 * b - 1},
                                           {Rat(1), 3 * b + n, 3 * b + ell}, i);
        term *= detail::classical_fraction(
            {Rat(1, 3), Rat(2, 3)}, {Rat(2 - 2 * n, 3) - b, Rat(3 - 2 * n, 3) - b}, m);
        total += term;
    }
    return prefactor * total;
}

inline Rat rhs_thm_h(int n, int ell, const Rat& b) {
    const Rat preDen = shifted_factorial(Rat(1 - 2 * n, 3) - b, n);
    if (preDen == 0) throw PoleInClosedForm("closed form: ((1-2n)/3 - b)_n vanishes");
    const Rat prefactor = shifted_factorial(3 * b + n, n) / (preDen * rat_pow(Rat(3), n));
    const Rat normDen = 3 * b - 1;
    if (normDen == 0) throw PoleInClosedForm("closed form: 3b - 1 vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        if (!chi(n - i)) continue;
        const int m = (n - i) / 3;
        Rat term = (3 * b - 1 + 2 * i) / normDen;
        term *= detail::classical_fraction({Rat(-ell), Rat(-n), 3 * b - 1},
                                           {Rat(1), 3 * b + n, 3 * b + ell}, i);
        term *= detail::classical_fraction(
            {Rat(1, 3), Rat(2, 3)}, {Rat(2 - 2 * n, 3) - b, Rat(3 - 2 * n, 3) - b}, m);
        total += term;
    }
    return prefactor * total;
}

// ---------------------------------------------------------------------------
// Printed-example dispatcher, reversal check, catalog.
// ---------------------------------------------------------------------------

/// The printed l=1 / l=2 closed form of one of the eight general identities,
/// evaluated directly (independent of the general-l right-hand sides).
inline Rat example_rhs(char thm, int ell, int n, const EvalPoint& point) {
    switch (thm) {
    case 'a': case 'c': case 'e': case 'g':
        return example_rhs_qside(thm, ell, n, as_sample_point(point));
    case 'b': case 'd': case 'f': case 'h':
        return example_rhs_classical(thm, ell, n, as_parameter(point));
    default:
        throw Error(std::string("example_rhs: unknown identity letter '") + thm + "'");
    }
}

enum class ReversalPair { aToE, cToG };

/// The reversal k -> n-k with a -> q^{1-2n}/b maps each first-family sum
/// onto its reversed partner termwise:
///   term_first|sub(n-k) = term_first|sub(n) * term_second(k)  for all k,
/// hence sum_first|sub = (last term) * sum_second.  (The two *sums* are not
/// equal outright; the normalization by the last term is part of the
/// reversal.)  Returns true iff the termwise relation and the normalized
/// aggregate both hold exactly.
inline bool reversal_check(int n, int ell, const SamplePoint& pt, ReversalPair pair) {
    const Monomial subSa = reversal_sqrt_a(n);
    const QSeriesSpec first = (pair == ReversalPair::aToE) ? lhs_spec_thm_a(n, ell, subSa)
                                                           : lhs_spec_thm_c(n, ell, subSa);
    const QSeriesSpec second = (pair == ReversalPair::aToE) ? lhs_spec_thm_e(n, ell, kSqrtParam)
                                                            : lhs_spec_thm_g(n, ell, kSqrtParam);
    const std::vector<Rat> tf = incremental_term_ratio(first, pt);
    const std::vector<Rat> ts = incremental_term_ratio(second, pt);
    const Rat& last = tf[static_cast<size_t>(n)];
    if (last == 0)
        throw PoleInSeries("reversal_check: normalizing term vanishes (degenerate point)");
    for (int k = 0; k <= n; ++k)
        if (tf[static_cast<size_t>(n - k)] != last * ts[static_cast<size_t>(k)]) return false;
    Rat sumFirst(0), sumSecond(0);
    for (const Rat& v : tf) sumFirst += v;
    for (const Rat& v : ts) sumSecond += v;
    return sumFirst == last * sumSecond;
}

/// All 29 identities: 5 base equations, 8 general theorems, 16 printed
/// examples.  Ids are stable; catalog order is the listing order.
inline const std::vector<IdentityDescriptor>& catalog_list() {
    static const std::vector<IdentityDescriptor> catalog = [] {
        std::vector<IdentityDescriptor> ids;
        const Monomial sp = kSqrtParam;

        ids.push_back({"eq-andrews", Family::classical, false, 0,
                       [](int n, int, const EvalPoint& p) {
                           return sum_classical_series_fast(lhs_spec_thm_b(n, 0, as_parameter(p)));
                       },
                       [](int n, int, const EvalPoint& p) {
                           return rhs_eq_andrews(n, as_parameter(p));
                       },
                       "terminating 3F2(3/4) = chi-gated classical product"});
        ids.push_back({"eq-andrews-rev", Family::classical, false, 0,
                       [](int n, int, const EvalPoint& p) {
                           return sum_classical_series_fast(lhs_spec_thm_f(n, 0, as_parameter(p)));
                       },
                       [](int n, int, const EvalPoint& p) {
                           return rhs_eq_andrews_rev(n, as_parameter(p));
                       },
                       "reversed terminating 3F2(4/3) = chi-gated classical product"});
        // Fixed generic parameters for the very-well-poised building block:
        // a = c^2, b = -t c, c-param = t^3; the grid n is the termination
        // index of the sum.
        ids.push_back({"eq-phi65", Family::qside, false, 0,
                       [sp](int n, int, const EvalPoint& p) {
                           return phi65_pair(mono_c(2), Monomial{-1, 1, 1}, mono_t(3), n,
                                             as_sample_point(p))
                               .first;
                       },
                       [sp](int n, int, const EvalPoint& p) {
                           return phi65_pair(mono_c(2), Monomial{-1, 1, 1}, mono_t(3), n,
                                             as_sample_point(p))
                               .second;
                       },
                       "very-well-poised 6phi5 sum = closed product (termination index n)"});
        ids.push_back({"eq-q-andrews", Family::qside, false, 0,
                       [sp](int n, int, const EvalPoint& p) {
                           return sum_q_series_fast(lhs_spec_thm_a(n, 0, sp), as_sample_point(p));
                       },
                       [sp](int n, int, const EvalPoint& p) {
                           return rhs_eq_q_andrews(n, sp, as_sample_point(p));
                       },
                       "cubic-argument q-series sum = chi-gated cubic-base product"});
        ids.push_back({"eq-q-andrews-rev", Family::qside, false, 0,
                       [sp](int n, int, const EvalPoint& p) {
                           return sum_q_series_fast(lhs_spec_thm_e(n, 0, sp), as_sample_point(p));
                       },
                       [sp](int n, int, const EvalPoint& p) {
                           return rhs_eq_q_andrews_rev(n, sp, as_sample_point(p));
                       },
                       "reversed cubic-argument q-series sum = chi-gated cubic-base product"});

        ids.push_back({"thm-a", Family::qside, true, 0,
                       [sp](int n, int ell, const EvalPoint& p) {
                           return sum_q_series_fast(lhs_spec_thm_a(n, ell, sp), as_sample_point(p));
                       },
                       [sp](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_a(n, ell, sp, as_sample_point(p));
                       },
                       "first q-side extension (extra parameter l in the sum)"});
        ids.push_back({"thm-b", Family::classical, true, 0,
                       [](int n, int ell, const EvalPoint& p) {
                           return sum_classical_series_fast(lhs_spec_thm_b(n, ell, as_parameter(p)));
                       },
                       [](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_b(n, ell, as_parameter(p));
                       },
                       "first classical extension (3F2(3/4) with shifted top parameter)"});
        ids.push_back({"thm-c", Family::qside, true, 0,
                       [sp](int n, int ell, const EvalPoint& p) {
                           return sum_q_series_fast(lhs_spec_thm_c(n, ell, sp), as_sample_point(p));
                       },
                       [sp](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_c(n, ell, sp, as_sample_point(p));
                       },
                       "second q-side extension (sqrt-shifted denominator symbol)"});
        ids.push_back({"thm-d", Family::classical, true, 0,
                       [](int n, int ell, const EvalPoint& p) {
                           return sum_classical_series_fast(lhs_spec_thm_d(n, ell, as_parameter(p)));
                       },
                       [](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_d(n, ell, as_parameter(p));
                       },
                       "second classical extension (3F2(3/4) with shifted bottom parameter)"});
        ids.push_back({"thm-e", Family::qside, true, 0,
                       [sp](int n, int ell, const EvalPoint& p) {
                           return sum_q_series_fast(lhs_spec_thm_e(n, ell, sp), as_sample_point(p));
                       },
                       [sp](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_e(n, ell, sp, as_sample_point(p));
                       },
                       "reversal of the first q-side extension"});
        ids.push_back({"thm-f", Family::classical, true, 0,
                       [](int n, int ell, const EvalPoint& p) {
                           return sum_classical_series_fast(lhs_spec_thm_f(n, ell, as_parameter(p)));
                       },
                       [](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_f(n, ell, as_parameter(p));
                       },
                       "classical limit of the first reversed extension (3F2(4/3))"});
        ids.push_back({"thm-g", Family::qside, true, 0,
                       [sp](int n, int ell, const EvalPoint& p) {
                           return sum_q_series_fast(lhs_spec_thm_g(n, ell, sp), as_sample_point(p));
                       },
                       [sp](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_g(n, ell, sp, as_sample_point(p));
                       },
                       "reversal of the second q-side extension"});
        ids.push_back({"thm-h", Family::classical, true, 0,
                       [](int n, int ell, const EvalPoint& p) {
                           return sum_classical_series_fast(lhs_spec_thm_h(n, ell, as_parameter(p)));
                       },
                       [](int n, int ell, const EvalPoint& p) {
                           return rhs_thm_h(n, ell, as_parameter(p));
                       },
                       "classical limit of the second reversed extension (3F2(4/3))"});

        // The sixteen printed specializations: each pins l to 1 or 2 and
        // carries its own three-case closed form, cross-checkable against
        // the general right-hand sum.
        for (char thm : {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'}) {
            for (int ell : {1, 2}) {
                IdentityDescriptor d;
                d.id = std::string("ex-thm-") + thm + "-l" + std::to_string(ell);
                d.takesEll = false;
                d.fixedEll = ell;
                switch (thm) {
                case 'a':
                    d.family = Family::qside;
                    d.lhs = [sp, ell](int n, int, const EvalPoint& p) {
                        return sum_q_series_fast(lhs_spec_thm_a(n, ell, sp), as_sample_point(p));
                    };
                    break;
                case 'c':
                    d.family = Family::qside;
                    d.lhs = [sp, ell](int n, int, const EvalPoint& p) {
                        return sum_q_series_fast(lhs_spec_thm_c(n, ell, sp), as_sample_point(p));
                    };
                    break;
                case 'e':
                    d.family = Family::qside;
                    d.lhs = [sp, ell](int n, int, const EvalPoint& p) {
                        return sum_q_series_fast(lhs_spec_thm_e(n, ell, sp), as_sample_point(p));
                    };
                    break;
                case 'g':
                    d.family = Family::qside;
                    d.lhs = [sp, ell](int n, int, const EvalPoint& p) {
                        return sum_q_series_fast(lhs_spec_thm_g(n, ell, sp), as_sample_point(p));
                    };
                    break;
                case 'b':
                    d.family = Family::classical;
                    d.lhs = [ell](int n, int, const EvalPoint& p) {
                        return sum_classical_series_fast(lhs_spec_thm_b(n, ell, as_parameter(p)));
                    };
                    break;
                case 'd':
                    d.family = Family::classical;
                    d.lhs = [ell](int n, int, const EvalPoint& p) {
                        return sum_classical_series_fast(lhs_spec_thm_d(n, ell, as_parameter(p)));
                    };
                    break;
                case 'f':
                    d.family = Family::classical;
                    d.lhs = [ell](int n, int, const EvalPoint& p) {
                        return sum_classical_series_fast(lhs_spec_thm_f(n, ell, as_parameter(p)));
                    };
                    break;
                default: // 'h'
                    d.family = Family::classical;
                    d.lhs = [ell](int n, int, const EvalPoint& p) {
                        return sum_classical_series_fast(lhs_spec_thm_h(n, ell, as_parameter(p)));
                    };
                    break;
                }
                d.rhs = [thm, ell](int n, int, const EvalPoint& p) {
                    return example_rhs(thm, ell, n, p);
                };
                d.note = std::string("printed l=") + std::to_string(ell) +
                         " specialization (three-case closed form)";
                ids.push_back(std::move(d));
            }
        }
        return ids;
    }();
    return catalog;
}

inline const IdentityDescriptor& catalog_find(const std::string& id) {
    for (const auto& d : catalog_list())
        if (d.id == id) return d;
    throw Error("unknown identity id '" + id + "'");
}

inline Rat lhs_sum(const IdentityDescriptor& idn, int n, int ell, const EvalPoint& point) {
    return idn.lhs(n, ell, point);
}

inline Rat rhs_closed_form(const IdentityDescriptor& idn, int n, int ell, const EvalPoint& point) {
    return idn.rhs(n, ell, point);
}

} // namespace qhv
