#pragma once

#include <initializer_list>
#include <string>

#include "qhv/errors.hpp"
#include "qhv/monomial.hpp"
#include "qhv/pochhammer.hpp"
#include "qhv/rational.hpp"

namespace qhv {

/// The printed special cases of the eight theorems at l = 1 and l = 2 are
/// three-case closed forms keyed on n mod 3 (with m = n div 3).  They are
/// transcribed here verbatim and evaluated directly, independently of the
/// general-l right-hand sides, so the two can cross-check each other.

namespace detail {

inline Rat guarded_div(const Rat& num, const Rat& den, const char* what) {
    if (den == 0) throw PoleInClosedForm(std::string("denominator ") + what + " vanishes");
    return num / den;
}

/// Bracket of step-3 symbols at index m: [nums ; dens]_m with every symbol
/// read in base q^3.
inline Rat cube_fraction(std::initializer_list<Monomial> nums, std::initializer_list<Monomial> dens,
                         int m, const SamplePoint& pt) {
    FractionSpec fs;
    for (const auto& x : nums) fs.numerators.push_back({x, 3});
    for (const auto& x : dens) fs.denominators.push_back({x, 3});
    fs.index = m;
    return fraction_eval(fs, pt);
}

/// Classical bracket [nums ; dens]_m of shifted factorials.
inline Rat classical_fraction(std::initializer_list<Rat> nums, std::initializer_list<Rat> dens,
                              int m) {
    Rat v(1);
    for (const auto& x : nums) v *= shifted_factorial(x, m);
    for (const auto& y : dens) {
        Rat d = shifted_factorial(y, m);
        if (d == 0)
            throw PoleInClosedForm("classical bracket (" + rat_to_string(y) + ")_" +
                                   std::to_string(m) + " vanishes");
        v /= d;
    }
    return v;
}

} // namespace detail

/// q-side example closed forms, in the rationalized variables q = t^2,
/// a = c^2 (b = c^2 for the reversed family).  thm is one of 'a','c','e','g'.
inline Rat example_rhs_qside(char thm, int ell, int n, const SamplePoint& pt) {
    using detail::cube_fraction;
    using detail::guarded_div;
    if (ell != 1 && ell != 2) throw Error("example_rhs: printed cases exist for ell = 1, 2 only");
    const int r = n % 3, m = n / 3;
    const Rat& t = pt.t;
    const Rat& c = pt.c;
    const Rat& q = pt.q;
    const Rat& a = pt.a; // doubles as b for 'e'/'g'
    const Monomial A2 = mono_c(2), A2i = mono_c(-2);
    auto qn = [&](int e) { return rat_pow(q, e); }; // q^e
    auto tn = [&](int e) { return rat_pow(t, e); }; // t^e

    switch (thm) {
    case 'a':
        if (ell == 1) {
            if (r == 0)
                return rat_pow(a, m) *
                       guarded_div(1 - a * qn(-1), 1 - a * qn(6 * m - 1), "1-aq^{6m-1}") *
                       cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                                     {mono_mul(mono_q_pow(1), A2), mono_mul(mono_q_pow(-1), A2)}, m, pt);
            if (r == 1)
                return rat_pow(a, m + 1) * qn(3 * m) *
                       guarded_div(1 - q, 1 - a * qn(6 * m + 1), "1-aq^{6m+1}") *
                       cube_fraction({mono_q_pow(2), mono_q_pow(4)},
                                     {mono_mul(mono_q_pow(1), A2), mono_mul(mono_q_pow(2), A2)}, m, pt);
            return Rat(0);
        }
        if (r == 0)
            return rat_pow(a, m) *
                   guarded_div((1 - a * qn(-2)) * (1 - a * qn(-1)),
                               (1 - a * qn(6 * m - 2)) * (1 - a * qn(6 * m - 1)), "(1-aq^{6m-2})(1-aq^{6m-1})") *
                   cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                                 {mono_mul(mono_q_pow(-1), A2), mono_mul(mono_q_pow(-2), A2)}, m, pt);
        if (r == 1)
            return rat_pow(a, m + 1) * qn(3 * m - 1) *
                   guarded_div((1 - q * q) * (1 - a * qn(-1)),
                               (1 - a * qn(6 * m - 1)) * (1 - a * qn(6 * m + 1)), "(1-aq^{6m-1})(1-aq^{6m+1})") *
                   cube_fraction({mono_q_pow(2), mono_q_pow(4)},
                                 {mono_mul(mono_q_pow(-1), A2), mono_mul(mono_q_pow(1), A2)}, m, pt);
        return rat_pow(a, m + 2) * qn(6 * m) *
               guarded_div((1 - q) * (1 - q * q),
                           (1 - a * qn(6 * m + 1)) * (1 - a * qn(6 * m + 2)), "(1-aq^{6m+1})(1-aq^{6m+2})") *
               cube_fraction({mono_q_pow(4), mono_q_pow(5)},
                             {mono_mul(mono_q_pow(1), A2), mono_mul(mono_q_pow(2), A2)}, m, pt);

    case 'c':
        if (ell == 1) {
            if (r == 0)
                return rat_pow(a, m) * guarded_div(t + c, t + tn(6 * m) * c, "sqrt(q)+q^{3m}sqrt(a)") *
                       cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                                     {mono_mul(mono_q_pow(1), A2), mono_mul(mono_q_pow(-1), A2)}, m, pt);
            if (r == 1)
                return rat_pow(c, 2 * m + 1) *
                       guarded_div(q - 1, (t - c) * (1 + tn(6 * m + 1) * c),
                                   "(sqrt(q)-sqrt(a))(1+q^{3m+1/2}sqrt(a))") *
                       cube_fraction({mono_q_pow(2), mono_q_pow(4)},
                                     {mono_mul(mono_q_pow(1), A2), mono_mul(mono_q_pow(2), A2)}, m, pt);
            return Rat(0);
        }
        if (r == 0)
            return rat_pow(c, 2 * m) *
                   guarded_div((tn(4) - c * c) * (t + c) * (1 - tn(6 * m - 3) * c),
                               (tn(4) - tn(12 * m) * c * c) * (1 - tn(-3) * c) * (t + tn(6 * m) * c),
                               "(q^2-q^{6m}a)(1-q^{-3/2}sqrt(a))(sqrt(q)+q^{3m}sqrt(a))") *
                   cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                                 {mono_mul(mono_q_pow(-1), A2), mono_mul(mono_q_pow(-2), A2)}, m, pt);
        if (r == 1)
            return rat_pow(c, 2 * m + 1) *
                   guarded_div((tn(4) - 1) * (t + c),
                               (tn(4) - t * c) * (1 + tn(6 * m - 1) * c) * (1 + tn(6 * m + 1) * c),
                               "(q^2-sqrt(qa))(1+q^{3m-1/2}sqrt(a))(1+q^{3m+1/2}sqrt(a))") *
                   cube_fraction({mono_q_pow(2), mono_q_pow(4)},
                                 {mono_mul(mono_q_pow(-1), A2), mono_mul(mono_q_pow(1), A2)}, m, pt);
        return rat_pow(c, 2 * m + 2) *
               guarded_div((1 - t * t) * (1 - tn(4)) * (1 - tn(6 * m + 3) * c),
                           (t - c) * (tn(3) - c) * (1 + tn(6 * m + 1) * c) * (1 - tn(12 * m + 4) * c * c),
                           "(sqrt(q)-sqrt(a))(q^{3/2}-sqrt(a))(1+q^{3m+1/2}sqrt(a))(1-q^{6m+2}a)") *
               cube_fraction({mono_q_pow(4), mono_q_pow(5)},
                             {mono_mul(mono_q_pow(1), A2), mono_mul(mono_q_pow(2), A2)}, m, pt);

    case 'e':
        if (r == 0)
            return cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                                 {mono_mul(mono_q_pow(1), A2i), mono_mul(mono_q_pow(2), A2)}, m, pt);
        if (r == 1)
            return guarded_div(1 - qn(ell), 1 - qn(ell) * a, "1-q^l b") *
                   cube_fraction({mono_q_pow(2), mono_q_pow(4)},
                                 {mono_mul(mono_q_pow(2), A2i), mono_mul(mono_q_pow(4), A2)}, m, pt);
        if (ell == 1) return Rat(0);
        return guarded_div((1 - q) * (1 - q * q), (1 - q * q * a) * (1 - qn(3) * a),
                           "(1-q^2 b)(1-q^3 b)") *
               cube_fraction({mono_q_pow(4), mono_q_pow(5)},
                             {mono_mul(mono_q_pow(3), A2i), mono_mul(mono_q_pow(6), A2)}, m, pt);

    case 'g':
        if (r == 0)
            return cube_fraction({mono_q_pow(1), mono_q_pow(2)},
                                 {mono_mul(mono_q_pow(1), A2i), mono_mul(mono_q_pow(2), A2)}, m, pt);
        if (r == 1)
            return c * guarded_div(qn(ell) - 1, 1 - qn(ell) * a, "1-q^l b") *
                   cube_fraction({mono_q_pow(2), mono_q_pow(4)},
                                 {mono_mul(mono_q_pow(2), A2i), mono_mul(mono_q_pow(4), A2)}, m, pt);
        if (ell == 1) return Rat(0);
        return q * a * guarded_div((1 - q) * (1 - q * q), (1 - q * q * a) * (1 - qn(3) * a),
                                   "(1-q^2 b)(1-q^3 b)") *
               cube_fraction({mono_q_pow(4), mono_q_pow(5)},
                             {mono_mul(mono_q_pow(3), A2i), mono_mul(mono_q_pow(6), A2)}, m, pt);

    default:
        throw Error(std::string("example_rhs_qside: no q-side example for thm '") + thm + "'");
    }
}

/// Classical example closed forms.  thm is one of 'b','d','f','h'; p is the
/// free rational parameter (a for 'b'/'d', b for 'f'/'h').
inline Rat example_rhs_classical(char thm, int ell, int n, const Rat& p) {
    using detail::classical_fraction;
    using detail::guarded_div;
    if (ell != 1 && ell != 2) throw Error("example_rhs: printed cases exist for ell = 1, 2 only");
    const int r = n % 3, m = n / 3;
    const Rat third(1, 3), two_thirds(2, 3), four_thirds(4, 3), five_thirds(5, 3);

    switch (thm) {
    case 'b':
        if (ell == 1) {
            if (r == 0)
                return guarded_div(3 * p - 1, 3 * p + 6 * m - 1, "3a+6m-1") *
                       classical_fraction({third, two_thirds}, {p - third, p + third}, m);
            if (r == 1)
                return guarded_div(Rat(1), 3 * p + 6 * m + 1, "3a+6m+1") *
                       classical_fraction({two_thirds, four_thirds}, {p + third, p + two_thirds}, m);
            return Rat(0);
        }
        if (r == 0)
            return guarded_div((3 * p - 2) * (3 * p - 1), (3 * p + 6 * m - 2) * (3 * p + 6 * m - 1),
                               "(3a+6m-2)(3a+6m-1)") *
                   classical_fraction({third, two_thirds}, {p - third, p - two_thirds}, m);
        if (r == 1)
            return guarded_div(2 * (3 * p - 1), (3 * p + 6 * m - 1) * (3 * p + 6 * m + 1),
                               "(3a+6m-1)(3a+6m+1)") *
                   classical_fraction({two_thirds, four_thirds}, {p - third, p + third}, m);
        return guarded_div(Rat(2), (3 * p + 6 * m + 1) * (3 * p + 6 * m + 2),
                           "(3a+6m+1)(3a+6m+2)") *
               classical_fraction({four_thirds, five_thirds}, {p + third, p + two_thirds}, m);

    case 'd':
        if (ell == 1) {
            if (r == 0)
                return classical_fraction({third, two_thirds}, {p - third, p + third}, m);
            if (r == 1)
                return guarded_div(Rat(1), 1 - 3 * p, "1-3a") *
                       classical_fraction({two_thirds, four_thirds}, {p + third, p + two_thirds}, m);
            return Rat(0);
        }
        if (r == 0)
            return guarded_div((3 * p - 2) * (p + 2 * m - 1), (p - 1) * (3 * p + 6 * m - 2),
                               "(a-1)(3a+6m-2)") *
                   classical_fraction({third, two_thirds}, {p - third, p - two_thirds}, m);
        if (r == 1)
            return guarded_div(Rat(2), 3 * (1 - p), "3(1-a)") *
                   classical_fraction({two_thirds, four_thirds}, {p - third, p + third}, m);
        return guarded_div(2 * (p + 2 * m + 1), (p - 1) * (3 * p - 1) * (3 * p + 6 * m + 2),
                           "(a-1)(3a-1)(3a+6m+2)") *
               classical_fraction({four_thirds, five_thirds}, {p + third, p + two_thirds}, m);

    case 'f':
    case 'h': {
        // 'f' and 'h' share their n=3m and n=2+3m cases; the middle case of
        // 'h' carries the opposite sign.
        const Rat sign = (thm == 'h') ? Rat(-1) : Rat(1);
        if (r == 0)
            return classical_fraction({third, two_thirds}, {third - p, two_thirds + p}, m);
        if (r == 1)
            return sign * guarded_div(Rat(ell), 3 * p + ell, "3b+l") *
                   classical_fraction({two_thirds, four_thirds}, {two_thirds - p, four_thirds + p}, m);
        if (ell == 1) return Rat(0);
        return guarded_div(Rat(2), 3 * (p + 1) * (3 * p + 2), "3(b+1)(3b+2)") *
               classical_fraction({four_thirds, five_thirds}, {1 - p, 2 + p}, m);
    }

    default:
        throw Error(std::string("example_rhs_classical: no classical example for thm '") + thm + "'");
    }
}

} // namespace qhv
