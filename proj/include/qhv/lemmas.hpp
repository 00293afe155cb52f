#pragma once

#include <optional>
#include <string>
#include <utility>

#include "qhv/errors.hpp"
#include "qhv/monomial.hpp"
#include "qhv/pochhammer.hpp"
#include "qhv/series.hpp"

namespace qhv {

/// The very-well-poised terminating 6-phi-5 summation with parameters a, b, c
/// given as monomials in (t, c):
///   sum_{k=0}^{l} [a, q*sqrt(a), -q*sqrt(a), b, c, q^{-l} ;
///                  q, sqrt(a), -sqrt(a), qa/b, qa/c, q^{1+l}a]_k * (q^{1+l}a/bc)^k
///     = [qa, qa/bc ; qa/b, qa/c]_l
/// aBase must have a monomial square root (even exponents, positive sign);
/// the c parameter may instead be the literal value 0 (pass std::nullopt),
/// which is the degenerate limit the first q-theorem's proof relies on.

/// Sum side for nonzero c, as a plain series spec.
inline QSeriesSpec phi65_lhs_spec(const Monomial& aBase, const Monomial& bBase,
                                  const Monomial& cBase, int ell) {
    const Monomial sa = mono_sqrt(aBase);
    const Monomial qa_b = mono_mul(mono_q_pow(1), mono_mul(aBase, mono_pow(bBase, -1)));
    const Monomial qa_c = mono_mul(mono_q_pow(1), mono_mul(aBase, mono_pow(cBase, -1)));
    QSeriesSpec spec;
    spec.numerators = {{aBase, 1},
                       {mono_mul(mono_q_pow(1), sa), 1},
                       {mono_neg(mono_mul(mono_q_pow(1), sa)), 1},
                       {bBase, 1},
                       {cBase, 1},
                       {mono_q_pow(-ell), 1}};
    spec.denominators = {{mono_q_pow(1), 1},
                         {sa, 1},
                         {mono_neg(sa), 1},
                         {qa_b, 1},
                         {qa_c, 1},
                         {mono_mul(mono_q_pow(1 + ell), aBase), 1}};
    spec.argument = mono_mul(qa_b, mono_pow(cBase, -1)); // q^{1+l} a / (b c)
    spec.extraQPower = 2 * ell;                           // fold the q^{l} in (t-units)
    spec.upper = ell;
    return spec;
}

/// Both sides at once; the pair is the verification subject.  With cBase
/// empty the c -> 0 limit forms are used: the k-th term gains
/// (-1)^k q^{lk - k(k-1)/2} b^{-k} in place of the two c-symbols, and the
/// product side collapses to (qa;q)_l b^{-l} / (qa/b;q)_l.
inline std::pair<Rat, Rat> phi65_pair(const Monomial& aBase, const Monomial& bBase,
                                      const std::optional<Monomial>& cBase, int ell,
                                      const SamplePoint& pt) {
    if (ell < 0) throw Error("phi65_pair: ell must be nonnegative");
    if (cBase) {
        QSeriesSpec spec = phi65_lhs_spec(aBase, bBase, *cBase, ell);
        Rat lhs = sum_q_series_fast(spec, pt);
        FractionSpec closed;
        closed.numerators = {{mono_mul(mono_q_pow(1), aBase), 1},
                             {mono_mul(mono_q_pow(1), mono_mul(aBase, mono_mul(mono_pow(bBase, -1),
                                                                               mono_pow(*cBase, -1)))),
                              1}};
        closed.denominators = {{mono_mul(mono_q_pow(1), mono_mul(aBase, mono_pow(bBase, -1))), 1},
                               {mono_mul(mono_q_pow(1), mono_mul(aBase, mono_pow(*cBase, -1))), 1}};
        closed.index = ell;
        return {lhs, fraction_eval(closed, pt)};
    }

    // Degenerate c -> 0 branch.  The quadratic q-power makes this fall
    // outside QSeriesSpec's linear-in-k shape, so it gets its own loop.
    const Monomial sa = mono_sqrt(aBase);
    const Rat bVal = monomial_eval(bBase, pt);
    const PochSpec nums[5] = {{aBase, 1},
                              {mono_mul(mono_q_pow(1), sa), 1},
                              {mono_neg(mono_mul(mono_q_pow(1), sa)), 1},
                              {bBase, 1},
                              {mono_q_pow(-ell), 1}};
    const PochSpec dens[5] = {{mono_q_pow(1), 1},
                              {sa, 1},
                              {mono_neg(sa), 1},
                              {mono_mul(mono_q_pow(1), mono_mul(aBase, mono_pow(bBase, -1))), 1},
                              {mono_mul(mono_q_pow(1 + ell), aBase), 1}};
    Rat lhs(0);
    for (int k = 0; k <= ell; ++k) {
        Rat term(1);
        for (const auto& p : nums) term *= poch_eval(p, k, pt);
        for (const auto& p : dens) {
            Rat d = poch_eval(p, k, pt);
            if (d == 0)
                throw PoleInSeries("phi65_pair: " + poch_to_string(p) + "_" +
                                   std::to_string(k) + " vanishes");
            term /= d;
        }
        term *= (k % 2 == 0 ? 1 : -1);
        term *= rat_pow(pt.q, static_cast<long long>(ell) * k - static_cast<long long>(k) * (k - 1) / 2);
        term *= rat_pow(bVal, -k);
        lhs += term;
    }
    FractionSpec closed;
    closed.numerators = {{mono_mul(mono_q_pow(1), aBase), 1}};
    closed.denominators = {{mono_mul(mono_q_pow(1), mono_mul(aBase, mono_pow(bBase, -1))), 1}};
    closed.index = ell;
    return {lhs, fraction_eval(closed, pt) * rat_pow(bVal, -ell)};
}

/// First proof-internal normalization: the relation obtained by specializing
/// the 6-phi-5 parameters to a -> q^{-2n}/a, b -> q^{k-n}, c -> 0 sums to 1:
///   [q^{n-l+k}a ; q^{2n-l}a]_l * sum_{i=0}^{l} a^i q^{(l+2n-i)i}
///     * (a - q^{2i-2n})/(a - q^{-2n})
///     * [q^{-l}, q^{k-n}, q^{-2n}/a ; q, q^{1+l-2n}/a, q^{n+k-i}a]_i  =  1
/// with a = c^2 at the sample point.
inline Rat proof_unit_sum_a(int n, int k, int ell, const SamplePoint& pt) {
    const Monomial A2 = mono_c(2), A2i = mono_c(-2);
    FractionSpec pre;
    pre.numerators = {{mono_mul(mono_q_pow(n - ell + k), A2), 1}};
    pre.denominators = {{mono_mul(mono_q_pow(2 * n - ell), A2), 1}};
    pre.index = ell;
    const Rat prefactor = fraction_eval(pre, pt);

    const Rat normDen = pt.a - rat_pow(pt.q, -2 * n);
    if (normDen == 0) throw PoleInClosedForm("proof_unit_sum_a: a - q^{-2n} vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        Rat term = rat_pow(pt.a, i) * rat_pow(pt.q, static_cast<long long>(ell + 2 * n - i) * i);
        term *= (pt.a - rat_pow(pt.q, 2 * i - 2 * n)) / normDen;
        FractionSpec fr;
        fr.numerators = {{mono_q_pow(-ell), 1}, {mono_q_pow(k - n), 1},
                         {mono_mul(mono_q_pow(-2 * n), A2i), 1}};
        fr.denominators = {{mono_q_pow(1), 1}, {mono_mul(mono_q_pow(1 + ell - 2 * n), A2i), 1},
                           {mono_mul(mono_q_pow(n + k - i), A2), 1}};
        fr.index = i;
        total += term * fraction_eval(fr, pt);
    }
    return prefactor * total;
}

/// Second proof-internal normalization, from the specialization
/// c -> q^{1/2-n}/sqrt(a) (the half-integer powers rationalize in (t, c)):
///   [q^{n-l}a, q^{1/2+n-l}sqrt(a) ; q^{2n-l}a, q^{1/2+k-l}sqrt(a)]_l
///   * sum_{i=0}^{l} q^{(5/2+l)i} a^{-i/2} (1 - q^{2n-2i}a)/(1 - q^{2n}a)
///     * [q^{-l}, q^{k-n}, q^{-2n}/a ; q, q^{1+l-2n}/a, q^{1-n}/a]_i
///     * [q^{n-l+k}a ; q^{n-l}a]_{l-i}  =  1.
inline Rat proof_unit_sum_c(int n, int k, int ell, const SamplePoint& pt) {
    const Monomial A2 = mono_c(2), A2i = mono_c(-2);
    FractionSpec pre;
    pre.numerators = {{mono_mul(mono_q_pow(n - ell), A2), 1},
                      {Monomial{1, 1 + 2 * n - 2 * ell, 1}, 1}};
    pre.denominators = {{mono_mul(mono_q_pow(2 * n - ell), A2), 1},
                        {Monomial{1, 1 + 2 * k - 2 * ell, 1}, 1}};
    pre.index = ell;
    const Rat prefactor = fraction_eval(pre, pt);

    const Rat normDen = 1 - rat_pow(pt.q, 2 * n) * pt.a;
    if (normDen == 0) throw PoleInClosedForm("proof_unit_sum_c: 1 - q^{2n}a vanishes");
    Rat total(0);
    for (int i = 0; i <= ell; ++i) {
        Rat term = rat_pow(pt.t, static_cast<long long>(5 + 2 * ell) * i) * rat_pow(pt.c, -i);
        term *= (1 - rat_pow(pt.q, 2 * n - 2 * i) * pt.a) / normDen;
        FractionSpec fr;
        fr.numerators = {{mono_q_pow(-ell), 1}, {mono_q_pow(k - n), 1},
                         {mono_mul(mono_q_pow(-2 * n), A2i), 1}};
        fr.denominators = {{mono_q_pow(1), 1}, {mono_mul(mono_q_pow(1 + ell - 2 * n), A2i), 1},
                           {mono_mul(mono_q_pow(1 - n), A2i), 1}};
        fr.index = i;
        term *= fraction_eval(fr, pt);
        FractionSpec tail;
        tail.numerators = {{mono_mul(mono_q_pow(n - ell + k), A2), 1}};
        tail.denominators = {{mono_mul(mono_q_pow(n - ell), A2), 1}};
        tail.index = ell - i;
        total += term * fraction_eval(tail, pt);
    }
    return prefactor * total;
}

} // namespace qhv
