#pragma once

#include <string>
#include <vector>

#include "qhv/errors.hpp"
#include "qhv/monomial.hpp"
#include "qhv/pochhammer.hpp"
#include "qhv/rational.hpp"

namespace qhv {

/// A terminating q-side sum
///   sum_{k=0}^{upper}  [prod num_j / prod den_j]_k * argument^k * t^{extraQPower*k}
/// where each num/den entry is a PochSpec evaluated at index k.  The implicit
/// (q;q)_k of phi-series notation is NOT implicit here: list it explicitly.
/// extraQPower is in t-units (q = t^2), so a per-term q^{(1+l)k} is carried
/// as extraQPower = 2(1+l) without disturbing the argument monomial.
struct QSeriesSpec {
    std::vector<PochSpec> numerators;
    std::vector<PochSpec> denominators;
    Monomial argument = mono_one();
    int extraQPower = 0;
    int upper = 0;
};

/// Naive evaluation: every term is recomputed from scratch as a full product
/// of Pochhammer symbols.  This is the oracle path; keep it dumb.
inline Rat sum_q_series(const QSeriesSpec& spec, const SamplePoint& pt) {
    Rat total(0);
    for (int k = 0; k <= spec.upper; ++k) {
        Rat term(1);
        for (const auto& p : spec.numerators) term *= poch_eval(p, k, pt);
        for (const auto& p : spec.denominators) {
            Rat d = poch_eval(p, k, pt);
            if (d == 0)
                throw PoleInSeries("sum_q_series: " + poch_to_string(p) + "_" +
                                   std::to_string(k) + " vanishes");
            term /= d;
        }
        term *= rat_pow(monomial_eval(spec.argument, pt), k);
        term *= rat_pow(pt.t, static_cast<long long>(spec.extraQPower) * k);
        total += term;
    }
    return total;
}

/// Incremental evaluation: term k arises from term k-1 by one new factor per
/// Pochhammer symbol, since (x;q^s)_k = (x;q^s)_{k-1} * (1 - x q^{s(k-1)}).
/// Returns all upper+1 terms; their sum equals sum_q_series exactly (property
/// tested).  This is the workhorse path.
inline std::vector<Rat> incremental_term_ratio(const QSeriesSpec& spec, const SamplePoint& pt) {
    struct Cursor {
        Rat value;      // base * q^{step*(k-1)} while producing term k
        Rat stepFactor; // q^{step}
        const PochSpec* sym;
    };
    std::vector<Cursor> nums, dens;
    for (const auto& p : spec.numerators)
        nums.push_back({monomial_eval(p.base, pt), rat_pow(pt.q, p.step), &p});
    for (const auto& p : spec.denominators)
        dens.push_back({monomial_eval(p.base, pt), rat_pow(pt.q, p.step), &p});
    Rat argStep = monomial_eval(spec.argument, pt) * rat_pow(pt.t, spec.extraQPower);

    std::vector<Rat> terms;
    terms.reserve(static_cast<size_t>(spec.upper) + 1);
    Rat term(1);
    terms.push_back(term);
    for (int k = 1; k <= spec.upper; ++k) {
        for (auto& cu : nums) {
            term *= 1 - cu.value;
            cu.value *= cu.stepFactor;
        }
        for (auto& cu : dens) {
            Rat f = 1 - cu.value;
            if (f == 0)
                throw PoleInSeries("incremental_term_ratio: " + poch_to_string(*cu.sym) +
                                   "_" + std::to_string(k) + " vanishes");
            term /= f;
            cu.value *= cu.stepFactor;
        }
        term *= argStep;
        terms.push_back(term);
    }
    return terms;
}

/// Workhorse sum built on the incremental terms.
inline Rat sum_q_series_fast(const QSeriesSpec& spec, const SamplePoint& pt) {
    Rat total(0);
    for (const Rat& t : incremental_term_ratio(spec, pt)) total += t;
    return total;
}

/// A terminating classical hypergeometric sum
///   sum_{k=0}^{upper}  prod (x_i)_k / (k! * prod (y_j)_k) * argument^k
/// with shifted-factorial parameters.  One numerator parameter equal to -n
/// makes the series terminate naturally, but upper is always explicit.
struct ClassicalSeriesSpec {
    std::vector<Rat> numeratorParams;
    std::vector<Rat> denominatorParams;
    Rat argument;
    int upper = 0;
};

/// Naive oracle evaluation, term by term from scratch.
inline Rat sum_classical_series(const ClassicalSeriesSpec& spec) {
    Rat total(0);
    for (int k = 0; k <= spec.upper; ++k) {
        Rat term(1);
        for (const auto& x : spec.numeratorParams) term *= shifted_factorial(x, k);
        term /= shifted_factorial(Rat(1), k); // k!
        for (const auto& y : spec.denominatorParams) {
            Rat d = shifted_factorial(y, k);
            if (d == 0)
                throw PoleInSeries("sum_classical_series: (" + rat_to_string(y) + ")_" +
                                   std::to_string(k) + " vanishes");
            term /= d;
        }
        total += term * rat_pow(spec.argument, k);
    }
    return total;
}

/// Incremental classical terms: term k = term k-1 * prod(x_i + k-1) * z
/// / ((k) * prod(y_j + k-1)).  Workhorse dual of sum_classical_series.
inline std::vector<Rat> incremental_classical_terms(const ClassicalSeriesSpec& spec) {
    std::vector<Rat> terms;
    terms.reserve(static_cast<size_t>(spec.upper) + 1);
    Rat term(1);
    terms.push_back(term);
    for (int k = 1; k <= spec.upper; ++k) {
        for (const auto& x : spec.numeratorParams) term *= x + (k - 1);
        term /= k;
        for (const auto& y : spec.denominatorParams) {
            Rat f = y + (k - 1);
            if (f == 0)
                throw PoleInSeries("incremental_classical_terms: (" + rat_to_string(y) +
                                   ")_" + std::to_string(k) + " vanishes");
            term /= f;
        }
        term *= spec.argument;
        terms.push_back(term);
    }
    return terms;
}

inline Rat sum_classical_series_fast(const ClassicalSeriesSpec& spec) {
    Rat total(0);
    for (const Rat& t : incremental_classical_terms(spec)) total += t;
    return total;
}

} // namespace qhv
