// The two independent evaluation routes (naive full-product oracle vs the
// incremental term-ratio workhorse) must agree exactly on arbitrary
// terminating series specs, both q-side and classical.

#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "qhv/errors.hpp"
#include "qhv/prng.hpp"
#include "qhv/sampling.hpp"
#include "qhv/series.hpp"

using namespace qhv;

namespace {

Monomial random_monomial(Prng& rng) {
    return Monomial{rng.next_bool() ? 1 : -1, rng.next_int(-4, 4), rng.next_int(-3, 3)};
}

QSeriesSpec random_q_spec(Prng& rng) {
    QSeriesSpec s;
    const int numCount = rng.next_int(0, 3);
    const int denCount = rng.next_int(0, 3);
    for (int i = 0; i < numCount; ++i) s.numerators.push_back({random_monomial(rng), rng.next_int(1, 3)});
    for (int i = 0; i < denCount; ++i) s.denominators.push_back({random_monomial(rng), rng.next_int(1, 3)});
    s.argument = random_monomial(rng);
    s.extraQPower = rng.next_int(-3, 4);
    s.upper = rng.next_int(0, 8);
    return s;
}

ClassicalSeriesSpec random_classical_spec(Prng& rng) {
    ClassicalSeriesSpec s;
    const int numCount = rng.next_int(0, 3);
    const int denCount = rng.next_int(0, 3);
    for (int i = 0; i < numCount; ++i) s.numeratorParams.push_back(sample_rational(rng, 9));
    for (int i = 0; i < denCount; ++i) s.denominatorParams.push_back(sample_rational(rng, 9));
    s.argument = sample_rational(rng, 9);
    s.upper = rng.next_int(0, 8);
    return s;
}

} // namespace

TEST_CASE("q-side: oracle and workhorse agree on 200 random specs", "[series]") {
    Prng rng(314159);
    int compared = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const QSeriesSpec spec = random_q_spec(rng);
        const SamplePoint pt = sample_point(rng, 9);
        Rat naive;
        bool poled = false;
        try {
            naive = sum_q_series(spec, pt);
        } catch (const PoleInSeries&) {
            poled = true;
        }
        if (poled) {
            // The incremental route walks the same denominators and must
            // reject the same spec/point pair.
            REQUIRE_THROWS_AS(sum_q_series_fast(spec, pt), PoleInSeries);
            continue;
        }
        REQUIRE(sum_q_series_fast(spec, pt) == naive);
        ++compared;
    }
    REQUIRE(compared > 100); // poles must not eat the sample
}

TEST_CASE("q-side: incremental terms have the right shape", "[series]") {
    const SamplePoint pt = make_sample_point(Rat(1, 2), Rat(1, 3));
    QSeriesSpec spec;
    spec.numerators = {{mono_q_pow(-5), 1}};
    spec.denominators = {{mono_q_pow(1), 1}};
    spec.argument = mono_q_pow(1);
    spec.upper = 5;
    const std::vector<Rat> terms = incremental_term_ratio(spec, pt);
    REQUIRE(terms.size() == 6);
    REQUIRE(terms[0] == 1);

    QSeriesSpec unit;
    unit.upper = 0;
    REQUIRE(incremental_term_ratio(unit, pt) == std::vector<Rat>{Rat(1)});
}

TEST_CASE("q-side: a numerator q^{-n} terminates the sum exactly at n", "[series]") {
    const SamplePoint pt = make_sample_point(Rat(2, 5), Rat(-3, 4));
    for (int n = 0; n <= 6; ++n) {
        QSeriesSpec spec;
        spec.numerators = {{mono_q_pow(-n), 1}};
        spec.denominators = {{mono_q_pow(1), 1}};
        spec.argument = mono_q_pow(1);
        spec.upper = n;
        const Rat atN = sum_q_series(spec, pt);
        spec.upper = n + 3; // terms beyond n carry the factor (1 - q^{-n} q^n) = 0
        REQUIRE(sum_q_series(spec, pt) == atN);
        REQUIRE(sum_q_series_fast(spec, pt) == atN);
    }
}

TEST_CASE("q-side: extraQPower is a per-term power of t", "[series]") {
    const SamplePoint pt = make_sample_point(Rat(1, 2), Rat(1, 3));
    QSeriesSpec plain;
    plain.upper = 4;
    plain.argument = mono_t(2); // q^k
    QSeriesSpec folded;
    folded.upper = 4;
    folded.extraQPower = 2; // t^{2k} = q^k
    REQUIRE(sum_q_series(plain, pt) == sum_q_series(folded, pt));
    REQUIRE(sum_q_series_fast(plain, pt) == sum_q_series_fast(folded, pt));
}

TEST_CASE("q-side: both routes reject the same mid-sum pole", "[series]") {
    const SamplePoint pt = make_sample_point(Rat(1, 2), Rat(1, 3));
    QSeriesSpec spec;
    // (q^{-2};q)_k hits the factor (1 - q^{-2} q^2) = 0 at k = 3.
    spec.denominators = {{mono_q_pow(-2), 1}};
    spec.upper = 3;
    REQUIRE_THROWS_AS(sum_q_series(spec, pt), PoleInSeries);
    REQUIRE_THROWS_AS(sum_q_series_fast(spec, pt), PoleInSeries);
    spec.upper = 2; // stop before the vanishing factor: fine
    REQUIRE(sum_q_series(spec, pt) == sum_q_series_fast(spec, pt));
}

TEST_CASE("classical: frozen terminating 3F2 values", "[series]") {
    // 3F2(3/4; -3, 1/5, 18/5 ; 3/10, 4/5) = 25/52.
    ClassicalSeriesSpec spec;
    spec.numeratorParams = {Rat(-3), Rat(1, 5), Rat(18, 5)};
    spec.denominatorParams = {Rat(3, 10), Rat(4, 5)};
    spec.argument = Rat(3, 4);
    spec.upper = 3;
    REQUIRE(sum_classical_series(spec) == Rat(25, 52));
    REQUIRE(sum_classical_series_fast(spec) == Rat(25, 52));

    // Depth 1 with the same parameter pattern vanishes.
    spec.numeratorParams = {Rat(-1), Rat(1, 5), Rat(8, 5)};
    spec.upper = 1;
    REQUIRE(sum_classical_series(spec) == 0);
    REQUIRE(sum_classical_series_fast(spec) == 0);
}

TEST_CASE("classical: oracle and workhorse agree on 200 random specs", "[series]") {
    Prng rng(271828);
    int compared = 0;
    for (int iter = 0; iter < 200; ++iter) {
        const ClassicalSeriesSpec spec = random_classical_spec(rng);
        Rat naive;
        bool poled = false;
        try {
            naive = sum_classical_series(spec);
        } catch (const PoleInSeries&) {
            poled = true;
        }
        if (poled) {
            REQUIRE_THROWS_AS(sum_classical_series_fast(spec), PoleInSeries);
            continue;
        }
        REQUIRE(sum_classical_series_fast(spec) == naive);
        ++compared;
    }
    REQUIRE(compared > 100);
}

TEST_CASE("classical: incremental terms shape and pole parity", "[series]") {
    ClassicalSeriesSpec spec;
    spec.numeratorParams = {Rat(-4)};
    spec.denominatorParams = {Rat(1, 2)};
    spec.argument = Rat(1);
    spec.upper = 4;
    const std::vector<Rat> terms = incremental_classical_terms(spec);
    REQUIRE(terms.size() == 5);
    REQUIRE(terms[0] == 1);

    // A denominator parameter at a nonpositive integer poles once k passes it.
    spec.denominatorParams = {Rat(-2)};
    REQUIRE_THROWS_AS(sum_classical_series(spec), PoleInSeries);
    REQUIRE_THROWS_AS(sum_classical_series_fast(spec), PoleInSeries);
}
