// Shifted factorials (x)_n and q-shifted factorials (x;q)_n over all index
// signs, plus the monomial-backed PochSpec / FractionSpec evaluators.
// Frozen values were computed by hand or with an independent bignum oracle.

#include <catch2/catch_amalgamated.hpp>

#include "qhv/errors.hpp"
#include "qhv/pochhammer.hpp"
#include "qhv/rational.hpp"

using namespace qhv;

TEST_CASE("shifted factorial: frozen values and edge cases", "[classical]") {
    REQUIRE(shifted_factorial(Rat(2), 3) == 24);     // 2*3*4
    REQUIRE(shifted_factorial(Rat(1), 5) == 120);    // 5!
    REQUIRE(shifted_factorial(Rat(1, 2), 2) == Rat(3, 4));
    REQUIRE(shifted_factorial(Rat(-3), 2) == 6);     // (-3)(-2)
    REQUIRE(shifted_factorial(Rat(7, 5), 0) == 1);
    REQUIRE(shifted_factorial(Rat(3), -2) == Rat(1, 2)); // 1/((1)(2))
    REQUIRE(shifted_factorial(Rat(0), -1) == Rat(-1));   // 1/(0-1)
}

TEST_CASE("shifted factorial: poles raise PoleInFactorial", "[classical]") {
    REQUIRE_THROWS_AS(shifted_factorial(Rat(1), -1), PoleInFactorial); // 1/(1-1)
    REQUIRE_THROWS_AS(shifted_factorial(Rat(3), -5), PoleInFactorial); // hits 3-3
}

TEST_CASE("shifted factorial: recurrence across the index range", "[classical]") {
    // (x)_{n+1} = (x)_n * (x+n) wherever both sides are finite.
    const Rat xs[] = {Rat(2, 3), Rat(-7, 2), Rat(5), Rat(-1, 9), Rat(13, 4)};
    for (const Rat& x : xs)
        for (int n = -6; n <= 6; ++n) {
            Rat lhsv, rhsv;
            try {
                lhsv = shifted_factorial(x, n + 1);
                rhsv = shifted_factorial(x, n) * (x + n);
            } catch (const PoleInFactorial&) {
                continue; // integer x can genuinely pole; skip those cells
            }
            REQUIRE(lhsv == rhsv);
        }
}

TEST_CASE("shifted factorial: negative-index duality", "[classical]") {
    // (x)_{-n} = 1 / (x-n)_n for n >= 0.
    const Rat xs[] = {Rat(2, 3), Rat(-7, 2), Rat(13, 4)};
    for (const Rat& x : xs)
        for (int n = 0; n <= 6; ++n)
            REQUIRE(shifted_factorial(x, -n) * shifted_factorial(x - n, n) == 1);
}

TEST_CASE("q-shifted factorial: frozen values and edge cases", "[qseries]") {
    REQUIRE(q_pochhammer(Rat(2), Rat(3), 2) == 5);   // (1-2)(1-6)
    REQUIRE(q_pochhammer(Rat(2), Rat(3), -1) == 3);  // 1/(1-2/3)
    REQUIRE(q_pochhammer(Rat(5, 7), Rat(9), 0) == 1);
    REQUIRE(q_pochhammer(Rat(0), Rat(1, 2), 4) == 1); // (0;q)_n = 1
}

TEST_CASE("q-shifted factorial: poles and the q=0 restriction", "[qseries]") {
    // (q;q)_{-1} = 1/(1 - q q^{-1}) = 1/0.
    REQUIRE_THROWS_AS(q_pochhammer(Rat(1, 4), Rat(1, 4), -1), PoleInFactorial);
    // Negative index needs q invertible.
    REQUIRE_THROWS_AS(q_pochhammer(Rat(1, 2), Rat(0), -1), PoleInFactorial);
}

TEST_CASE("q-shifted factorial: recurrence across the index range", "[qseries]") {
    // (x;q)_{n+1} = (x;q)_n (1 - x q^n) wherever both sides are finite.
    const Rat xs[] = {Rat(2, 3), Rat(-3), Rat(5, 2)};
    const Rat qs[] = {Rat(1, 4), Rat(-2, 5), Rat(3)};
    for (const Rat& x : xs)
        for (const Rat& q : qs)
            for (int n = -6; n <= 6; ++n) {
                Rat lhsv, rhsv;
                try {
                    lhsv = q_pochhammer(x, q, n + 1);
                    rhsv = q_pochhammer(x, q, n) * (1 - x * rat_pow(q, n));
                } catch (const PoleInFactorial&) {
                    continue;
                }
                REQUIRE(lhsv == rhsv);
            }
}

TEST_CASE("q-shifted factorial: negative-index duality", "[qseries]") {
    // (x;q)_{-n} = 1 / (x q^{-n};q)_n for n >= 0.
    const Rat xs[] = {Rat(2, 3), Rat(-3), Rat(5, 2)};
    const Rat qs[] = {Rat(1, 4), Rat(-2, 5)};
    for (const Rat& x : xs)
        for (const Rat& q : qs)
            for (int n = 0; n <= 6; ++n) {
                Rat dual;
                try {
                    dual = q_pochhammer(x * rat_pow(q, -n), q, n);
                } catch (const PoleInFactorial&) {
                    continue;
                }
                if (dual == 0) continue; // forward symbol poles there
                REQUIRE(q_pochhammer(x, q, -n) * dual == 1);
            }
}

TEST_CASE("poch_eval: monomial bases at a fixed point", "[qseries]") {
    const SamplePoint pt = make_sample_point(Rat(1, 2), Rat(1, 3));
    // (a;q^3)_1 = 1 - a = 8/9 at a = 1/9.
    REQUIRE(poch_eval(PochSpec{mono_c(2), 3}, 1, pt) == Rat(8, 9));
    // (-sqrt(a);q)_1 = 1 + c = 4/3 at c = 1/3.
    REQUIRE(poch_eval(PochSpec{Monomial{-1, 0, 1}, 1}, 1, pt) == Rat(4, 3));
    // (q^2;q)_2 = (1-q^2)(1-q^3) = (15/16)(63/64) = 945/1024.
    REQUIRE(poch_eval(PochSpec{mono_q_pow(2), 1}, 2, pt) == Rat(945, 1024));
}

TEST_CASE("fraction_eval: frozen value and pole reporting", "[qseries]") {
    const SamplePoint pt = make_sample_point(Rat(1, 2), Rat(1, 3));
    // [q ; qa]_1 in base q^3: (1-1/4)/(1-1/36) = 27/35.
    FractionSpec fs;
    fs.numerators = {{mono_q_pow(1), 3}};
    fs.denominators = {{mono_mul(mono_q_pow(1), mono_c(2)), 3}};
    fs.index = 1;
    REQUIRE(fraction_eval(fs, pt) == Rat(27, 35));

    // A denominator symbol with base 1 vanishes at its first factor.
    FractionSpec bad;
    bad.denominators = {{mono_one(), 1}};
    bad.index = 1;
    REQUIRE_THROWS_AS(fraction_eval(bad, pt), PoleInFraction);
    try {
        fraction_eval(bad, pt);
    } catch (const PoleInFraction& e) {
        REQUIRE(std::string(e.what()).find(poch_to_string(bad.denominators[0])) !=
                std::string::npos);
    }
}
