#include <random>

#include "doctest.h"
#include "laurent.hpp"

using namespace cwb;

namespace {

LaurentPoly y(int n, int i) { return LaurentPoly::variable(n, i); }

LaurentPoly random_laurent(std::mt19937& rng, int n, int max_terms, bool nonzero) {
    std::uniform_int_distribution<int> nterms(nonzero ? 1 : 0, max_terms);
    std::uniform_int_distribution<int> expd(-2, 2);
    std::uniform_int_distribution<int> coefd(-4, 4);
    LaurentPoly p(n);
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        Monomial m(n);
        for (int v = 0; v < n; ++v) m.exps[v] = expd(rng);
        p.add_term(m, coefd(rng));
    }
    if (nonzero && p.is_zero()) p.add_term(Monomial(n), 1);
    return p;
}

}  // namespace

TEST_CASE("laurent arithmetic basics") {
    const int n = 3;
    CHECK(add(y(n, 0), -y(n, 0)).is_zero());
    LaurentPoly s = add(y(n, 0), y(n, 2));
    CHECK(poly_string(mul(s, s)) == "y1^2 + 2*y1*y3 + y3^2");

    Monomial inv2(n);
    inv2.exps[1] = -1;
    LaurentPoly y2inv = LaurentPoly::monomial(inv2, 1);
    CHECK(raw_string(mul(y2inv, s)) == "y2^-1*(y1 + y3)");
}

TEST_CASE("exact division examples") {
    const int n = 3;
    LaurentPoly p = sub(mul(y(n, 0), y(n, 0)), mul(y(n, 2), y(n, 2)));
    LaurentPoly q = add(y(n, 0), y(n, 2));
    CHECK(exact_div(p, q) == sub(y(n, 0), y(n, 2)));

    // Mutation chain from the cyclic A3 seed: ((y1+y3)/y2 + 1)/y1.
    LaurentPoly v = exact_div(add(y(n, 0), y(n, 2)), y(n, 1));
    CHECK(fraction_string(v) == "(y1 + y3) / y2");
    LaurentPoly w = exact_div(add(v, LaurentPoly::constant(n, 1)), y(n, 0));
    CHECK(fraction_string(w) == "(y1 + y2 + y3) / (y1*y2)");
}

TEST_CASE("exact division rejects non-divisors") {
    const int n = 3;
    CHECK_THROWS_AS((void)exact_div(add(y(n, 0), y(n, 2)), add(y(n, 1), y(n, 0))), NonExactDivision);
    CHECK_THROWS_AS((void)exact_div(LaurentPoly::constant(n, 1), LaurentPoly::zero(n)), NonExactDivision);
    // Integer coefficients only: y1 / 2y1 has no integral quotient.
    CHECK_THROWS_AS((void)exact_div(y(n, 0), mul(y(n, 0), Int(2))), NonExactDivision);
}

TEST_CASE("denominator vectors") {
    const int n = 3;
    LaurentPoly three = add(add(y(n, 0), y(n, 1)), y(n, 2));
    Monomial m(n);
    m.exps = {-1, 0, -1};
    LaurentPoly p = mul(three, LaurentPoly::monomial(m, 1));
    CHECK(denominator_vector(p) == DenomVector{1, 0, 1});
    CHECK(fraction_string(p) == "(y1 + y2 + y3) / (y1*y3)");

    CHECK(denominator_vector(y(n, 1)) == DenomVector{0, -1, 0});

    // ((y1+y3)^2 + y2) / (y1 y2 y3)
    LaurentPoly s = add(y(n, 0), y(n, 2));
    LaurentPoly num = add(mul(s, s), y(n, 1));
    Monomial all(n);
    all.exps = {-1, -1, -1};
    LaurentPoly xm = mul(num, LaurentPoly::monomial(all, 1));
    CHECK(denominator_vector(xm) == DenomVector{1, 1, 1});
    CHECK(fraction_string(xm) == "(y1^2 + 2*y1*y3 + y3^2 + y2) / (y1*y2*y3)");

    CHECK_THROWS_AS((void)denominator_vector(LaurentPoly::zero(n)), InvariantViolation);
}

TEST_CASE("positivity condition") {
    const int n = 3;
    LaurentPoly f = add(add(y(n, 0), y(n, 1)), y(n, 2));
    CHECK(positivity_check(f));
    CHECK(positivity_check(LaurentPoly::constant(n, 1)));
    CHECK_FALSE(positivity_check(sub(y(n, 0), y(n, 1))));  // vanishes at e_3
    Monomial neg(n);
    neg.exps[0] = -1;
    CHECK_THROWS_AS((void)positivity_check(LaurentPoly::monomial(neg, 1)), InvariantViolation);
}

TEST_CASE("ring laws and division on random inputs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 120; ++trial) {
        int n = 1 + trial % 3;
        LaurentPoly a = random_laurent(rng, n, 4, false);
        LaurentPoly b = random_laurent(rng, n, 4, false);
        LaurentPoly c = random_laurent(rng, n, 3, false);
        CHECK(add(a, b) == add(b, a));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));

        LaurentPoly d = random_laurent(rng, n, 3, true);
        LaurentPoly e = random_laurent(rng, n, 3, true);
        CHECK(exact_div(mul(d, e), e) == d);
    }
}

TEST_CASE("denominator vector shifts under monomial factors") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> expd(-3, 3);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + trial % 4;
        LaurentPoly p = random_laurent(rng, n, 4, true);
        Monomial m(n);
        for (int v = 0; v < n; ++v) m.exps[v] = expd(rng);
        DenomVector base = denominator_vector(p);
        DenomVector shifted = denominator_vector(mul(p, LaurentPoly::monomial(m, 1)));
        for (int v = 0; v < n; ++v) CHECK(shifted[v] == base[v] - m.exps[v]);

        // Reduced-form contract: some term of the numerator avoids each variable.
        LaurentPoly f = reduced_numerator(p);
        for (int v = 0; v < n; ++v) {
            bool has_zero = false;
            for (const auto& [mono, coef] : f.terms()) has_zero |= mono.exps[v] == 0;
            CHECK(has_zero);
        }
    }
}

TEST_CASE("canonical strings") {
    const int n = 3;
    CHECK(poly_string(LaurentPoly::zero(n)) == "0");
    CHECK(poly_string(LaurentPoly::constant(n, -7)) == "-7");
    CHECK(fraction_string(y(n, 0)) == "y1");
    LaurentPoly p = add(mul(y(n, 0), y(n, 0)), add(y(n, 1), mul(y(n, 0), y(n, 2))));
    CHECK(poly_string(p) == "y1^2 + y1*y3 + y2");
    Monomial m(n);
    m.exps = {0, -1, -1};
    CHECK(fraction_string(mul(p, LaurentPoly::monomial(m, 1))) == "(y1^2 + y1*y3 + y2) / (y2*y3)");
    CHECK(fraction_string(exact_div(LaurentPoly::constant(1, 2), y(1, 0))) == "2 / y1");
}
