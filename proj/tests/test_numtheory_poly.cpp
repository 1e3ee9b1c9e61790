#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "nutkit/errors.hpp"
#include "nutkit/numtheory.hpp"
#include "nutkit/poly.hpp"
#include "oracles.hpp"

using namespace nutkit;

TEST_CASE("v2") {
    CHECK(v2(12) == 2);
    CHECK(v2(-7) == 0);
    CHECK(v2(1024) == 10);
    CHECK(v2(1) == 0);
    CHECK(v2(-96) == 5);
    CHECK_THROWS_AS(v2(0), ZeroArgument);
}

TEST_CASE("totient and divisors") {
    CHECK(totient(1) == 1);
    CHECK(totient(12) == 4);
    CHECK(totient(97) == 96);
    CHECK(totient(60) == 16);
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(coprime_residues(10) == std::vector<std::int64_t>{1, 3, 7, 9});
}

namespace {

SparseIntPoly x_plus(int c) { return SparseIntPoly::from_terms({{1, 1}, {0, c}}); }

} // namespace

TEST_CASE("polynomial ring basics") {
    SparseIntPoly prod = x_plus(1) * x_plus(-1);
    CHECK(prod == SparseIntPoly::from_terms({{2, 1}, {0, -1}}));

    SparseIntPoly p = SparseIntPoly::from_terms({{5, 3}, {2, -4}, {0, 7}});
    CHECK(p + SparseIntPoly() == p);
    CHECK(p - p == SparseIntPoly());

    SparseIntPoly a7 = SparseIntPoly::from_terms({{7, 1}, {0, 1}});
    SparseIntPoly b7 = SparseIntPoly::from_terms({{7, 1}, {0, -1}});
    CHECK(a7 * b7 == SparseIntPoly::from_terms({{14, 1}, {0, -1}}));

    CHECK(SparseIntPoly().is_zero());
    CHECK_THROWS_AS(SparseIntPoly().degree(), std::logic_error);
    CHECK(p.degree() == 5);
    CHECK(p.coeff(2) == -4);
    CHECK(p.coeff(3) == 0);
}

TEST_CASE("polynomial text form") {
    // x^5 - x^6 + x - 1 normalizes to descending exponent order.
    SparseIntPoly p = SparseIntPoly::from_terms({{5, 1}, {6, -1}, {1, 1}, {0, -1}});
    CHECK(p.to_string() == "-x^6 + x^5 + x - 1");
    CHECK(SparseIntPoly().to_string() == "0");
    CHECK(SparseIntPoly::from_terms({{3, 2}, {1, -2}}).to_string() == "2*x^3 - 2*x");
    CHECK(SparseIntPoly::constant(-5).to_string() == "-5");
}

TEST_CASE("divrem examples") {
    SparseIntPoly x3m1 = SparseIntPoly::from_terms({{3, 1}, {0, -1}});
    auto [q1, r1] = poly_divrem(x3m1, x_plus(-1));
    CHECK(q1 == SparseIntPoly::from_terms({{2, 1}, {1, 1}, {0, 1}}));
    CHECK(r1.is_zero());

    SparseIntPoly x4 = SparseIntPoly::monomial(4, 1);
    SparseIntPoly x2p1 = SparseIntPoly::from_terms({{2, 1}, {0, 1}});
    auto [q2, r2] = poly_divrem(x4, x2p1);
    CHECK(q2 == SparseIntPoly::from_terms({{2, 1}, {0, -1}}));
    CHECK(r2 == SparseIntPoly::constant(1));

    CHECK_THROWS_AS(poly_divrem(x4, SparseIntPoly()), ZeroDivisor);
    CHECK_THROWS_AS(poly_divrem(x4, SparseIntPoly::from_terms({{1, 2}, {0, 1}})), NonMonicDivisor);

    // Leading coefficient -1 is accepted.
    auto [q3, r3] = poly_divrem(x4, SparseIntPoly::from_terms({{2, -1}, {0, 1}}));
    CHECK((q3 * SparseIntPoly::from_terms({{2, -1}, {0, 1}}) + r3) == x4);
}

TEST_CASE("ring axioms and divrem reconstruction on random polynomials") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        SparseIntPoly a = oracles::random_poly(rng, 6, 30);
        SparseIntPoly b = oracles::random_poly(rng, 6, 30);
        SparseIntPoly c = oracles::random_poly(rng, 6, 30);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
    for (int iter = 0; iter < 200; ++iter) {
        SparseIntPoly p = oracles::random_poly(rng, 8, 40);
        SparseIntPoly d = oracles::random_poly(rng, 4, 6);
        if (d.is_zero()) continue;
        d.add_term(d.degree() + 1, 1);  // force a monic divisor
        auto [q, r] = poly_divrem(p, d);
        CHECK(d * q + r == p);
        if (!r.is_zero()) CHECK(r.degree() < d.degree());
    }
}

TEST_CASE("reduce_exponents_mod") {
    SparseIntPoly p = SparseIntPoly::from_terms({{5, 1}, {2, 1}});
    CHECK(reduce_exponents_mod(p, 5) == SparseIntPoly::from_terms({{2, 1}, {0, 1}}));

    SparseIntPoly q = SparseIntPoly::from_terms({{3, 1}, {1, -1}});
    CHECK(reduce_exponents_mod(q, 1).is_zero());

    CHECK_THROWS_AS(reduce_exponents_mod(p, 0), InvalidParams);
}

TEST_CASE("evaluation") {
    SparseIntPoly p = SparseIntPoly::from_terms({{3, 2}, {1, -1}, {0, 5}});
    CHECK(p.eval(0) == 5);
    CHECK(p.eval(2) == 19);
    CHECK(p.eval(-3) == -46);
}
