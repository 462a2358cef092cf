#include <doctest.h>

#include "klq/poly.hpp"

using klq::Int;
using klq::Poly;

TEST_CASE("zero polynomial and normalization") {
    Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(zero.str() == "0");
    CHECK(Poly{0, 0, 0}.is_zero());
    CHECK(Poly{1, 2, 0, 0}.degree() == 1);
    CHECK(Poly(Int(0)).is_zero());
}

TEST_CASE("arithmetic is exact") {
    const Poly q = klq::poly_q();
    const Poly qm1 = klq::poly_q_minus_1();
    CHECK((qm1 * Poly{1, 1}) == Poly{-1, 0, 1}); // (q-1)(q+1) = q^2 - 1
    CHECK((q * q - q * q).is_zero());
    CHECK((Poly{1, 2} + Poly{3, -2}) == Poly(Int(4)));
    CHECK((Poly{1, 1} - Poly{1, 1}).is_zero());
    CHECK((Int(3) * Poly{1, 1}) == Poly{3, 3});

    // coefficients well beyond 64 bits stay exact
    Poly big(Int(1));
    for (int i = 0; i < 40; ++i) big *= Poly{7, 13};
    Int lead = big.coeff(40);
    Int expect = 1;
    for (int i = 0; i < 40; ++i) expect *= 13;
    CHECK(lead == expect);
}

TEST_CASE("monomials, monic check, coefficient access") {
    CHECK(Poly::monomial(3) == Poly{0, 0, 0, 1});
    CHECK(Poly::monomial(2, Int(-5)).coeff(2) == -5);
    CHECK(Poly{-1, 1}.is_monic_of_degree(1));
    CHECK(!Poly{1, 2}.is_monic_of_degree(1));
    CHECK(Poly{1}.coeff(7) == 0);
    CHECK(Poly{1}.coeff(-1) == 0);
}

TEST_CASE("reversal q^ell p(1/q)") {
    const Poly p{1, 1}; // 1 + q
    CHECK(p.reversed(3) == Poly{0, 0, 1, 1});
    CHECK(p.reversed(1) == Poly{1, 1});
    CHECK(Poly().reversed(2).is_zero());
    CHECK_THROWS_AS(p.reversed(0), std::invalid_argument);
}

TEST_CASE("string form") {
    CHECK(Poly{1, 1}.str() == "1 + q");
    CHECK(Poly{1, 1, -2}.str() == "1 + q - 2q^2");
    CHECK(Poly{1, -2, 1}.str() == "1 - 2q + q^2");
    CHECK(Poly{-1, 1}.str() == "-1 + q");
    CHECK(Poly{0, 0, 3}.str() == "3q^2");
    CHECK(Poly{5}.str() == "5");
}
