#include "doctest.h"
#include "twistmod/cyclotomic.hpp"
#include "twistmod/errors.hpp"
#include "twistmod/rational.hpp"

using namespace twistmod;

TEST_CASE("rational parsing and printing") {
    CHECK(Rational::parse("6/4") == Rational(3, 2));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(-1, 3).str() == "-1/3");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
}

TEST_CASE("rational helpers") {
    CHECK(binomial(Rational(1, 2), 2) == Rational(-1, 8));
    CHECK(binomial(Rational(-1), 3) == Rational(-1));
    CHECK(factorial(5) == Rational(120));
    CHECK(Rational(-7, 3).floor() == -3);
    CHECK(Rational(-7, 3).frac() == Rational(2, 3));
    CHECK(lcm_long(4, 6) == 12);
}

TEST_CASE("cyclotomic roots of unity") {
    for (long d : {1L, 2L, 3L, 4L, 6L, 12L}) {
        const auto field = cyclotomic_field(d);
        const CycScalar z = CycScalar::zeta(field, 1);
        CycScalar p(field, Rational(1)), sum(field, Rational(0));
        for (long k = 0; k < d; ++k) {
            sum += p;
            p *= z;
        }
        CHECK(p == CycScalar(field, Rational(1)));
        CHECK(sum == CycScalar(field, Rational(d == 1 ? 1 : 0)));
    }
    const auto f4 = cyclotomic_field(4);
    CHECK(CycScalar::exp_2pi_i(f4, Rational(1, 4)) == CycScalar::zeta(f4, 1));
    CHECK(CycScalar::zeta(f4, 2) == CycScalar(f4, Rational(-1)));
    CHECK(CycScalar::zeta(f4, 2).is_rational());
    CHECK_FALSE(CycScalar::zeta(f4, 1).is_rational());
}
