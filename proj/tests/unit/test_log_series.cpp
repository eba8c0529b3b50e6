#include "doctest.h"
#include "twistmod/log_series.hpp"
#include "twistmod/pbw.hpp"

using namespace twistmod;

namespace {
CycPBWVector vec(int c) { return to_cyc(PBWVector(Monomial{}, Rational(c))); }
}  // namespace

TEST_CASE("derivative of x^e log^k x") {
    auto s = LogSeries<PBWVector>::term(Rational(1, 2), 1, PBWVector(Monomial{}, Rational(1)));
    const auto d = series_derivative(s);
    CHECK(d.size() == 2);
    CHECK(d.coeff(Rational(-1, 2), 1) == PBWVector(Monomial{}, Rational(1, 2)));
    CHECK(d.coeff(Rational(-1, 2), 0) == PBWVector(Monomial{}, Rational(1)));
}

TEST_CASE("branch shifts compose additively") {
    const auto field = cyclotomic_field(6);
    LogSeries<CycPBWVector> s;
    s.add_term(Rational(1, 3), 2, vec(1));
    s.add_term(Rational(-1, 2), 0, vec(3));
    s.add_term(Rational(1), 1, vec(-2));
    for (long p : {-2L, -1L, 1L, 3L}) {
        const auto there = branch_shift(s, p, field);
        const auto back = branch_shift(there, -p, field);
        CHECK(back.terms() == s.terms());
        const auto twice = branch_shift(branch_shift(s, p, field), 1, field);
        CHECK(twice.terms() == branch_shift(s, p + 1, field).terms());
    }
    // log x -> log x + T
    const auto one = branch_shift(LogSeries<CycPBWVector>::term(Rational(0), 1, vec(1)), 1, field);
    CHECK(one.coeff(Rational(0), 1) == vec(1));
    CycPBWVector t = vec(1);
    t *= CycScalar::t_power(1);
    CHECK(one.coeff(Rational(0), 0) == t);
}

TEST_CASE("series below the floor are marked truncated") {
    LogSeries<PBWVector> s(Rational(-1));
    s.add_term(Rational(-2), 0, PBWVector(Monomial{}, Rational(1)));
    CHECK(s.is_zero());
    CHECK(s.truncated());
}
