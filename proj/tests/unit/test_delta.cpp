#include "common.hpp"
#include "doctest.h"

using namespace testutil;

namespace {
PBWVector unit() { return PBWVector::basis(Monomial{}); }
}  // namespace

TEST_CASE("Delta for h/2 on the generators") {
    const Sl2 s;
    const auto d = DeltaOperator::make(s.v, s.elt("h", Rational(1, 2)));
    CHECK(d->kappa() == Rational(1));
    CHECK(d->denominator() == 1);

    const auto de = d->apply(s.gen(s.e));
    CHECK(de.size() == 1);
    CHECK(de.coeff(Rational(-1), 0) == s.gen(s.e));

    const auto dh = d->apply(s.gen(s.h));
    CHECK(dh.size() == 2);
    CHECK(dh.coeff(Rational(0), 0) == s.gen(s.h));
    CHECK(dh.coeff(Rational(-1), 0) == scaled(unit(), Rational(-2)));

    const auto df = d->apply(s.gen(s.f));
    CHECK(df.size() == 1);
    CHECK(df.coeff(Rational(1), 0) == s.gen(s.f));
}

TEST_CASE("Delta for e produces log terms") {
    const Sl2 s;
    const auto d = DeltaOperator::make(s.v, s.elt("e"));
    const auto df = d->apply(s.gen(s.f));
    CHECK(df.coeff(Rational(0), 0) == s.gen(s.f));
    CHECK(df.coeff(Rational(0), 1) == scaled(s.gen(s.h), Rational(-1)));
    CHECK(df.coeff(Rational(0), 2) == scaled(s.gen(s.e), Rational(-1)));
    CHECK(df.coeff(Rational(-1), 0) == scaled(unit(), Rational(-2)));
    CHECK(df.size() == 4);
    CHECK(df.max_log_power() == 2);
    // e is fixed
    const auto de = d->apply(s.gen(s.e));
    CHECK(de.size() == 1);
    CHECK(de.coeff(Rational(0), 0) == s.gen(s.e));
}

TEST_CASE("Delta of the vacuum and of zero") {
    const Sl2 s;
    const auto d = DeltaOperator::make(s.v, s.elt("h", Rational(1, 3)));
    const auto d1 = d->apply(s.one());
    CHECK(d1.size() == 1);
    CHECK(d1.coeff(Rational(0), 0) == s.one());
    const auto z = DeltaOperator::make(s.v, s.g->zero());
    CHECK(z->is_zero());
    for (const auto& v : basis_vectors(*s.v, 2)) {
        const auto dv = z->apply(v);
        CHECK(dv.size() == (v.is_zero() ? 0u : 1u));
        CHECK(dv.coeff(Rational(0), 0) == v);
    }
}

TEST_CASE("rejects non-rational spectra and non-weight-one input") {
    const Sl2 s;
    LieElt ef = s.elt("e");
    ef[static_cast<std::size_t>(s.f)] = Rational(2);
    CHECK_THROWS_AS(DeltaOperator::make(s.v, ef), TwistError);
    const PBWVector omega = s.v->conformal_vector();
    CHECK_THROWS_AS(DeltaOperator::make(s.v, omega), TwistError);
}

TEST_CASE("weight-one vectors and Lie elements correspond") {
    const Sl2 s;
    const LieElt a = s.g->element({{"e", Rational(2)}, {"h", Rational(-1, 3)}});
    CHECK(weight_one_element(*s.v, weight_one_vector(*s.v, a)) == a);
}
