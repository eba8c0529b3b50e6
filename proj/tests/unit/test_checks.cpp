#include "common.hpp"
#include "doctest.h"

using namespace testutil;

namespace {
CheckRange small() {
    CheckRange r;
    r.max_weight = 2;
    r.max_output_weight = 3;
    r.mode_range = 2;
    return r;
}
}  // namespace

TEST_CASE("delta identities pass with the corrected sign") {
    const Sl2 s;
    const auto base = TwistedModule::untwisted(s.v);
    for (const LieElt& a : {s.elt("h", Rational(1, 2)), s.elt("e")})
        for (const auto& rep : check_delta_identities(*base, a, small())) CHECK_MESSAGE(rep.passed(), rep.name);
}

TEST_CASE("pre-correction sign is detected with a witness") {
    const Sl2 s;
    const auto d = DeltaOperator::make(s.v, s.elt("h", Rational(1, 2)), DeltaConvention::PreCorrection);
    const CheckReport rep = check_delta_conjugation(*d, small());
    CHECK(rep.status == CheckStatus::Fail);
    REQUIRE(rep.witness.has_value());
    CHECK_FALSE(rep.witness->expected == rep.witness->actual);
}

TEST_CASE("axioms, equivariance and commutator for a third twist") {
    const Sl2 s;
    const auto m = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 3)));
    for (const auto& rep : check_axioms(*m, small())) CHECK_MESSAGE(rep.status != CheckStatus::Fail, rep.name);
    CHECK(check_equivariance(*m, small()).passed());
    CHECK(check_commutator(*m, s.elt("e"), s.elt("f"), small()).passed());
    CHECK(check_commutator(*m, s.elt("h"), s.elt("e"), small()).passed());
}

TEST_CASE("commutator rejects log twists and non-eigenvectors") {
    const Sl2 s;
    const auto m = make_twisted(TwistedModule::untwisted(s.v), s.elt("e"));
    CHECK_THROWS_AS((void)check_commutator(*m, s.elt("e"), s.elt("f"), small()), TwistError);
    const auto ms = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 2)));
    LieElt ef = s.elt("e");
    ef[static_cast<std::size_t>(s.f)] = Rational(1);
    CHECK_THROWS_AS((void)check_commutator(*ms, ef, s.elt("h"), small()), TwistError);
}

TEST_CASE("mode table oracle, involution and chain additivity") {
    const Sl2 s;
    const auto base = TwistedModule::untwisted(s.v);
    const auto m = make_twisted(make_twisted(base, s.elt("h", Rational(1, 2))), s.elt("e"));
    CHECK(check_mode_table_oracle(*m, small()).passed());
    CHECK(check_involution(base, s.elt("h", Rational(1, 2)), small()).passed());
    LieElt a = s.elt("h", Rational(1, 2));
    CHECK(check_chain_additivity(base, a, small()).passed());
}

TEST_CASE("grading restriction fails for the half twist") {
    const Sl2 s;
    const auto m = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 2)));
    const CheckReport rep = check_grading_restriction(*m, 4);
    CHECK(rep.status == CheckStatus::Fail);
    REQUIRE(rep.witness.has_value());
    const auto plain = check_grading_restriction(*TwistedModule::untwisted(s.v), 4);
    CHECK(plain.passed());
}

TEST_CASE("functor rejects non-intertwining maps") {
    const Sl2 s;
    const auto base = TwistedModule::untwisted(s.v);
    const ModuleMap id{"identity", [](const PBWVector& v) { return v; }};
    CHECK(check_functor(base, base, id, s.elt("h", Rational(1, 2)), small()).passed());
    const ModuleMap bad{"drop", [](const PBWVector& v) { return PBWVector(Monomial{}, v.coeff(Monomial{})); }};
    CHECK(find_intertwining_failure(*base, *base, bad, small()).has_value());
    CHECK_THROWS_AS((void)check_functor(base, base, bad, s.elt("e"), small()), TwistError);
}

TEST_CASE("bigrading of the half twist") {
    const Sl2 s;
    const auto m = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 2)));
    const Bigrading& b = m->bigrading();
    REQUIRE(b.available);
    std::size_t total = 0;
    for (const auto& p : b.pieces) total += p.basis.size();
    long expected = 0;
    for (long d : s.v->graded_dims()) expected += d;
    CHECK(total == static_cast<std::size_t>(expected));
    CHECK(check_bigrading_compatibility(*m, small()).passed());
}
