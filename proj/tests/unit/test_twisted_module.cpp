#include "common.hpp"
#include "doctest.h"

using namespace testutil;

TEST_CASE("g_s twist for s = h/2 shifts modes") {
    const Sl2 s;
    const auto m = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 2)));
    CHECK(m->denominator() == 1);
    CHECK_FALSE(m->has_log_terms());
    for (const auto& w : basis_vectors(*s.v, 2)) {
        for (int n = -2; n <= 2; ++n) {
            CHECK(m->generator_mode(s.elt("e"), Rational(n), 0, w) == s.v->apply_mode(s.e, n - 1, w));
            CHECK(m->generator_mode(s.elt("f"), Rational(n), 0, w) == s.v->apply_mode(s.f, n + 1, w));
            PBWVector h = s.v->apply_mode(s.h, n, w);
            if (n == 0) h -= scaled(w, Rational(2));
            CHECK(m->generator_mode(s.elt("h"), Rational(n), 0, w) == h);
        }
    }
}

TEST_CASE("g_s twist for s = h/3 has fractional modes") {
    const Sl2 s;
    const auto m = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 3)));
    CHECK(m->denominator() == 3);
    for (const auto& w : basis_vectors(*s.v, 2)) {
        for (int n = -2; n <= 2; ++n) {
            const Rational ne = Rational(n) + Rational(2, 3), nf = Rational(n) - Rational(2, 3);
            CHECK(m->generator_mode(s.elt("e"), ne, 0, w) == s.v->apply_mode(s.e, n, w));
            CHECK(m->generator_mode(s.elt("f"), nf, 0, w) == s.v->apply_mode(s.f, n, w));
            // integral modes of e vanish: e lives in 2/3 + Z
            CHECK(m->generator_mode(s.elt("e"), Rational(n), 0, w).is_zero());
        }
        PBWVector h0 = s.v->apply_mode(s.h, 0, w);
        h0 -= scaled(w, Rational(4, 3));
        CHECK(m->generator_mode(s.elt("h"), Rational(0), 0, w) == h0);
    }
}

TEST_CASE("log table for the g_s then e chain") {
    const Sl2 s;
    const auto ms = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 2)));
    const auto m = make_twisted(ms, s.elt("e"));
    CHECK(m->has_log_terms());
    CHECK(log_power_bound(*m) == 2);
    const auto& g = *s.g;
    const ModeExpr f0 = closed_form_mode(*m, s.elt("f"), Rational(0), 0);
    CHECK(format_mode_expr(g, f0) == "f(1) - 2");
    const ModeExpr f1 = closed_form_mode(*m, s.elt("f"), Rational(0), 1);
    CHECK(format_mode_expr(g, f1) == "-h(0) + 2");
    const ModeExpr f2 = closed_form_mode(*m, s.elt("f"), Rational(0), 2);
    CHECK(format_mode_expr(g, f2) == "-e(-1)");
    CHECK(closed_form_mode(*m, s.elt("f"), Rational(0), 3).is_zero());
    CHECK(closed_form_mode(*m, s.elt("e"), Rational(0), 1).is_zero());
}

TEST_CASE("chain validation errors") {
    const Sl2 s;
    // exp(2 pi i ad(h/3)) does not fix f
    const auto ms = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 3)));
    try {
        (void)make_twisted(ms, s.elt("f"));
        FAIL("expected NotFixed");
    } catch (const TwistError& e) {
        CHECK(e.code() == ErrorCode::NotFixed);
    }
    LieElt ef = s.elt("e");
    ef[static_cast<std::size_t>(s.f)] = Rational(2);
    try {
        (void)make_twisted(TwistedModule::untwisted(s.v), ef);
        FAIL("expected NeedsFieldExtension");
    } catch (const TwistError& e) {
        CHECK(e.code() == ErrorCode::NeedsFieldExtension);
    }
}

TEST_CASE("L(0) eigenvalues of the g_s twist") {
    const Sl2 s;
    const auto m = make_twisted(TwistedModule::untwisted(s.v), s.elt("h", Rational(1, 2)));
    // L^g(0) = L(0) - h(0)/2 + 1/2 on monomials: e(-1)1 has weight 1 - 1 + 1/2
    CHECK(m->virasoro(0, s.gen(s.e)) == scaled(s.gen(s.e), Rational(1, 2)));
    CHECK(m->virasoro(0, s.gen(s.f)) == scaled(s.gen(s.f), Rational(5, 2)));
    CHECK(m->virasoro(0, s.one()) == scaled(s.one(), Rational(1, 2)));
}

TEST_CASE("chevalley involution is an automorphism of order 2") {
    const auto g = LieAlgebra::build('A', 2);
    const QMatrix t = chevalley_involution(*g);
    CHECK(is_algebra_automorphism(*g, t));
    CHECK(matrix_order(t) == 2);
}
