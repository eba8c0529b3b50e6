#include "doctest.h"
#include "twistmod/errors.hpp"
#include "twistmod/jordan.hpp"
#include "twistmod/automorphism.hpp"
#include "twistmod/lie_algebra.hpp"
#include "twistmod/matrix.hpp"

using namespace twistmod;

TEST_CASE("type A structure constants") {
    for (int rank = 1; rank <= 3; ++rank) {
        const auto g = LieAlgebra::build('A', rank);
        CHECK(g->dim() == (rank + 1) * (rank + 1) - 1);
        std::string witness;
        CHECK_MESSAGE(check_jacobi(*g, &witness), witness);
        CHECK_MESSAGE(check_form_invariance(*g, &witness), witness);
        const int th = g->highest_root_index();
        CHECK(g->form(th, g->f_index(th)) == Rational(1));
        CHECK(g->dual_coxeter() == Rational(rank + 1));
    }
}

TEST_CASE("sl2 brackets and normalized form") {
    const auto g = LieAlgebra::build('A', 1);
    const LieElt e = g->element({{"e", Rational(1)}}), f = g->element({{"f", Rational(1)}}),
                 h = g->element({{"h", Rational(1)}});
    CHECK(g->bracket(e, f) == h);
    CHECK(g->bracket(h, e) == g->element({{"e", Rational(2)}}));
    CHECK(g->form(h, h) == Rational(2));
    CHECK(g->form(e, f) == Rational(1));
}

TEST_CASE("unsupported algebra types are rejected") {
    CHECK_THROWS_AS(LieAlgebra::build('B', 2), TwistError);
}

TEST_CASE("Jordan-Chevalley decomposition") {
    const auto g = LieAlgebra::build('A', 2);
    const LieElt s = g->element({{"h1", Rational(1, 3)}, {"h2", Rational(2, 3)}});
    const LieElt n = g->element({{"e1", Rational(1)}});
    LieElt a = s;
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += n[i];
    const JordanParts p = jordan_chevalley(*g, a);
    CHECK(p.s == s);
    CHECK(p.n == n);
    // alpha_1(s) = 0 and alpha_2(s) = 1, so exp(2 pi i ad s) is trivial
    CHECK(eigen_denominator(*g, s) == 1);
    CHECK(eigen_denominator(*g, g->element({{"h1", Rational(1, 3)}})) == 3);
    // a nilpotent element has zero semisimple part
    const JordanParts q = jordan_chevalley(*g, n);
    CHECK(q.s == g->zero());
}

TEST_CASE("unipotent logarithm inverts the nilpotent exponential") {
    const auto g = LieAlgebra::build('A', 2);
    const LieElt n = g->element({{"e1", Rational(1)}, {"e2", Rational(-2, 3)}, {"e12", Rational(5)}});
    const QMatrix ad = g->ad(n);
    CHECK(unipotent_log(nilpotent_exp(ad)) == ad);
    const QMatrix u = nilpotent_exp(ad * Rational(1, 2));
    CHECK(nilpotent_exp(unipotent_log(u)) == u);
    // exp(ad n) is a Lie algebra automorphism
    CHECK(is_algebra_automorphism(*g, nilpotent_exp(ad)));
}
