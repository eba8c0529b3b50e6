#include "common.hpp"
#include "doctest.h"

using namespace testutil;

TEST_CASE("generator fields give the affine modes") {
    const Sl2 s;
    const VertexOperators y(s.v, s.v);
    for (int b = 0; b < s.g->dim(); ++b)
        for (const auto& w : basis_vectors(*s.v, 2))
            for (int n = -3; n <= 3; ++n) CHECK(y.mode(s.gen(b), n, w) == s.v->apply_mode(b, n, w));
}

TEST_CASE("creation property") {
    const Sl2 s;
    const VertexOperators y(s.v, s.v);
    for (const auto& v : basis_vectors(*s.v, 2)) {
        const auto ser = y.series(v, s.one(), Rational(-4), Rational(1));
        CHECK(ser.coeff(Rational(0), 0) == v);
        CHECK(ser.coeff(Rational(1), 0) == s.v->truncate(s.v->sugawara(-1, v)));
        for (const auto& [key, c] : ser.terms()) CHECK(key.e >= Rational(0));
    }
}

TEST_CASE("vacuum field is the identity") {
    const Sl2 s;
    const VertexOperators y(s.v, s.v);
    for (const auto& w : basis_vectors(*s.v, 2)) {
        const auto ser = y.series(s.one(), w, Rational(-4), Rational(2));
        CHECK(ser.size() == 1);
        CHECK(ser.coeff(Rational(0), 0) == w);
    }
}

TEST_CASE("conformal field modes are Sugawara operators") {
    const Sl2 s;
    const VertexOperators y(s.v, s.v);
    const PBWVector omega = s.v->conformal_vector();
    for (const auto& w : basis_vectors(*s.v, 2))
        for (int n = -1; n <= 2; ++n) CHECK(y.mode(omega, n + 1, w) == s.v->truncate(s.v->sugawara(n, w)));
}

TEST_CASE("u_1 omega = u for weight-one vectors") {
    for (int rank : {1, 2}) {
        const auto g = LieAlgebra::build('A', rank);
        const auto v = InducedModule::vacuum(g, Rational(2), Rational(3));
        const VertexOperators y(v, v);
        const PBWVector omega = v->conformal_vector();
        for (const auto& u : generator_vectors(*v)) CHECK(y.mode(u, 1, omega) == u);
        // also for v = omega: omega_1 omega = 2 omega
        CHECK(y.mode(omega, 1, omega) == scaled(omega, Rational(2)));
    }
}
