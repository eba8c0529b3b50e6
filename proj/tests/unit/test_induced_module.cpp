#include "common.hpp"
#include "doctest.h"

using namespace testutil;

namespace {
/// Coefficients of prod_{n >= 1} (1 - q^n)^{-d} up to q^N.
std::vector<long> partition_oracle(int d, int N) {
    std::vector<long> c(static_cast<std::size_t>(N + 1), 0);
    c[0] = 1;
    for (int n = 1; n <= N; ++n)
        for (int rep = 0; rep < d; ++rep)
            for (int k = n; k <= N; ++k) c[static_cast<std::size_t>(k)] += c[static_cast<std::size_t>(k - n)];
    return c;
}
}  // namespace

TEST_CASE("PBW graded dimensions") {
    const Sl2 s;
    CHECK(s.v->graded_dims() == std::vector<long>{1, 3, 9, 22, 51});
    CHECK(s.v->graded_dims() == partition_oracle(3, 4));
    const auto g3 = LieAlgebra::build('A', 2);
    const auto v3 = InducedModule::vacuum(g3, Rational(1), Rational(3));
    CHECK(v3->graded_dims() == partition_oracle(8, 3));
}

TEST_CASE("affine commutator on the vacuum module") {
    const Sl2 s;
    const auto& g = *s.g;
    for (const auto& w : basis_vectors(*s.v, 2)) {
        for (int a = 0; a < g.dim(); ++a) {
            for (int b = 0; b < g.dim(); ++b) {
                for (int m = -2; m <= 2; ++m) {
                    for (int n = -2; n <= 2; ++n) {
                        PBWVector lhs = s.v->apply_mode(a, m, s.v->apply_mode(b, n, w));
                        lhs -= s.v->apply_mode(b, n, s.v->apply_mode(a, m, w));
                        PBWVector rhs = s.v->apply_mode(g.bracket(a, b), m + n, w);
                        if (m + n == 0) rhs += scaled(w, Rational(m) * g.form(a, b) * s.v->level());
                        REQUIRE(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("Sugawara conformal vector") {
    const Sl2 s;
    CHECK(s.v->central_charge() == Rational(3, 2));
    // L(0) acts by depth on the vacuum module
    for (const auto& w : basis_vectors(*s.v, 3)) {
        int depth = 0;
        REQUIRE(is_homogeneous(w, &depth));
        CHECK(s.v->sugawara(0, w) == scaled(w, Rational(depth)));
    }
    CHECK(s.v->sugawara(-1, s.one()).is_zero());
    // L(2) omega = c/2
    CHECK(s.v->sugawara(2, s.v->conformal_vector()) == scaled(s.one(), Rational(3, 4)));
}

TEST_CASE("critical level is rejected") {
    const Sl2 s;
    CHECK_THROWS_AS(InducedModule::vacuum(s.g, Rational(-2), Rational(2)), TwistError);
}

TEST_CASE("top space of a fundamental module") {
    const Sl2 s;
    const auto top = make_top_space(*s.g, {1});
    CHECK(top.dim == 2);
    const auto w = InducedModule::build(s.g, Rational(2), top, Rational(3));
    // Casimir (lambda, lambda + 2 rho) / 2(l + h) = (1/2 * 3) / 8
    CHECK(w->top_weight() == Rational(3, 16));
    CHECK(w->graded_dims() == std::vector<long>{2, 6, 18});
}
