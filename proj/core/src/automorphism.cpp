#include "twistmod/automorphism.hpp"

#include <algorithm>
#include <numeric>

#include "twistmod/errors.hpp"
#include "twistmod/jordan.hpp"

namespace twistmod {

namespace {

bool all_zero(const LieElt& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_zero(); });
}

// Finds a simple root i and a positive root index r' with e_r = c [e_i, e_r'].
bool split_root(const LieAlgebra& g, int r, int& simple, int& rest, Rational& c) {
    for (int i = 0; i < g.rank(); ++i) {
        for (int q = 0; q < g.num_positive_roots(); ++q) {
            const LieElt& b = g.bracket(g.e_index(i), g.e_index(q));
            const Rational& coef = b[static_cast<std::size_t>(g.e_index(r))];
            if (!coef.is_zero()) {
                simple = i;
                rest = q;
                c = Rational(1) / coef;
                return true;
            }
        }
    }
    return false;
}

int height(const LieAlgebra& g, int idx) {
    const auto& r = g.root(idx);
    return std::accumulate(r.begin(), r.end(), 0);
}

}  // namespace

QMatrix diagram_automorphism(const LieAlgebra& g, const std::vector<int>& perm) {
    const int rank = g.rank();
    if (static_cast<int>(perm.size()) != rank)
        throw TwistError(ErrorCode::InvalidSymmetry, "permutation length differs from rank");
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < rank; ++i)
        if (sorted[static_cast<std::size_t>(i)] != i)
            throw TwistError(ErrorCode::InvalidSymmetry, "not a permutation of the simple roots");
    const QMatrix& a = g.cartan_matrix();
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            if (a(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) != a(i, j))
                throw TwistError(ErrorCode::InvalidSymmetry, "permutation does not preserve the Cartan matrix");

    const int d = g.dim();
    std::vector<LieElt> image(static_cast<std::size_t>(d));
    for (int i = 0; i < rank; ++i) {
        const int p = perm[static_cast<std::size_t>(i)];
        image[static_cast<std::size_t>(g.e_index(i))] = g.basis_vector(g.e_index(p));
        image[static_cast<std::size_t>(g.f_index(i))] = g.basis_vector(g.f_index(p));
        image[static_cast<std::size_t>(g.h_index(i))] = g.basis_vector(g.h_index(p));
    }
    std::vector<int> order(static_cast<std::size_t>(g.num_positive_roots()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return height(g, g.e_index(x)) < height(g, g.e_index(y)); });
    for (int r : order) {
        if (height(g, g.e_index(r)) == 1) continue;
        int i = 0, q = 0;
        Rational c;
        if (!split_root(g, r, i, q, c))
            throw TwistError(ErrorCode::InvalidSymmetry, "cannot express root vector through brackets");
        LieElt ep = g.bracket(image[static_cast<std::size_t>(g.e_index(i))], image[static_cast<std::size_t>(g.e_index(q))]);
        for (auto& x : ep) x *= c;
        image[static_cast<std::size_t>(g.e_index(r))] = ep;
        // f_r = c' [f_i, f_q] with c' read off the same way
        const LieElt& fb = g.bracket(g.f_index(i), g.f_index(q));
        const Rational cf = Rational(1) / fb[static_cast<std::size_t>(g.f_index(r))];
        LieElt fp = g.bracket(image[static_cast<std::size_t>(g.f_index(i))], image[static_cast<std::size_t>(g.f_index(q))]);
        for (auto& x : fp) x *= cf;
        image[static_cast<std::size_t>(g.f_index(r))] = fp;
    }
    QMatrix m = QMatrix::from_columns(image, d);
    if (!is_algebra_automorphism(g, m))
        throw TwistError(ErrorCode::InvalidSymmetry, "extended map is not an automorphism");
    return m;
}

bool is_algebra_automorphism(const LieAlgebra& g, const QMatrix& m) {
    const int d = g.dim();
    if (m.rows() != d || m.cols() != d || m.rank() != d) return false;
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const LieElt xi = m.column(i), xj = m.column(j);
            if (!(g.bracket(xi, xj) == m * g.bracket(i, j))) return false;
            if (g.form(xi, xj) != g.form(i, j)) return false;
        }
    return true;
}

int matrix_order(const QMatrix& m, int max_order) {
    const QMatrix id = QMatrix::identity(m.rows());
    QMatrix p = m;
    for (int r = 1; r <= max_order; ++r) {
        if (p == id) return r;
        p = p * m;
    }
    return 0;
}

bool AutomorphismData::is_identity() const {
    return diagram.empty() && (h.empty() || all_zero(h)) && (n.empty() || all_zero(n)) && !tau;
}

CycVec to_cyc(const QVector& v) {
    CycVec out;
    out.reserve(v.size());
    for (const auto& x : v) out.emplace_back(x);
    return out;
}

long automorphism_denominator(const LieAlgebra& g, const std::vector<AutomorphismData>& factors) {
    long D = 1;
    for (const auto& f : factors)
        if (!f.h.empty()) D = lcm_long(D, eigen_denominator(g, f.h));
    return D;
}

namespace {

// Applies a Q(zeta)[T]-linear map given on rational vectors.
template <typename F>
CycVec apply_extended(const CycVec& x, const CyclotomicFieldPtr& field, int dim, F&& rational_map) {
    std::map<std::pair<int, int>, QVector> parts;
    for (int i = 0; i < dim; ++i)
        for (const auto& [key, c] : x[static_cast<std::size_t>(i)].components()) {
            auto& v = parts[key];
            if (v.empty()) v.assign(static_cast<std::size_t>(dim), Rational(0));
            v[static_cast<std::size_t>(i)] = c;
        }
    CycVec out(static_cast<std::size_t>(dim));
    for (const auto& [key, v] : parts) {
        const CycScalar mono = CycScalar::monomial(field, key.first, key.second);
        const CycVec img = rational_map(v);
        for (int i = 0; i < dim; ++i) out[static_cast<std::size_t>(i)] += mono * img[static_cast<std::size_t>(i)];
    }
    return out;
}

CycVec apply_factor(const LieAlgebra& g, const AutomorphismData& f, const CycVec& x,
                    const CyclotomicFieldPtr& field) {
    const int d = g.dim();
    CycVec cur = x;
    if (f.tau) {
        const QMatrix inv = f.tau->inverse();
        cur = apply_extended(cur, field, d, [&](const QVector& v) { return to_cyc(inv * v); });
    }
    if (!f.n.empty() && !all_zero(f.n)) {
        const QMatrix adn = g.ad(f.n);
        cur = apply_extended(cur, field, d, [&](const QVector& v) {
            CycVec out = to_cyc(v);
            QVector term = v;
            for (int j = 1; j <= d; ++j) {
                term = adn * term;
                if (all_zero(term)) break;
                const CycScalar coef = CycScalar::t_power(j) * CycScalar(Rational(1) / factorial(j));
                for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += coef * CycScalar(term[static_cast<std::size_t>(i)]);
            }
            return out;
        });
    }
    if (!f.h.empty() && !all_zero(f.h)) {
        cur = apply_extended(cur, field, d, [&](const QVector& v) {
            CycVec out(static_cast<std::size_t>(d));
            for (const auto& [lambda, comp] : eigen_components(g, f.h, v)) {
                const CycScalar phase = CycScalar::exp_2pi_i(field, lambda);
                for (int i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] += phase * CycScalar(comp[static_cast<std::size_t>(i)]);
            }
            return out;
        });
    }
    if (!f.diagram.empty()) {
        const QMatrix mu = diagram_automorphism(g, f.diagram);
        cur = apply_extended(cur, field, d, [&](const QVector& v) { return to_cyc(mu * v); });
    }
    if (f.tau) cur = apply_extended(cur, field, d, [&](const QVector& v) { return to_cyc(*f.tau * v); });
    return cur;
}

}  // namespace

CycVec apply_automorphism(const LieAlgebra& g, const std::vector<AutomorphismData>& factors,
                          const CycVec& x, const CyclotomicFieldPtr& field) {
    CycVec cur = x;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) cur = apply_factor(g, *it, cur, field);
    return cur;
}

void validate_automorphism(const LieAlgebra& g, const AutomorphismData& data) {
    QMatrix mu = QMatrix::identity(g.dim());
    if (!data.diagram.empty()) mu = diagram_automorphism(g, data.diagram);
    if (!data.h.empty() && !all_zero(data.h)) {
        (void)ad_eigendata(g, data.h);
        if (!(mu * data.h == data.h))
            throw TwistError(ErrorCode::NotFixed, "semisimple part " + g.format(data.h) +
                                                      " is not fixed by the diagram automorphism");
    }
    if (!data.n.empty() && !all_zero(data.n) && !g.ad(data.n).is_nilpotent())
        throw TwistError(ErrorCode::DomainError, "ad_n is not nilpotent for n = " + g.format(data.n));
    if (data.tau && !is_algebra_automorphism(g, *data.tau))
        throw TwistError(ErrorCode::DomainError, "tau is not an algebra automorphism");
}

}  // namespace twistmod
