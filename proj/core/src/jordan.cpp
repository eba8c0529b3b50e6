#include "twistmod/jordan.hpp"

#include <algorithm>

#include "twistmod/errors.hpp"

namespace twistmod {

namespace {

bool is_zero(const LieElt& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_zero(); });
}

std::vector<std::pair<Rational, int>> semisimple_spectrum(const QMatrix& m) {
    const QPoly mp = m.min_poly();
    if (!(squarefree_part(mp) == mp.monic()))
        throw TwistError(ErrorCode::NotSemisimple, "minimal polynomial " + mp.str() + " is not squarefree");
    std::vector<std::pair<Rational, int>> roots;
    if (!split_over_rationals(mp, roots))
        throw TwistError(ErrorCode::NeedsFieldExtension, "minimal polynomial " + mp.str() + " does not split over Q");
    return roots;
}

}  // namespace

JordanParts jordan_chevalley(const LieAlgebra& g, const LieElt& a) {
    const QMatrix ad_a = g.ad(a);
    QMatrix S, N;
    jordan_decompose(ad_a, S, N);
    // ad is injective on a simple algebra: solve ad_s = S
    const int d = g.dim();
    std::vector<QVector> cols;
    for (int j = 0; j < d; ++j) {
        const QMatrix m = g.ad(g.basis_vector(j));
        QVector flat;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) flat.push_back(m(r, c));
        cols.push_back(std::move(flat));
    }
    QVector rhs;
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c) rhs.push_back(S(r, c));
    auto sol = QMatrix::from_columns(cols, d * d).solve(rhs);
    if (!sol) throw TwistError(ErrorCode::DomainError, "semisimple part of ad_a is not inner");
    JordanParts out{*sol, a};
    for (int i = 0; i < d; ++i) out.n[static_cast<std::size_t>(i)] -= out.s[static_cast<std::size_t>(i)];
    if (!is_zero(g.bracket(out.s, out.n)))
        throw TwistError(ErrorCode::DomainError, "internal: [s, n] != 0 in Jordan decomposition");
    if (!g.form(out.s, out.n).is_zero())
        throw TwistError(ErrorCode::DomainError, "internal: (s, n) != 0 in Jordan decomposition");
    return out;
}

std::vector<EigenVector> ad_eigendata(const LieAlgebra& g, const LieElt& s) {
    const QMatrix m = g.ad(s);
    const auto roots = semisimple_spectrum(m);
    std::vector<EigenVector> out;
    const int d = g.dim();
    for (const auto& [lambda, mult] : roots) {
        QMatrix shifted = m;
        for (int i = 0; i < d; ++i) shifted(i, i) -= lambda;
        for (auto& v : shifted.nullspace()) {
            if (!lambda.is_zero() && !g.form(s, v).is_zero())
                throw TwistError(ErrorCode::DomainError,
                                 "internal: (s, x) != 0 for an eigenvector with eigenvalue " + lambda.str());
            out.push_back({std::move(v), lambda});
        }
    }
    auto lead = [](const LieElt& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return i;
        return v.size();
    };
    std::stable_sort(out.begin(), out.end(),
                     [&](const EigenVector& a, const EigenVector& b) { return lead(a.vector) < lead(b.vector); });
    return out;
}

std::vector<std::pair<Rational, LieElt>> eigen_components(const LieAlgebra& g, const LieElt& s,
                                                          const LieElt& x) {
    if (is_zero(s)) {
        if (is_zero(x)) return {};
        return {{Rational(0), x}};
    }
    const auto data = ad_eigendata(g, s);
    std::vector<QVector> cols;
    for (const auto& e : data) cols.push_back(e.vector);
    const QMatrix p = QMatrix::from_columns(cols, g.dim());
    const QVector c = p.inverse() * x;
    std::vector<std::pair<Rational, LieElt>> out;
    for (std::size_t k = 0; k < data.size(); ++k) {
        if (c[k].is_zero()) continue;
        auto it = std::find_if(out.begin(), out.end(),
                               [&](const auto& pr) { return pr.first == data[k].eigenvalue; });
        if (it == out.end()) {
            out.emplace_back(data[k].eigenvalue, g.zero());
            it = std::prev(out.end());
        }
        for (int i = 0; i < g.dim(); ++i)
            it->second[static_cast<std::size_t>(i)] += c[k] * data[k].vector[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return out;
}

long eigen_denominator(const LieAlgebra& g, const LieElt& s) {
    if (is_zero(s)) return 1;
    long D = 1;
    for (const auto& e : ad_eigendata(g, s)) D = lcm_long(D, e.eigenvalue.den().get_si());
    return D;
}

}  // namespace twistmod
