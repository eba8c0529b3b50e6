#include "twistmod/eigen_split.hpp"

#include <algorithm>
#include <set>

#include "twistmod/errors.hpp"
#include "twistmod/matrix.hpp"
#include "twistmod/polynomial.hpp"

namespace twistmod {

std::vector<QVector> to_coordinates(const std::vector<PBWVector>& vs, std::vector<Monomial>* keys) {
    std::set<Monomial> all;
    for (const auto& v : vs)
        for (const auto& [m, c] : v) all.insert(m);
    std::vector<Monomial> order(all.begin(), all.end());
    std::vector<QVector> out;
    out.reserve(vs.size());
    for (const auto& v : vs) {
        QVector x(order.size());
        for (const auto& [m, c] : v) {
            const auto pos = std::lower_bound(order.begin(), order.end(), m) - order.begin();
            x[static_cast<std::size_t>(pos)] = c;
        }
        out.push_back(std::move(x));
    }
    if (keys) *keys = std::move(order);
    return out;
}

std::vector<PBWVector> span_basis(const std::vector<PBWVector>& vs) {
    std::vector<Monomial> keys;
    const auto coords = to_coordinates(vs, &keys);
    if (keys.empty()) return {};
    // rows = vectors; rref of the row space
    QMatrix m(static_cast<int>(coords.size()), static_cast<int>(keys.size()));
    for (std::size_t i = 0; i < coords.size(); ++i)
        for (std::size_t j = 0; j < keys.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = coords[i][j];
    std::vector<int> pivots;
    const QMatrix r = m.rref(&pivots);
    std::vector<PBWVector> out;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
        PBWVector v;
        for (std::size_t j = 0; j < keys.size(); ++j) v.add_term(keys[j], r(static_cast<int>(i), static_cast<int>(j)));
        out.push_back(std::move(v));
    }
    return out;
}

PBWVector SpanReducer::reduce(PBWVector v) const {
    for (const auto& [pivot, row] : rows_) {
        const Rational c = v.coeff(pivot);
        if (c.is_zero()) continue;
        PBWVector t = row;
        t *= c;
        v -= t;
    }
    return v;
}

bool SpanReducer::insert(const PBWVector& v) {
    PBWVector r = reduce(v);
    if (r.is_zero()) return false;
    const auto last = std::prev(r.end());
    const Monomial pivot = last->first;
    r *= Rational(1) / last->second;
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<PBWVector> SpanReducer::basis() const {
    std::vector<PBWVector> out;
    for (const auto& [p, row] : rows_) out.push_back(row);
    return out;
}

bool in_span(const std::vector<PBWVector>& vs, const PBWVector& v) {
    if (v.is_zero()) return true;
    SpanReducer r;
    for (const auto& x : vs) r.insert(x);
    return r.contains(v);
}

std::vector<EigenPart> generalized_eigen_split(const PBWVector& v, const LinearOp& a, int max_dim) {
    if (v.is_zero()) return {};
    // Krylov sequence v, Av, A^2 v, ... until linear dependence
    std::vector<PBWVector> krylov{v};
    QVector relation;
    for (;;) {
        if (static_cast<int>(krylov.size()) > max_dim)
            throw TwistError(ErrorCode::Unsupported, "cyclic subspace exceeds dimension bound");
        PBWVector next = a(krylov.back());
        std::vector<PBWVector> all = krylov;
        all.push_back(next);
        const auto coords = to_coordinates(all);
        const int rows = static_cast<int>(coords.front().size());
        const int k = static_cast<int>(krylov.size());
        QMatrix m(rows, k);
        QVector rhs(static_cast<std::size_t>(rows));
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < k; ++j) m(i, j) = coords[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            rhs[static_cast<std::size_t>(i)] = coords.back()[static_cast<std::size_t>(i)];
        }
        if (auto sol = m.solve(rhs)) {
            relation = std::move(*sol);
            break;
        }
        krylov.push_back(std::move(next));
    }
    // minimal polynomial p(t) = t^k - sum c_i t^i
    const int k = static_cast<int>(krylov.size());
    std::vector<Rational> pc(static_cast<std::size_t>(k + 1));
    for (int i = 0; i < k; ++i) pc[static_cast<std::size_t>(i)] = -relation[static_cast<std::size_t>(i)];
    pc[static_cast<std::size_t>(k)] = Rational(1);
    const QPoly p(pc);
    std::vector<std::pair<Rational, int>> factors;
    if (!split_over_rationals(p, factors))
        throw TwistError(ErrorCode::NeedsFieldExtension,
                         "zero-mode minimal polynomial " + p.str("t") + " does not split over Q");
    std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    auto apply_poly = [&](const QPoly& q) {
        // q has degree < k: q(A) v = sum q_i A^i v
        PBWVector out;
        for (int i = 0; i <= q.degree(); ++i) {
            PBWVector t = krylov[static_cast<std::size_t>(i)];
            t *= q[i];
            out += t;
        }
        return out;
    };

    std::vector<EigenPart> out;
    for (const auto& [lambda, mult] : factors) {
        QPoly local = QPoly::constant(Rational(1));
        for (int i = 0; i < mult; ++i) local = local * QPoly::linear_root(lambda);
        const QPoly co = p / local;
        // idempotent e = co * (co^{-1} mod local), reduced mod p
        QPoly s, t;
        (void)extended_gcd(co, local, s, t);
        const QPoly e = (co * s) % p;
        EigenPart part;
        part.eigenvalue = lambda;
        PBWVector cur = apply_poly(e);
        while (!cur.is_zero()) {
            part.orbit.push_back(cur);
            PBWVector nxt = a(cur);
            PBWVector shift = cur;
            shift *= lambda;
            nxt -= shift;
            cur = std::move(nxt);
            if (static_cast<int>(part.orbit.size()) > mult)
                throw TwistError(ErrorCode::DomainError, "generalized eigen split: nilpotency bound exceeded");
        }
        if (!part.orbit.empty()) out.push_back(std::move(part));
    }
    return out;
}

}  // namespace twistmod
