#include "twistmod/top_space.hpp"

#include <algorithm>

#include "twistmod/errors.hpp"

namespace twistmod {

namespace {

std::string dynkin_label(const std::vector<int>& dynkin) {
    std::string s = "[";
    for (std::size_t i = 0; i < dynkin.size(); ++i) s += (i ? "," : "") + std::to_string(dynkin[i]);
    return s + "]";
}

std::vector<QMatrix> sl2_irreducible(const LieAlgebra& g, int k) {
    // v_j = f^j v_0 / j!: h v_j = (k-2j) v_j, f v_j = (j+1) v_{j+1}, e v_j = (k-j+1) v_{j-1}
    const int n = k + 1;
    QMatrix e(n, n), h(n, n), f(n, n);
    for (int j = 0; j < n; ++j) {
        h(j, j) = Rational(k - 2 * j);
        if (j + 1 < n) f(j + 1, j) = Rational(j + 1);
        if (j > 0) e(j - 1, j) = Rational(k - j + 1);
    }
    std::vector<QMatrix> rho(static_cast<std::size_t>(g.dim()));
    rho[static_cast<std::size_t>(g.index_of("e"))] = e;
    rho[static_cast<std::size_t>(g.index_of("h"))] = h;
    rho[static_cast<std::size_t>(g.index_of("f"))] = f;
    return rho;
}

}  // namespace

TopSpace make_top_space(const LieAlgebra& g, std::string label, std::vector<QMatrix> rho,
                        std::vector<std::string> basis_names) {
    const int d = g.dim();
    if (static_cast<int>(rho.size()) != d)
        throw TwistError(ErrorCode::DomainError, "top space needs one matrix per basis element");
    const int n = rho.front().rows();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            QMatrix br(n, n);
            const LieElt& c = g.bracket(i, j);
            for (int k = 0; k < d; ++k)
                if (!c[static_cast<std::size_t>(k)].is_zero()) br += rho[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k)];
            const QMatrix comm = rho[static_cast<std::size_t>(i)] * rho[static_cast<std::size_t>(j)] -
                                 rho[static_cast<std::size_t>(j)] * rho[static_cast<std::size_t>(i)];
            if (!(comm == br))
                throw TwistError(ErrorCode::DomainError, "top space matrices violate [" + g.name(i) + ", " +
                                                             g.name(j) + "]");
        }
    QMatrix cas(n, n);
    const QMatrix& ginv = g.gram_inverse();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (!ginv(i, j).is_zero())
                cas += rho[static_cast<std::size_t>(i)] * rho[static_cast<std::size_t>(j)] * ginv(i, j);
    const Rational c = cas(0, 0);
    if (!(cas == QMatrix::identity(n) * c))
        throw TwistError(ErrorCode::Unsupported, "Casimir does not act by a scalar on top space " + label);
    TopSpace t;
    t.label = std::move(label);
    t.dim = n;
    t.rho = std::move(rho);
    t.basis_names = std::move(basis_names);
    t.casimir = c;
    return t;
}

TopSpace make_top_space(const LieAlgebra& g, const std::vector<int>& dynkin) {
    if (static_cast<int>(dynkin.size()) != g.rank())
        throw TwistError(ErrorCode::DomainError, "highest weight " + dynkin_label(dynkin) + " needs " +
                                                     std::to_string(g.rank()) + " Dynkin labels");
    if (std::any_of(dynkin.begin(), dynkin.end(), [](int x) { return x < 0; }))
        throw TwistError(ErrorCode::DomainError, "highest weight must be dominant");
    const std::string label = dynkin_label(dynkin);
    const int d = g.dim();
    if (std::all_of(dynkin.begin(), dynkin.end(), [](int x) { return x == 0; })) {
        TopSpace t;
        t.label = label;
        t.dim = 1;
        t.rho.assign(static_cast<std::size_t>(d), QMatrix(1, 1));
        t.casimir = Rational(0);
        return t;
    }
    auto names = [](int n) {
        std::vector<std::string> v;
        for (int i = 0; i < n; ++i) v.push_back("v" + std::to_string(i));
        return v;
    };
    if (g.type() == 'A' && g.rank() == 1) {
        const int k = dynkin[0];
        return make_top_space(g, label, sl2_irreducible(g, k), names(k + 1));
    }
    if (g.type() == 'A') {
        const int r = g.rank();
        auto is_unit = [&](int pos) {
            for (int i = 0; i < r; ++i)
                if (dynkin[static_cast<std::size_t>(i)] != (i == pos ? 1 : 0)) return false;
            return true;
        };
        std::vector<QMatrix> rho;
        if (is_unit(0)) {
            for (int i = 0; i < d; ++i) rho.push_back(g.defining_matrix(i));
            return make_top_space(g, label, rho, names(r + 1));
        }
        if (is_unit(r - 1)) {
            for (int i = 0; i < d; ++i) rho.push_back(g.defining_matrix(i).transpose() * Rational(-1));
            return make_top_space(g, label, rho, names(r + 1));
        }
        bool adjoint = dynkin.front() == 1 && dynkin.back() == 1;
        for (int i = 1; i + 1 < r; ++i) adjoint = adjoint && dynkin[static_cast<std::size_t>(i)] == 0;
        if (adjoint) {
            for (int i = 0; i < d; ++i) rho.push_back(g.ad(g.basis_vector(i)));
            std::vector<std::string> bn;
            for (int i = 0; i < d; ++i) bn.push_back("v[" + g.name(i) + "]");
            return make_top_space(g, label, rho, bn);
        }
    }
    throw TwistError(ErrorCode::Unsupported, "no built-in top space for highest weight " + label + " of " +
                                                 g.label());
}

}  // namespace twistmod
