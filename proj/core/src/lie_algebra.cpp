#include "twistmod/lie_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "twistmod/errors.hpp"

namespace twistmod {

namespace {

QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

QMatrix unit(int n, int i, int j) {
    QMatrix m(n, n);
    m(i, j) = Rational(1);
    return m;
}

}  // namespace

std::shared_ptr<const LieAlgebra> LieAlgebra::build(char type, int rank) {
    if (type != 'A')
        throw TwistError(ErrorCode::UnsupportedAlgebra,
                         std::string("type ") + type + " is not implemented (type A only)");
    if (rank < 1 || rank > 8)
        throw TwistError(ErrorCode::UnsupportedAlgebra, "rank " + std::to_string(rank) + " outside 1..8");
    std::shared_ptr<LieAlgebra> g(new LieAlgebra());
    g->type_ = type;
    g->rank_ = rank;
    const int n = rank + 1;
    // positive roots eps_i - eps_j (i < j), ordered by height j - i, then i
    std::vector<std::pair<int, int>> pos;
    for (int height = 1; height <= rank; ++height)
        for (int i = 0; i + height < n; ++i) pos.emplace_back(i, i + height);
    g->num_pos_ = static_cast<int>(pos.size());
    auto root_name = [&](int i, int j) {
        if (rank == 1) return std::string();
        std::string s;
        for (int k = i; k < j; ++k) s += std::to_string(k + 1);
        return s;
    };
    auto root_coords = [&](int i, int j) {
        std::vector<int> c(static_cast<std::size_t>(rank));
        for (int k = i; k < j; ++k) c[static_cast<std::size_t>(k)] = 1;
        return c;
    };
    for (auto [i, j] : pos) {
        g->names_.push_back("e" + root_name(i, j));
        g->roots_.push_back(root_coords(i, j));
        g->matrices_.push_back(unit(n, i, j));
    }
    for (int k = 0; k < rank; ++k) {
        g->names_.push_back(rank == 1 ? "h" : "h" + std::to_string(k + 1));
        g->roots_.emplace_back(static_cast<std::size_t>(rank));
        g->matrices_.push_back(unit(n, k, k) - unit(n, k + 1, k + 1));
    }
    for (auto [i, j] : pos) {
        g->names_.push_back("f" + root_name(i, j));
        auto c = root_coords(i, j);
        for (auto& x : c) x = -x;
        g->roots_.push_back(c);
        g->matrices_.push_back(unit(n, j, i));
    }
    g->finish();
    return g;
}

void LieAlgebra::finish() {
    const int d = dim();
    const int n = matrices_.front().rows();
    // coordinate solver: pick d independent matrix entries
    std::vector<QVector> cols;
    for (const auto& m : matrices_) {
        QVector flat;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.push_back(m(i, j));
        cols.push_back(std::move(flat));
    }
    const QMatrix big = QMatrix::from_columns(cols, n * n);
    std::vector<int> piv;
    (void)big.transpose().rref(&piv);
    if (static_cast<int>(piv.size()) != d)
        throw TwistError(ErrorCode::UnsupportedAlgebra, "basis matrices are linearly dependent");
    QMatrix square(d, d);
    for (int r = 0; r < d; ++r) {
        const int pos = piv[static_cast<std::size_t>(r)];
        coord_positions_.emplace_back(pos / n, pos % n);
        for (int c = 0; c < d; ++c) square(r, c) = big(pos, c);
    }
    coord_solver_ = square.inverse();

    table_.assign(static_cast<std::size_t>(d * d), LieElt());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            table_[static_cast<std::size_t>(i * d + j)] = coordinates(commutator(matrices_[i], matrices_[j]));

    // trace form, then rescale so that long roots have squared length 2
    gram_ = QMatrix(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const QMatrix p = matrices_[i] * matrices_[j];
            Rational tr(0);
            for (int k = 0; k < n; ++k) tr += p(k, k);
            gram_(i, j) = tr;
        }
    Rational min_coroot_len;
    bool first = true;
    for (int r = 0; r < num_pos_; ++r) {
        const LieElt hr = bracket(e_index(r), f_index(r));
        const Rational len = form(hr, hr);
        if (first || len < min_coroot_len) min_coroot_len = len;
        first = false;
    }
    gram_ *= Rational(2) / min_coroot_len;
    gram_inv_ = gram_.inverse();

    cartan_ = QMatrix(rank_, rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) {
            // a_ij = alpha_j(h_i): [h_i, e_j] = a_ij e_j
            cartan_(i, j) = bracket(h_index(i), e_index(j))[static_cast<std::size_t>(e_index(j))];
        }

    // dual Coxeter number 1 + <rho, theta^vee>; theta^vee = [e_theta, f_theta]
    const int th = highest_root_index();
    const LieElt hth = bracket(e_index(th), f_index(th));
    Rational sum(0);
    for (int i = 0; i < rank_; ++i) sum += hth[static_cast<std::size_t>(h_index(i))];
    dual_coxeter_ = Rational(1) + sum;

    // build-time self checks
    std::string witness;
    if (!check_jacobi(*this, &witness))
        throw TwistError(ErrorCode::UnsupportedAlgebra, "Jacobi identity fails at " + witness);
    if (!check_form_invariance(*this, &witness))
        throw TwistError(ErrorCode::UnsupportedAlgebra, "form not invariant at " + witness);
    // cross-check h^vee against the adjoint Casimir, which equals 2 h^vee
    QMatrix cas(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const Rational& c = gram_inv_(i, j);
            if (c.is_zero()) continue;
            cas += ad(basis_vector(i)) * ad(basis_vector(j)) * c;
        }
    if (!(cas == QMatrix::identity(d) * (Rational(2) * dual_coxeter_)))
        throw TwistError(ErrorCode::UnsupportedAlgebra, "adjoint Casimir disagrees with dual Coxeter number");
}

int LieAlgebra::index_of(std::string_view name) const {
    for (int i = 0; i < dim(); ++i)
        if (names_[static_cast<std::size_t>(i)] == name) return i;
    if (rank_ == 1) {
        if (name == "e1") return 0;
        if (name == "h1") return 1;
        if (name == "f1") return 2;
    }
    throw TwistError(ErrorCode::DomainError, "unknown basis element '" + std::string(name) + "' in " + label());
}

LieElt LieAlgebra::basis_vector(int i) const {
    LieElt v = zero();
    v[static_cast<std::size_t>(i)] = Rational(1);
    return v;
}

LieElt LieAlgebra::bracket(const LieElt& x, const LieElt& y) const {
    LieElt r = zero();
    const int d = dim();
    for (int i = 0; i < d; ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < d; ++j) {
            if (y[static_cast<std::size_t>(j)].is_zero()) continue;
            const Rational c = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
            const LieElt& b = bracket(i, j);
            for (int k = 0; k < d; ++k)
                if (!b[static_cast<std::size_t>(k)].is_zero()) r[static_cast<std::size_t>(k)] += c * b[static_cast<std::size_t>(k)];
        }
    }
    return r;
}

Rational LieAlgebra::form(const LieElt& x, const LieElt& y) const {
    Rational r(0);
    for (int i = 0; i < dim(); ++i) {
        if (x[static_cast<std::size_t>(i)].is_zero()) continue;
        for (int j = 0; j < dim(); ++j)
            if (!y[static_cast<std::size_t>(j)].is_zero() && !gram_(i, j).is_zero())
                r += x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)] * gram_(i, j);
    }
    return r;
}

QMatrix LieAlgebra::ad(const LieElt& x) const {
    const int d = dim();
    QMatrix m(d, d);
    for (int j = 0; j < d; ++j) {
        const LieElt col = bracket(x, basis_vector(j));
        for (int i = 0; i < d; ++i) m(i, j) = col[static_cast<std::size_t>(i)];
    }
    return m;
}

LieElt LieAlgebra::coordinates(const QMatrix& m) const {
    const int d = dim();
    QVector rhs(static_cast<std::size_t>(d));
    for (int r = 0; r < d; ++r) {
        auto [i, j] = coord_positions_[static_cast<std::size_t>(r)];
        rhs[static_cast<std::size_t>(r)] = m(i, j);
    }
    LieElt c = coord_solver_ * rhs;
    QMatrix back(m.rows(), m.cols());
    for (int k = 0; k < d; ++k)
        if (!c[static_cast<std::size_t>(k)].is_zero()) back += matrices_[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(k)];
    if (!(back == m)) throw TwistError(ErrorCode::DomainError, "matrix is not in the span of the basis");
    return c;
}

LieElt LieAlgebra::element(const std::map<std::string, Rational>& coords) const {
    LieElt v = zero();
    for (const auto& [name, c] : coords) v[static_cast<std::size_t>(index_of(name))] += c;
    return v;
}

std::string LieAlgebra::format(const LieElt& x) const {
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < dim(); ++i) {
        const Rational& c = x[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational a = c.sign() < 0 ? -c : c;
        if (a != Rational(1)) os << a << "*";
        os << name(i);
        first = false;
    }
    return first ? "0" : os.str();
}

bool check_jacobi(const LieAlgebra& g, std::string* witness) {
    const int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const LieElt x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
                LieElt s = g.bracket(x, g.bracket(y, z));
                const LieElt t = g.bracket(y, g.bracket(z, x));
                const LieElt u = g.bracket(z, g.bracket(x, y));
                bool zero = true;
                for (int c = 0; c < d; ++c)
                    if (!(s[static_cast<std::size_t>(c)] + t[static_cast<std::size_t>(c)] + u[static_cast<std::size_t>(c)]).is_zero()) zero = false;
                if (!zero) {
                    if (witness) *witness = "(" + g.name(i) + ", " + g.name(j) + ", " + g.name(k) + ")";
                    return false;
                }
            }
    return true;
}

bool check_form_invariance(const LieAlgebra& g, std::string* witness) {
    const int d = g.dim();
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                const Rational lhs = g.form(g.bracket(i, j), g.basis_vector(k));
                const Rational rhs = g.form(g.basis_vector(i), g.bracket(j, k));
                if (lhs != rhs) {
                    if (witness) *witness = "(" + g.name(i) + ", " + g.name(j) + ", " + g.name(k) + ")";
                    return false;
                }
            }
    return true;
}

}  // namespace twistmod
