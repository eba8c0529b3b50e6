#include "twistmod/matrix.hpp"

#include <sstream>
#include <stdexcept>

#include "twistmod/errors.hpp"

namespace twistmod {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& cols, int rows) {
    QMatrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.cols(); ++j)
        for (int i = 0; i < rows; ++i) m(i, j) = cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    return m;
}

bool QMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

QVector QMatrix::column(int j) const {
    QVector v(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) v[static_cast<std::size_t>(i)] = (*this)(i, j);
    return v;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("QMatrix: shape mismatch in product");
    QMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const Rational& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const Rational& y = b(k, j);
                if (!y.is_zero()) c(i, j) += x * y;
            }
        }
    return c;
}

QVector operator*(const QMatrix& a, const QVector& v) {
    QVector r(static_cast<std::size_t>(a.rows_));
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            const Rational& x = a(i, j);
            if (!x.is_zero() && !v[static_cast<std::size_t>(j)].is_zero())
                r[static_cast<std::size_t>(i)] += x * v[static_cast<std::size_t>(j)];
        }
    return r;
}

QMatrix QMatrix::power(int k) const {
    QMatrix r = identity(rows_);
    QMatrix b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

QMatrix QMatrix::rref(std::vector<int>* pivots) const {
    QMatrix m = *this;
    std::vector<int> piv;
    int row = 0;
    for (int col = 0; col < cols_ && row < rows_; ++col) {
        int sel = -1;
        for (int i = row; i < rows_; ++i)
            if (!m(i, col).is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != row)
            for (int j = 0; j < cols_; ++j) std::swap(m(sel, j), m(row, j));
        const Rational inv = Rational(1) / m(row, col);
        for (int j = col; j < cols_; ++j) m(row, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == row || m(i, col).is_zero()) continue;
            const Rational f = m(i, col);
            for (int j = col; j < cols_; ++j)
                if (!m(row, j).is_zero()) m(i, j) -= f * m(row, j);
        }
        piv.push_back(col);
        ++row;
    }
    if (pivots) *pivots = std::move(piv);
    return m;
}

int QMatrix::rank() const {
    std::vector<int> piv;
    (void)rref(&piv);
    return static_cast<int>(piv.size());
}

std::vector<QVector> QMatrix::nullspace() const {
    std::vector<int> piv;
    const QMatrix r = rref(&piv);
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (int p : piv) is_pivot[static_cast<std::size_t>(p)] = true;
    std::vector<QVector> basis;
    for (int free = 0; free < cols_; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        QVector v(static_cast<std::size_t>(cols_));
        v[static_cast<std::size_t>(free)] = Rational(1);
        for (std::size_t i = 0; i < piv.size(); ++i)
            v[static_cast<std::size_t>(piv[i])] = -r(static_cast<int>(i), free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVector> QMatrix::solve(const QVector& b) const {
    QMatrix aug(rows_, cols_ + 1);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
        aug(i, cols_) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> piv;
    const QMatrix r = aug.rref(&piv);
    if (!piv.empty() && piv.back() == cols_) return std::nullopt;
    QVector x(static_cast<std::size_t>(cols_));
    for (std::size_t i = 0; i < piv.size(); ++i)
        x[static_cast<std::size_t>(piv[i])] = r(static_cast<int>(i), cols_);
    return x;
}

QMatrix QMatrix::inverse() const {
    if (!is_square()) throw std::domain_error("QMatrix::inverse: not square");
    const int n = rows_;
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = (*this)(i, j);
        aug(i, n + i) = Rational(1);
    }
    std::vector<int> piv;
    const QMatrix r = aug.rref(&piv);
    if (static_cast<int>(piv.size()) < n || piv[static_cast<std::size_t>(n - 1)] != n - 1)
        throw std::domain_error("QMatrix::inverse: singular matrix");
    QMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = r(i, n + j);
    return inv;
}

QPoly QMatrix::char_poly() const {
    if (!is_square()) throw std::domain_error("QMatrix::char_poly: not square");
    const int n = rows_;
    // Faddeev-LeVerrier: M_k = A M_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(A M_k)/k
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    c[static_cast<std::size_t>(n)] = Rational(1);
    QMatrix m(n, n);
    for (int k = 1; k <= n; ++k) {
        QMatrix am = *this * m;
        for (int i = 0; i < n; ++i) am(i, i) += c[static_cast<std::size_t>(n - k + 1)];
        m = am;
        const QMatrix prod = *this * m;
        Rational tr(0);
        for (int i = 0; i < n; ++i) tr += prod(i, i);
        c[static_cast<std::size_t>(n - k)] = -tr / Rational(k);
    }
    return QPoly(std::move(c));
}

QPoly QMatrix::min_poly() const {
    if (!is_square()) throw std::domain_error("QMatrix::min_poly: not square");
    const int n = rows_;
    std::vector<QVector> powers;
    QMatrix p = identity(n);
    for (int k = 0; k <= n; ++k) {
        QVector flat;
        flat.reserve(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) flat.push_back(p(i, j));
        powers.push_back(std::move(flat));
        const QMatrix cols = from_columns(powers, n * n);
        auto ker = cols.nullspace();
        if (!ker.empty()) {
            QVector v = ker.front();
            return QPoly(std::move(v)).monic();
        }
        p = p * *this;
    }
    return char_poly();
}

bool QMatrix::is_nilpotent() const { return is_square() && power(rows_).is_zero(); }

std::string QMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << "[";
        for (int j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

QMatrix eval_poly(const QPoly& p, const QMatrix& a) {
    QMatrix r(a.rows(), a.cols());
    for (int i = p.degree(); i >= 0; --i) {
        r = r * a;
        for (int d = 0; d < a.rows(); ++d) r(d, d) += p[i];
    }
    return r;
}

QMatrix nilpotent_exp(const QMatrix& n) {
    if (!n.is_nilpotent()) throw TwistError(ErrorCode::DomainError, "nilpotent_exp: matrix is not nilpotent");
    QMatrix r = QMatrix::identity(n.rows());
    QMatrix term = QMatrix::identity(n.rows());
    for (int j = 1; j <= n.rows(); ++j) {
        term = term * n * (Rational(1) / Rational(j));
        if (term.is_zero()) break;
        r += term;
    }
    return r;
}

QMatrix unipotent_log(const QMatrix& u) {
    if (!u.is_square()) throw TwistError(ErrorCode::NotUnipotent, "unipotent_log: not square");
    const QMatrix e = u - QMatrix::identity(u.rows());
    if (!e.is_nilpotent()) throw TwistError(ErrorCode::NotUnipotent, "unipotent_log: U - I is not nilpotent");
    QMatrix r(u.rows(), u.cols());
    QMatrix term = QMatrix::identity(u.rows());
    for (int j = 1; j <= u.rows(); ++j) {
        term = term * e;
        if (term.is_zero()) break;
        r += term * (Rational(j % 2 == 1 ? 1 : -1) / Rational(j));
    }
    return r;
}

void jordan_decompose(const QMatrix& a, QMatrix& s, QMatrix& n) {
    const QPoly p = squarefree_part(a.char_poly());
    std::vector<std::pair<Rational, int>> factors;
    if (!split_over_rationals(p, factors))
        throw TwistError(ErrorCode::NeedsFieldExtension,
                         "eigenvalues are not all rational (squarefree part " + p.str() + ")");
    // Newton iteration S <- S - p(S) p'(S)^{-1} converges in finitely many steps.
    const QPoly dp = p.derivative();
    QMatrix cur = a;
    for (int iter = 0; iter < 64; ++iter) {
        const QMatrix ps = eval_poly(p, cur);
        if (ps.is_zero()) break;
        cur = cur - ps * eval_poly(dp, cur).inverse();
    }
    s = cur;
    n = a - s;
}

}  // namespace twistmod
