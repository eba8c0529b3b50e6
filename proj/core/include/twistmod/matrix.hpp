#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistmod/polynomial.hpp"
#include "twistmod/rational.hpp"

namespace twistmod {

using QVector = std::vector<Rational>;

/// Dense exact matrix over Q, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols)) {}
    static QMatrix identity(int n);
    /// Matrix whose columns are the given vectors (all of equal length).
    static QMatrix from_columns(const std::vector<QVector>& cols, int rows);

    [[nodiscard]] int rows() const { return rows_; }
    [[nodiscard]] int cols() const { return cols_; }
    Rational& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
    const Rational& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_square() const { return rows_ == cols_; }
    [[nodiscard]] QVector column(int j) const;
    [[nodiscard]] QMatrix transpose() const;

    QMatrix& operator+=(const QMatrix& o);
    QMatrix& operator-=(const QMatrix& o);
    QMatrix& operator*=(const Rational& s);
    friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
    friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
    friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
    friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
    friend QVector operator*(const QMatrix& a, const QVector& v);
    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

    [[nodiscard]] QMatrix power(int k) const;
    /// Reduced row echelon form; pivot columns returned through `pivots`.
    [[nodiscard]] QMatrix rref(std::vector<int>* pivots = nullptr) const;
    [[nodiscard]] int rank() const;
    /// Basis of the right kernel.
    [[nodiscard]] std::vector<QVector> nullspace() const;
    /// Some solution of A x = b, or nullopt if inconsistent.
    [[nodiscard]] std::optional<QVector> solve(const QVector& b) const;
    /// Inverse of a square matrix; throws std::domain_error if singular.
    [[nodiscard]] QMatrix inverse() const;
    /// Characteristic polynomial det(t I - A) (Faddeev-LeVerrier).
    [[nodiscard]] QPoly char_poly() const;
    /// Minimal polynomial (monic) via linear dependence of powers.
    [[nodiscard]] QPoly min_poly() const;
    [[nodiscard]] bool is_nilpotent() const;

    [[nodiscard]] std::string str() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

/// p(A) for a square matrix A.
QMatrix eval_poly(const QPoly& p, const QMatrix& a);

/// exp(N) for nilpotent N (finite sum); throws NotUnipotent-style DomainError if N is not nilpotent.
QMatrix nilpotent_exp(const QMatrix& n);

/// Logarithm of a unipotent matrix with the standard alternating series
/// sum_{j>=1} (-1)^{j+1} (U - I)^j / j. Throws NotUnipotent if U - I is not nilpotent.
QMatrix unipotent_log(const QMatrix& u);

/// Additive Jordan-Chevalley decomposition A = S + N over Q: S semisimple,
/// N nilpotent, [S, N] = 0, both polynomials in A. Throws NeedsFieldExtension if
/// the eigenvalues of A are not all rational.
void jordan_decompose(const QMatrix& a, QMatrix& s, QMatrix& n);

}  // namespace twistmod
