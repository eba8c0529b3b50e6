#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "twistmod/matrix.hpp"
#include "twistmod/rational.hpp"

namespace twistmod {

/// Coordinates in the Chevalley basis of a LieAlgebra.
using LieElt = QVector;

/// Finite-dimensional simple Lie algebra with a Chevalley basis.
///
/// Basis order: positive root vectors (by height, then lexicographically),
/// Cartan elements h_1..h_r (simple coroots), negative root vectors in the
/// same order as the positive ones. Every algebra is realized by exact
/// matrices, from which structure constants are read off.
class LieAlgebra {
public:
    /// Builds type A_rank (sl(rank+1)); other types report UnsupportedAlgebra.
    static std::shared_ptr<const LieAlgebra> build(char type, int rank);

    [[nodiscard]] char type() const { return type_; }
    [[nodiscard]] int rank() const { return rank_; }
    [[nodiscard]] int dim() const { return static_cast<int>(names_.size()); }
    [[nodiscard]] std::string label() const { return std::string(1, type_) + std::to_string(rank_); }

    [[nodiscard]] const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
    /// Basis index for a name (aliases e/h/f accepted in rank 1, e1/h1/f1 otherwise); throws DomainError.
    [[nodiscard]] int index_of(std::string_view name) const;

    [[nodiscard]] int num_positive_roots() const { return num_pos_; }
    [[nodiscard]] int e_index(int root) const { return root; }
    [[nodiscard]] int h_index(int i) const { return num_pos_ + i; }
    [[nodiscard]] int f_index(int root) const { return num_pos_ + rank_ + root; }
    [[nodiscard]] bool is_cartan(int i) const { return i >= num_pos_ && i < num_pos_ + rank_; }
    /// Simple-root coordinates of the root attached to basis vector i (zero for Cartan).
    [[nodiscard]] const std::vector<int>& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] const QMatrix& cartan_matrix() const { return cartan_; }

    /// [x_i, x_j] in basis coordinates.
    [[nodiscard]] const LieElt& bracket(int i, int j) const {
        return table_[static_cast<std::size_t>(i * dim() + j)];
    }
    [[nodiscard]] LieElt bracket(const LieElt& x, const LieElt& y) const;
    [[nodiscard]] const Rational& form(int i, int j) const { return gram_(i, j); }
    [[nodiscard]] Rational form(const LieElt& x, const LieElt& y) const;
    [[nodiscard]] const QMatrix& gram() const { return gram_; }
    /// Dual basis u^i with (x_i, u^j) = delta_ij, as rows of coordinates.
    [[nodiscard]] const QMatrix& gram_inverse() const { return gram_inv_; }
    [[nodiscard]] const Rational& dual_coxeter() const { return dual_coxeter_; }

    [[nodiscard]] LieElt basis_vector(int i) const;
    [[nodiscard]] LieElt zero() const { return LieElt(static_cast<std::size_t>(dim())); }
    /// Matrix of ad_x in the basis (column j = [x, x_j]).
    [[nodiscard]] QMatrix ad(const LieElt& x) const;
    /// Matrix of the defining representation for a basis element.
    [[nodiscard]] const QMatrix& defining_matrix(int i) const { return matrices_[static_cast<std::size_t>(i)]; }
    /// Coordinates of a matrix in the span of the basis; throws DomainError if outside.
    [[nodiscard]] LieElt coordinates(const QMatrix& m) const;

    /// Element from name -> coefficient pairs.
    [[nodiscard]] LieElt element(const std::map<std::string, Rational>& coords) const;
    /// Human-readable form such as "1/2*h" or "e1 + 2*h2".
    [[nodiscard]] std::string format(const LieElt& x) const;

    /// Index of the highest root vector.
    [[nodiscard]] int highest_root_index() const { return num_pos_ - 1; }

private:
    LieAlgebra() = default;
    void finish();

    char type_ = 'A';
    int rank_ = 0;
    int num_pos_ = 0;
    std::vector<std::string> names_;
    std::vector<std::vector<int>> roots_;
    std::vector<QMatrix> matrices_;
    std::vector<LieElt> table_;
    QMatrix gram_, gram_inv_, cartan_;
    QMatrix coord_solver_;
    std::vector<std::pair<int, int>> coord_positions_;
    Rational dual_coxeter_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Jacobi identity on all basis triples; returns the first failing triple or nullopt.
bool check_jacobi(const LieAlgebra& g, std::string* witness = nullptr);
/// Invariance ([x,y],z) = (x,[y,z]) on all basis triples.
bool check_form_invariance(const LieAlgebra& g, std::string* witness = nullptr);

}  // namespace twistmod
