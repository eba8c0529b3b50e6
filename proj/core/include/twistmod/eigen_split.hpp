#pragma once

#include <functional>
#include <map>
#include <vector>

#include "twistmod/matrix.hpp"
#include "twistmod/pbw.hpp"

namespace twistmod {

using LinearOp = std::function<PBWVector(const PBWVector&)>;

/// Generalized eigencomponent v_lambda of a vector together with its nilpotent orbit
/// v_lambda, N v_lambda, N^2 v_lambda, ... (N = A - lambda), last entry nonzero.
struct EigenPart {
    Rational eigenvalue;
    std::vector<PBWVector> orbit;
};

/// Splits v into generalized eigencomponents of A using the minimal polynomial of A on
/// the cyclic subspace generated by v. Throws NeedsFieldExtension when that polynomial
/// does not split over Q, and Unsupported if the cyclic subspace exceeds max_dim.
std::vector<EigenPart> generalized_eigen_split(const PBWVector& v, const LinearOp& a, int max_dim = 512);

/// Coordinates of the vectors over the union of their monomials (the union is returned via keys).
std::vector<QVector> to_coordinates(const std::vector<PBWVector>& vs, std::vector<Monomial>* keys = nullptr);

/// Basis of the span (reduced echelon form over the monomial coordinates).
std::vector<PBWVector> span_basis(const std::vector<PBWVector>& vs);

/// Incremental row reduction over monomial coordinates: membership tests and span growth.
class SpanReducer {
public:
    /// Reduces v against the stored rows; the remainder is zero iff v is in the span.
    [[nodiscard]] PBWVector reduce(PBWVector v) const;
    [[nodiscard]] bool contains(const PBWVector& v) const { return reduce(v).is_zero(); }
    /// Adds v to the span; returns false if it was already contained.
    bool insert(const PBWVector& v);
    [[nodiscard]] std::size_t dim() const { return rows_.size(); }
    [[nodiscard]] std::vector<PBWVector> basis() const;

private:
    // pivot (largest monomial of the row, coefficient 1) -> row
    std::map<Monomial, PBWVector, std::greater<>> rows_;
};

/// True if v lies in the span of vs.
bool in_span(const std::vector<PBWVector>& vs, const PBWVector& v);

}  // namespace twistmod
