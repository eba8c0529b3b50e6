#pragma once

#include <optional>
#include <vector>

#include "twistmod/cyclotomic.hpp"
#include "twistmod/lie_algebra.hpp"

namespace twistmod {

/// Matrix of the algebra automorphism induced by a Dynkin diagram symmetry
/// (perm[i] = image of simple root i). Signs on non-simple root vectors are
/// fixed by extending along brackets; the result is verified to preserve
/// brackets and the form. Throws InvalidSymmetry.
QMatrix diagram_automorphism(const LieAlgebra& g, const std::vector<int>& perm);

/// True when the matrix preserves all basis brackets and the invariant form.
bool is_algebra_automorphism(const LieAlgebra& g, const QMatrix& m);

/// Order of an invertible matrix (smallest r with m^r = I), 0 if greater than max_order.
int matrix_order(const QMatrix& m, int max_order = 64);

/// Exponent-level description of g = mu * e^{2 pi i ad_h} * e^{2 pi i ad_n},
/// optionally conjugated by tau (tau g tau^{-1}).
struct AutomorphismData {
    std::vector<int> diagram;    // empty: identity
    LieElt h;                    // empty or zero: no semisimple part
    LieElt n;                    // empty or zero: no nilpotent part
    std::optional<QMatrix> tau;  // conjugator, acting on Chevalley coordinates

    [[nodiscard]] bool is_identity() const;
};

/// Vector with CycScalar coordinates.
using CycVec = std::vector<CycScalar>;

CycVec to_cyc(const QVector& v);

/// Cyclotomic order D for a factor list: lcm of ad_h eigenvalue denominators.
long automorphism_denominator(const LieAlgebra& g, const std::vector<AutomorphismData>& factors);

/// Applies the product of the factors (last factor acts first) to a Lie element.
CycVec apply_automorphism(const LieAlgebra& g, const std::vector<AutomorphismData>& factors,
                          const CycVec& x, const CyclotomicFieldPtr& field);

/// Validates one factor: mu a diagram symmetry, h semisimple with rational ad-spectrum
/// and mu(h) = h, ad_n nilpotent, tau an automorphism. Throws on failure.
void validate_automorphism(const LieAlgebra& g, const AutomorphismData& data);

}  // namespace twistmod
