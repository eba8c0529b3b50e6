#pragma once

#include <utility>
#include <vector>

#include "twistmod/lie_algebra.hpp"

namespace twistmod {

struct JordanParts {
    LieElt s;  // ad-semisimple part
    LieElt n;  // ad-nilpotent part
};

/// a = s + n with ad_s semisimple, ad_n nilpotent and [s, n] = 0.
/// Throws NeedsFieldExtension when ad_a has non-rational eigenvalues.
JordanParts jordan_chevalley(const LieAlgebra& g, const LieElt& a);

struct EigenVector {
    LieElt vector;
    Rational eigenvalue;
};

/// Eigenbasis of ad_s. Throws NotSemisimple or NeedsFieldExtension.
/// Asserts (s, x) = 0 for every eigenvector x with nonzero eigenvalue.
std::vector<EigenVector> ad_eigendata(const LieAlgebra& g, const LieElt& s);

/// Decomposes x into ad_s-eigencomponents (eigenvalue -> component), s semisimple.
std::vector<std::pair<Rational, LieElt>> eigen_components(const LieAlgebra& g, const LieElt& s,
                                                          const LieElt& x);

/// Least common denominator of the ad_s eigenvalues (1 for s = 0).
long eigen_denominator(const LieAlgebra& g, const LieElt& s);

}  // namespace twistmod
