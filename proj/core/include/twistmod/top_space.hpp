#pragma once

#include <string>
#include <vector>

#include "twistmod/lie_algebra.hpp"

namespace twistmod {

/// Finite-dimensional g-module L(lambda) given by exact matrices on a fixed basis.
struct TopSpace {
    std::string label;
    int dim = 1;
    std::vector<QMatrix> rho;             // rho[i] = action of basis element i
    std::vector<std::string> basis_names;  // empty for the trivial module
    Rational casimir;                      // scalar value of sum_i rho(u_i) rho(u^i)

    [[nodiscard]] bool is_trivial() const { return dim == 1 && casimir.is_zero(); }
};

/// Highest-weight module from Dynkin labels. Built in: trivial (all zero),
/// every irreducible of sl2, the defining module [1,0,..], its dual [..,0,1],
/// and the adjoint module [1,0,..,0,1] (rank >= 2). Others: Unsupported.
TopSpace make_top_space(const LieAlgebra& g, const std::vector<int>& dynkin);

/// Module given by user matrices; checked to be a representation with scalar Casimir.
TopSpace make_top_space(const LieAlgebra& g, std::string label, std::vector<QMatrix> rho,
                        std::vector<std::string> basis_names);

}  // namespace twistmod
