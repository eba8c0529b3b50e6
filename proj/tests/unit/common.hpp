#pragma once

#include "twistmod/checks.hpp"
#include "twistmod/mode_table.hpp"
#include "twistmod/twisted_module.hpp"

namespace testutil {

using namespace twistmod;

struct Sl2 {
    LieAlgebraPtr g = LieAlgebra::build('A', 1);
    InducedModulePtr v = InducedModule::vacuum(g, Rational(2), Rational(4));
    int e = g->index_of("e");
    int f = g->index_of("f");
    int h = g->index_of("h");

    [[nodiscard]] LieElt elt(const char* name, Rational c = Rational(1)) const { return g->element({{name, c}}); }
    [[nodiscard]] PBWVector one() const { return v->vacuum_vector(); }
    /// b(-1)1
    [[nodiscard]] PBWVector gen(int b) const { return v->apply_mode(b, -1, one()); }
};

inline PBWVector scaled(PBWVector v, const Rational& c) {
    v *= c;
    return v;
}

}  // namespace testutil
