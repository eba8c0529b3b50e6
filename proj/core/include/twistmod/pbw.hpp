#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "twistmod/cyclotomic.hpp"
#include "twistmod/lincomb.hpp"
#include "twistmod/rational.hpp"

namespace twistmod {

/// One creation operator gen(mode) with mode < 0.
struct ModeOp {
    int mode = -1;
    int gen = 0;
    friend auto operator<=>(const ModeOp&, const ModeOp&) = default;
    friend bool operator==(const ModeOp&, const ModeOp&) = default;
};

/// True if `a` may stand to the left of `b` in a normal-ordered monomial:
/// modes weakly decrease toward the top vector, ties by ascending generator.
inline bool normal_before(const ModeOp& a, const ModeOp& b) {
    return a.mode > b.mode || (a.mode == b.mode && a.gen <= b.gen);
}

/// a_{i1}(m1) ... a_{ik}(mk) v_top with m1 >= m2 >= ... (normal order), all m < 0.
struct Monomial {
    std::vector<ModeOp> ops;
    int top = 0;

    [[nodiscard]] int depth() const {
        int d = 0;
        for (const auto& o : ops) d -= o.mode;
        return d;
    }
    [[nodiscard]] bool is_normal_ordered() const;
    /// Monomial with the first operator removed.
    [[nodiscard]] Monomial rest() const;

    // graded order: depth first, then operators, then top index
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.top == b.top && a.ops == b.ops; }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

using PBWVector = LinComb<Monomial, Rational>;
using CycPBWVector = LinComb<Monomial, CycScalar>;

/// Largest depth among the monomials of v (0 for the zero vector).
int max_depth(const PBWVector& v);
/// True when every monomial has the same depth; the depth is returned via `depth`.
bool is_homogeneous(const PBWVector& v, int* depth = nullptr);

CycPBWVector to_cyc(const PBWVector& v);
/// Rational parts keyed by (T power, power-basis index).
std::map<std::pair<int, int>, PBWVector> cyc_components(const CycPBWVector& v);

/// Renders monomials as e.g. "e(-1)h(-2)1" using the given generator names;
/// `top_names` names top-space basis vectors (empty: "1" for a one-dimensional top).
std::string format_monomial(const Monomial& m, const std::vector<std::string>& gen_names,
                            const std::vector<std::string>& top_names);
std::string format_vector(const PBWVector& v, const std::vector<std::string>& gen_names,
                          const std::vector<std::string>& top_names);

}  // namespace twistmod
