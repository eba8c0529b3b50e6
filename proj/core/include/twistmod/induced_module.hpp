#pragma once

#include <memory>
#include <shared_mutex>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "twistmod/lie_algebra.hpp"
#include "twistmod/pbw.hpp"
#include "twistmod/top_space.hpp"

namespace twistmod {

/// Ind(L(lambda)) for the affine algebra at level l, with exact mode action.
///
/// Vectors are PBW combinations; mode actions are exact for every input,
/// independent of the weight cutoff. The cutoff only bounds the enumerated
/// basis and the checks that iterate over it.
class InducedModule {
public:
    /// Throws CriticalLevel when level = -h^vee.
    static std::shared_ptr<const InducedModule> build(LieAlgebraPtr g, const Rational& level, TopSpace top,
                                                      const Rational& cutoff);
    /// Vacuum module M(level, 0).
    static std::shared_ptr<const InducedModule> vacuum(LieAlgebraPtr g, const Rational& level,
                                                       const Rational& cutoff);

    [[nodiscard]] const LieAlgebra& algebra() const { return *g_; }
    [[nodiscard]] const LieAlgebraPtr& algebra_ptr() const { return g_; }
    [[nodiscard]] const Rational& level() const { return level_; }
    [[nodiscard]] const TopSpace& top() const { return top_; }
    [[nodiscard]] const Rational& cutoff() const { return cutoff_; }
    /// Conformal weight h_lambda of the top space.
    [[nodiscard]] const Rational& top_weight() const { return top_weight_; }
    /// Largest PBW depth allowed by the cutoff.
    [[nodiscard]] int max_depth() const { return max_depth_; }
    [[nodiscard]] bool is_vacuum() const { return top_.is_trivial(); }

    /// Normal-ordered monomials of exactly this depth (any depth is allowed, not just <= cutoff).
    [[nodiscard]] std::vector<Monomial> basis(int depth) const;
    /// All basis monomials of depth <= max.
    [[nodiscard]] std::vector<Monomial> basis_upto(int max) const;
    /// Dimension per depth 0..max_depth().
    [[nodiscard]] std::vector<long> graded_dims() const;
    [[nodiscard]] Rational weight(const Monomial& m) const { return top_weight_ + Rational(m.depth()); }

    [[nodiscard]] PBWVector vacuum_vector() const { return PBWVector::basis(Monomial{}); }
    [[nodiscard]] PBWVector top_vector(int t) const { return PBWVector::basis(Monomial{{}, t}); }
    /// gen(m) acting on a monomial / vector.
    [[nodiscard]] PBWVector apply_mode(int gen, int m, const Monomial& w) const;
    [[nodiscard]] PBWVector apply_mode(int gen, int m, const PBWVector& w) const;
    [[nodiscard]] PBWVector apply_mode(const LieElt& a, int m, const PBWVector& w) const;
    /// Creation-only product a_1(m_1)...a_k(m_k) applied to w (rightmost acts first).
    [[nodiscard]] PBWVector apply_word(const std::vector<ModeOp>& word, const PBWVector& w) const;

    /// Sugawara operator L(n).
    [[nodiscard]] PBWVector sugawara(int n, const PBWVector& w) const;
    /// Conformal vector omega = 1/(2(l+h^vee)) sum_i u_i(-1) u^i(-1) 1 (vacuum module).
    [[nodiscard]] PBWVector conformal_vector() const;
    /// Central charge l dim g / (l + h^vee).
    [[nodiscard]] Rational central_charge() const;

    /// Splits v into the part within the cutoff and reports whether anything was dropped.
    [[nodiscard]] PBWVector truncate(const PBWVector& v, bool* overflow = nullptr) const;

    [[nodiscard]] std::string format(const PBWVector& v) const;
    [[nodiscard]] std::string format(const Monomial& m) const;
    [[nodiscard]] const std::vector<std::string>& generator_names() const { return gen_names_; }

    /// Number of cached mode actions (diagnostics).
    [[nodiscard]] std::size_t cache_size() const;

private:
    InducedModule() = default;

    struct ModeKey {
        int gen;
        int mode;
        Monomial w;
        bool operator==(const ModeKey& o) const { return gen == o.gen && mode == o.mode && w == o.w; }
    };
    struct ModeKeyHash {
        std::size_t operator()(const ModeKey& k) const noexcept {
            return MonomialHash{}(k.w) ^ (static_cast<std::size_t>(k.gen) * 1000003u + static_cast<std::size_t>(k.mode + 4096) * 7919u);
        }
    };

    PBWVector compute_mode(int gen, int m, const Monomial& w) const;

    LieAlgebraPtr g_;
    Rational level_;
    TopSpace top_;
    Rational cutoff_;
    Rational top_weight_;
    int max_depth_ = 0;
    std::vector<std::string> gen_names_;
    // nonzero (gen, gen') pairs of the inverse Gram matrix
    std::vector<std::tuple<int, int, Rational>> dual_pairs_;

    mutable std::shared_mutex cache_mutex_;
    mutable std::unordered_map<ModeKey, PBWVector, ModeKeyHash> cache_;
};

using InducedModulePtr = std::shared_ptr<const InducedModule>;

}  // namespace twistmod
