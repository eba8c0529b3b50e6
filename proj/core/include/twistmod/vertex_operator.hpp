#pragma once

#include <shared_mutex>
#include <unordered_map>

#include "twistmod/induced_module.hpp"
#include "twistmod/log_series.hpp"

namespace twistmod {

/// Vertex operators Y(v, x) of the vacuum module V acting on an induced module W,
/// reconstructed from the generating fields by iterated normal-ordered products:
///
///   (a(-m) v')_n w = sum_{j>=0} C(m+j-1, j) [ a(-m-j) v'_{n+j} w - (-1)^m v'_{n-m-j} a(j) w ].
class VertexOperators {
public:
    VertexOperators(InducedModulePtr vacuum, InducedModulePtr target);

    [[nodiscard]] const InducedModule& vacuum() const { return *v_; }
    [[nodiscard]] const InducedModule& target() const { return *w_; }
    [[nodiscard]] const InducedModulePtr& vacuum_ptr() const { return v_; }
    [[nodiscard]] const InducedModulePtr& target_ptr() const { return w_; }

    /// v_n w, the coefficient of x^{-n-1} in Y(v, x) w.
    [[nodiscard]] PBWVector mode(const PBWVector& v, int n, const PBWVector& w) const;
    [[nodiscard]] PBWVector mode(const Monomial& v, int n, const Monomial& w) const;

    /// Y(v, x) w restricted to exponents in [lo, hi] (exact there).
    [[nodiscard]] LogSeries<PBWVector> series(const PBWVector& v, const PBWVector& w, const Rational& lo,
                                              const Rational& hi) const;

    [[nodiscard]] std::size_t cache_size() const;

private:
    struct Key {
        Monomial v;
        int n;
        Monomial w;
        bool operator==(const Key& o) const { return n == o.n && v == o.v && w == o.w; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            const std::size_t a = MonomialHash{}(k.v), b = MonomialHash{}(k.w);
            return a * 1000003u ^ b ^ (static_cast<std::size_t>(k.n + 4096) * 7919u);
        }
    };

    PBWVector compute(const Monomial& v, int n, const Monomial& w) const;

    InducedModulePtr v_, w_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Key, PBWVector, KeyHash> cache_;
};

}  // namespace twistmod
