#pragma once

#include <memory>
#include <shared_mutex>
#include <unordered_map>

#include "twistmod/induced_module.hpp"
#include "twistmod/jordan.hpp"
#include "twistmod/log_series.hpp"

namespace twistmod {

/// Sign convention for Delta^(u)(x).
///   Corrected:      x^{-Y_0(u)} exp(-int_0^{-x} Y^{<=-2}(u, y))
///   PreCorrection:  x^{+Y_0(u)} exp(+int_0^{x} Y^{<=-2}(u, y))   (kept as a regression oracle)
enum class DeltaConvention { Corrected, PreCorrection };

/// Delta^(u)(x) on the vacuum module for u = a(-1)1.
class DeltaOperator {
public:
    /// Throws DomainError if u is not of the form a(-1)1, NotQuasiPrimary if L(1)u != 0,
    /// NeedsFieldExtension if ad_a has non-rational eigenvalues.
    static std::shared_ptr<const DeltaOperator> make(InducedModulePtr vacuum, const PBWVector& u,
                                                     DeltaConvention conv = DeltaConvention::Corrected);
    static std::shared_ptr<const DeltaOperator> make(InducedModulePtr vacuum, const LieElt& a,
                                                     DeltaConvention conv = DeltaConvention::Corrected);

    [[nodiscard]] const InducedModule& module() const { return *v_; }
    [[nodiscard]] const InducedModulePtr& module_ptr() const { return v_; }
    [[nodiscard]] const LieElt& current() const { return a_; }
    [[nodiscard]] const PBWVector& u() const { return u_; }
    [[nodiscard]] const JordanParts& parts() const { return parts_; }
    /// Y_1(u)u = kappa 1.
    [[nodiscard]] const Rational& kappa() const { return kappa_; }
    [[nodiscard]] DeltaConvention convention() const { return conv_; }
    [[nodiscard]] bool is_zero() const { return zero_; }
    /// Least common denominator of the exponents produced (ad_s spectrum).
    [[nodiscard]] long denominator() const { return denom_; }

    /// Delta(x) v as an exact finite series.
    [[nodiscard]] LogSeries<PBWVector> apply(const PBWVector& v) const;
    [[nodiscard]] LogSeries<PBWVector> apply(const Monomial& v) const;
    /// exp(-int_0^{-x} Y^{<=-2}(u,y)) v (or the pre-correction variant) without the x^{-Y_0(u)} factor.
    [[nodiscard]] LogSeries<PBWVector> exponential_part(const PBWVector& v) const;
    /// Y_0(u) v = a(0) v.
    [[nodiscard]] PBWVector zero_mode(const PBWVector& v) const;

private:
    DeltaOperator() = default;

    InducedModulePtr v_;
    LieElt a_;
    PBWVector u_;
    JordanParts parts_;
    Rational kappa_;
    DeltaConvention conv_ = DeltaConvention::Corrected;
    bool zero_ = false;
    long denom_ = 1;

    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<Monomial, LogSeries<PBWVector>, MonomialHash> cache_;
};

using DeltaPtr = std::shared_ptr<const DeltaOperator>;

/// Extracts a from u = a(-1)1; throws DomainError for other shapes.
LieElt weight_one_element(const InducedModule& vacuum, const PBWVector& u);
/// a(-1)1 in the vacuum module.
PBWVector weight_one_vector(const InducedModule& vacuum, const LieElt& a);

}  // namespace twistmod
