#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "twistmod/automorphism.hpp"
#include "twistmod/delta.hpp"
#include "twistmod/induced_module.hpp"
#include "twistmod/log_series.hpp"
#include "twistmod/vertex_operator.hpp"

namespace twistmod {

/// How twist classes are compared: modulo Z, as plain rationals, or plain rationals with
/// the additional strongly-graded certificate requested.
enum class GradingMode { CmodZ, C, StronglyC };

std::string_view grading_mode_name(GradingMode m);

/// One bigraded piece W^{[cls]}_{[weight]} (restricted to the weight cutoff).
struct GradedPiece {
    Rational weight;
    Rational cls;
    std::vector<PBWVector> basis;
    /// Generalized eigenvalue of each inner step's zero mode on this piece.
    std::vector<Rational> step_eigenvalues;
};

struct Bigrading {
    std::vector<GradedPiece> pieces;
    bool available = true;
    /// Some zero-mode image left the cutoff and was dropped.
    bool truncated = false;
    /// Largest nilpotency order of (Z - beta) found on a piece, per step.
    std::vector<int> nilpotency;
    std::string note;
};

/// Externally supplied base modes (e.g. a mu-twisted module for a diagram automorphism mu).
/// Modes of generator i live in offsets[i] + Z. Only Y(v, x) for v in span{1, b(-1)1} is
/// available from such data.
struct ModeData {
    std::string label;
    AutomorphismData mu;
    std::vector<Rational> offsets;
    std::function<PBWVector(int gen, const Rational& mode, const PBWVector& w)> act;
    std::optional<Bigrading> grading;
};

class TwistedModule;
using TwistedModulePtr = std::shared_ptr<const TwistedModule>;

/// A generalized twisted module (W, Y^g) built from an untwisted (or data-given) base by a
/// chain of Delta-twists and tau-transports.
class TwistedModule {
public:
    enum class StepKind { Base, Inner, Transport };

    /// W as a 1-twisted module: Y from the normal-ordered-product reconstruction.
    static TwistedModulePtr untwisted(InducedModulePtr vacuum, InducedModulePtr w);
    static TwistedModulePtr untwisted(InducedModulePtr w);
    /// Base module given by mode data (library-level interface).
    static TwistedModulePtr from_mode_data(InducedModulePtr vacuum, InducedModulePtr w, ModeData data);

    [[nodiscard]] const InducedModule& space() const { return *w_; }
    [[nodiscard]] const InducedModulePtr& space_ptr() const { return w_; }
    [[nodiscard]] const InducedModule& vacuum() const { return *v_; }
    [[nodiscard]] const InducedModulePtr& vacuum_ptr() const { return v_; }
    [[nodiscard]] const LieAlgebra& algebra() const { return v_->algebra(); }

    [[nodiscard]] StepKind kind() const { return kind_; }
    [[nodiscard]] const TwistedModulePtr& parent() const { return parent_; }
    /// Root of the chain (the untwisted or data base).
    [[nodiscard]] const TwistedModule& root() const;
    [[nodiscard]] const DeltaPtr& delta() const { return delta_; }
    [[nodiscard]] const QMatrix& tau() const { return tau_; }
    [[nodiscard]] const QMatrix& tau_inverse() const { return tau_inv_; }
    [[nodiscard]] const std::optional<ModeData>& mode_data() const { return data_; }

    /// g as exponent data, product of factors (last acts first).
    [[nodiscard]] const std::vector<AutomorphismData>& automorphism() const { return g_; }
    /// Cyclotomic order D (lcm of all exponent denominators).
    [[nodiscard]] long denominator() const { return denom_; }
    [[nodiscard]] CyclotomicFieldPtr field() const { return cyclotomic_field(denom_); }
    [[nodiscard]] bool has_log_terms() const { return logs_; }
    /// Accumulated semisimple / nilpotent inner data (s_total, n_total) in the Lie algebra.
    [[nodiscard]] const LieElt& semisimple_total() const { return s_total_; }
    [[nodiscard]] const LieElt& nilpotent_total() const { return n_total_; }
    [[nodiscard]] const Bigrading& bigrading() const { return grading_; }
    [[nodiscard]] GradingMode grading_mode() const { return mode_; }
    /// Human-readable chain description.
    [[nodiscard]] std::string describe() const;

    /// Y^g(v, x) w restricted to exponents in [lo, hi]; exact there.
    [[nodiscard]] LogSeries<PBWVector> vertex_op(const PBWVector& v, const PBWVector& w, const Rational& lo,
                                                 const Rational& hi) const;
    [[nodiscard]] LogSeries<CycPBWVector> vertex_op(const CycPBWVector& v, const PBWVector& w, const Rational& lo,
                                                    const Rational& hi) const;
    /// Coefficient of x^e (log x)^k in Y^g(v, x) w.
    [[nodiscard]] PBWVector coefficient(const PBWVector& v, const Rational& e, int k, const PBWVector& w) const;
    /// b^g(m, l): coefficient of x^{-m-1}(log x)^l in Y^g(b(-1)1, x) w.
    [[nodiscard]] PBWVector generator_mode(const LieElt& b, const Rational& m, int l, const PBWVector& w) const;
    /// (Y^g)_0(u) w.
    [[nodiscard]] PBWVector zero_mode(const PBWVector& u, const PBWVector& w) const;
    /// L^g(n) w from Y^g(omega, x).
    [[nodiscard]] PBWVector virasoro(int n, const PBWVector& w) const;

    /// g acting on a vacuum-module vector; coefficients in Q(zeta_D)[T].
    [[nodiscard]] CycPBWVector act_on_vacuum(const PBWVector& v) const;

private:
    friend TwistedModulePtr make_twisted(const TwistedModulePtr&, const LieElt&, GradingMode, DeltaConvention);
    friend TwistedModulePtr transport_tau(const TwistedModulePtr&, const QMatrix&);

    TwistedModule() = default;
    LogSeries<PBWVector> base_op(const PBWVector& v, const PBWVector& w, const Rational& lo,
                                 const Rational& hi) const;

    StepKind kind_ = StepKind::Base;
    InducedModulePtr v_, w_;
    TwistedModulePtr parent_;
    std::shared_ptr<const VertexOperators> y_;
    std::optional<ModeData> data_;
    DeltaPtr delta_;
    QMatrix tau_, tau_inv_;
    std::vector<AutomorphismData> g_;
    long denom_ = 1;
    bool logs_ = false;
    LieElt s_total_, n_total_;
    Bigrading grading_;
    GradingMode mode_ = GradingMode::CmodZ;
};

/// (W, Y^{g g_u}) with u = a(-1)1: Y^{g g_u}(v, x) = Y^g(Delta^(u)(x) v, x).
/// Throws NotFixed if g(a) != a, NeedsFieldExtension on non-rational spectra.
TwistedModulePtr make_twisted(const TwistedModulePtr& base, const LieElt& a, GradingMode mode = GradingMode::CmodZ,
                              DeltaConvention conv = DeltaConvention::Corrected);
TwistedModulePtr make_twisted(const TwistedModulePtr& base, const PBWVector& u, GradingMode mode = GradingMode::CmodZ);

/// Transport along an algebra automorphism tau: Y'(v, x) = Y(tau^{-1} v, x), g' = tau g tau^{-1}.
TwistedModulePtr transport_tau(const TwistedModulePtr& base, const QMatrix& tau);

/// Lifts a Lie algebra map to the vacuum module mode by mode: x_1(m_1)...x_k(m_k)1 -> M(x_1)(m_1)...M(x_k)(m_k)1.
PBWVector lift_lie_map(const InducedModule& vacuum, const QMatrix& m, const PBWVector& v);

/// Chevalley involution of sl(n): e_i <-> f_i, h_i -> -h_i.
QMatrix chevalley_involution(const LieAlgebra& g);

/// Generalized eigen-decomposition of the pieces of `grading` under (Y^g)_0(u) and the
/// induced new bigrading (weight n - beta + kappa/2, class alpha + beta).
Bigrading regrade(const TwistedModule& module, const Bigrading& grading, const PBWVector& u, const Rational& kappa,
                  GradingMode mode);

/// Bigrading of an untwisted induced module: one piece per PBW depth, class 0.
Bigrading untwisted_grading(const InducedModule& w);

}  // namespace twistmod
