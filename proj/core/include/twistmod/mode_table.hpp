#pragma once

#include <string>
#include <utility>
#include <vector>

#include "twistmod/lincomb.hpp"
#include "twistmod/log_series.hpp"
#include "twistmod/twisted_module.hpp"

namespace twistmod {

/// A mode of the root (untwisted or data) module: generator index and mode value.
using BaseMode = std::pair<int, Rational>;

/// Linear combination of root-module modes plus a scalar multiple of the identity.
struct ModeExpr {
    LinComb<BaseMode> modes;
    Rational constant;

    [[nodiscard]] bool is_zero() const { return modes.is_zero() && constant.is_zero(); }
    ModeExpr& operator+=(const ModeExpr& o) {
        modes += o.modes;
        constant += o.constant;
        return *this;
    }
    ModeExpr& operator-=(const ModeExpr& o) {
        modes -= o.modes;
        constant -= o.constant;
        return *this;
    }
    ModeExpr& operator*=(const Rational& s) {
        modes *= s;
        constant *= s;
        return *this;
    }
    friend ModeExpr operator-(ModeExpr a) {
        a *= Rational(-1);
        return a;
    }
    friend bool operator==(const ModeExpr& a, const ModeExpr& b) {
        return a.modes == b.modes && a.constant == b.constant;
    }
};

/// Closed form of b^g(m, l) (coefficient of x^{-m-1}(log x)^l in Y^g(b(-1)1, x)) in terms of
/// root-module modes, obtained from the chain data without expanding any series:
///   inner step a = s + n:  b^{new}(m, L) = sum_lambda sum_{l<=L} (-1)^l/l! (ad_n^l b_lambda)^{old}(m - lambda, L - l)
///                                          - delta_{m,0} delta_{L,0} (a, b) level
///   transport tau:         b^{new}(m, L) = (tau^{-1} b)^{old}(m, L)
ModeExpr closed_form_mode(const TwistedModule& module, const LieElt& b, const Rational& m, int l);

/// Applies a closed-form entry in the root module.
PBWVector apply_mode_expr(const TwistedModule& module, const ModeExpr& e, const PBWVector& w);

/// Upper bound for the log power appearing in generator series of the module.
int log_power_bound(const TwistedModule& module);

struct ModeTableRow {
    Rational mode;
    int log_power = 0;
    ModeExpr expr;
};

struct ModeTable {
    std::string generator;
    LieElt element;
    std::vector<ModeTableRow> rows;
};

/// All nonzero entries b^g(m, l) with |m| <= range (m in (1/D)Z).
ModeTable mode_table(const TwistedModule& module, const LieElt& b, const std::string& name, int range);

/// Y^g(b(-n-1)1, x) = (1/n!) d^n/dx^n Y^g(b(-1)1, x) from the closed-form table, exact for
/// exponents in [lo, hi].
LogSeries<ModeExpr> derivative_series(const TwistedModule& module, const LieElt& b, int n, const Rational& lo,
                                      const Rational& hi);

/// e.g. "e(-1) - 2" or "f(1/2) - h(1/2)".
std::string format_mode_expr(const LieAlgebra& g, const ModeExpr& e);

}  // namespace twistmod
