#include "twistmod/mode_table.hpp"

#include <algorithm>

#include "twistmod/errors.hpp"
#include "twistmod/jordan.hpp"

namespace twistmod {

namespace {

bool all_zero(const LieElt& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); });
}

int nilpotency_index(const LieAlgebra& g, const LieElt& n) {
    if (all_zero(n)) return 1;
    const QMatrix ad = g.ad(n);
    QMatrix p = ad;
    int k = 1;
    while (!p.is_zero()) {
        p = p * ad;
        ++k;
    }
    return k;
}

}  // namespace

ModeExpr closed_form_mode(const TwistedModule& module, const LieElt& b, const Rational& m, int l) {
    ModeExpr out;
    if (l < 0 || all_zero(b)) return out;
    const LieAlgebra& g = module.algebra();
    switch (module.kind()) {
        case TwistedModule::StepKind::Base: {
            if (l != 0) return out;
            const auto& data = module.mode_data();
            for (int i = 0; i < g.dim(); ++i) {
                const Rational& c = b[static_cast<std::size_t>(i)];
                if (c.is_zero()) continue;
                const Rational offset = data ? data->offsets[static_cast<std::size_t>(i)] : Rational(0);
                if ((m - offset).is_integer()) out.modes.add_term(BaseMode{i, m}, c);
            }
            return out;
        }
        case TwistedModule::StepKind::Transport:
            return closed_form_mode(*module.parent(), module.tau_inverse() * b, m, l);
        case TwistedModule::StepKind::Inner: {
            const DeltaOperator& d = *module.delta();
            const JordanParts& parts = d.parts();
            const QMatrix adn = g.ad(parts.n);
            for (const auto& [lambda, comp] : eigen_components(g, parts.s, b)) {
                LieElt x = comp;
                for (int j = 0; j <= l && !all_zero(x); ++j) {
                    ModeExpr t = closed_form_mode(*module.parent(), x, m - lambda, l - j);
                    t *= pow(Rational(-1), j) / factorial(j);
                    out += t;
                    x = adn * x;
                }
            }
            if (m.is_zero() && l == 0) out.constant -= g.form(d.current(), b) * module.vacuum().level();
            return out;
        }
    }
    return out;
}

PBWVector apply_mode_expr(const TwistedModule& module, const ModeExpr& e, const PBWVector& w) {
    const TwistedModule& root = module.root();
    PBWVector out = w;
    out *= e.constant;
    for (const auto& [key, c] : e.modes) {
        PBWVector t = root.mode_data() ? root.mode_data()->act(key.first, key.second, w)
                                       : root.space().apply_mode(key.first, static_cast<int>(key.second.to_long()), w);
        t *= c;
        out += t;
    }
    return out;
}

int log_power_bound(const TwistedModule& module) {
    int bound = 0;
    for (const TwistedModule* m = &module; m; m = m->parent().get())
        if (m->kind() == TwistedModule::StepKind::Inner)
            bound += nilpotency_index(m->algebra(), m->delta()->parts().n) - 1;
    return bound;
}

ModeTable mode_table(const TwistedModule& module, const LieElt& b, const std::string& name, int range) {
    ModeTable t;
    t.generator = name;
    t.element = b;
    const long D = module.denominator();
    const int lmax = log_power_bound(module);
    for (long j = -range * D; j <= range * D; ++j) {
        const Rational m(j, D);
        for (int l = 0; l <= lmax; ++l) {
            ModeExpr e = closed_form_mode(module, b, m, l);
            if (!e.is_zero()) t.rows.push_back({m, l, std::move(e)});
        }
    }
    return t;
}

LogSeries<ModeExpr> derivative_series(const TwistedModule& module, const LieElt& b, int n, const Rational& lo,
                                      const Rational& hi) {
    const long D = module.denominator();
    const int lmax = log_power_bound(module);
    LogSeries<ModeExpr> s;
    const Rational top = hi + Rational(n);
    // exponents e = j/D in [lo, hi + n]; lower ones only feed exponents below lo
    const long jlo = Rational(lo * Rational(D)).floor().get_si();
    const long jhi = Rational(top * Rational(D)).floor().get_si() + 1;
    for (long j = jlo; j <= jhi; ++j) {
        const Rational e(j, D);
        if (e < lo || e > top) continue;
        for (int l = 0; l <= lmax; ++l) s.add_term(e, l, closed_form_mode(module, b, -e - Rational(1), l));
    }
    for (int k = 0; k < n; ++k) s = series_derivative(s);
    s *= Rational(1) / factorial(n);
    LogSeries<ModeExpr> out;
    for (const auto& [key, c] : s.terms())
        if (key.e >= lo && key.e <= hi) out.add_term(key.e, key.k, c);
    return out;
}

std::string format_mode_expr(const LieAlgebra& g, const ModeExpr& e) {
    std::string s;
    auto append = [&](const Rational& c, const std::string& body) {
        const bool neg = c.sign() < 0;
        const Rational a = neg ? -c : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (body.empty())
            s += a.str();
        else
            s += (a == Rational(1) ? "" : a.str() + "*") + body;
    };
    for (const auto& [key, c] : e.modes) append(c, g.name(key.first) + "(" + key.second.str() + ")");
    if (!e.constant.is_zero()) append(e.constant, "");
    return s.empty() ? "0" : s;
}

}  // namespace twistmod
