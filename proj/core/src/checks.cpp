#include "twistmod/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "twistmod/eigen_split.hpp"
#include "twistmod/errors.hpp"
#include "twistmod/jordan.hpp"

namespace twistmod {

std::string_view check_status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "pass";
        case CheckStatus::Fail: return "fail";
        case CheckStatus::Uncertifiable: return "uncertifiable";
    }
    return "unknown";
}

void CheckReport::fail(Witness w) {
    if (status == CheckStatus::Fail) return;
    status = CheckStatus::Fail;
    witness = std::move(w);
}

void CheckReport::uncertifiable(const std::string& why) {
    if (status == CheckStatus::Pass) status = CheckStatus::Uncertifiable;
    notes.push_back(why);
}

std::vector<PBWVector> basis_vectors(const InducedModule& m, int max_depth) {
    std::vector<PBWVector> out;
    for (const auto& mono : m.basis_upto(max_depth)) out.push_back(PBWVector::basis(mono));
    return out;
}

std::vector<PBWVector> generator_vectors(const InducedModule& vacuum) {
    std::vector<PBWVector> out;
    for (int i = 0; i < vacuum.algebra().dim(); ++i) out.push_back(vacuum.apply_mode(i, -1, vacuum.vacuum_vector()));
    return out;
}

namespace {

using Series = LogSeries<PBWVector>;
using CycSeries = LogSeries<CycPBWVector>;

bool all_zero(const LieElt& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); });
}

LieElt negated(LieElt a) {
    for (auto& c : a) c = -c;
    return a;
}

std::string fmt(const InducedModule& m, const PBWVector& v) { return m.format(v); }

std::string fmt(const InducedModule& m, const CycPBWVector& v) {
    if (v.is_zero()) return "0";
    std::string out;
    for (const auto& [key, part] : cyc_components(v)) {
        if (!out.empty()) out += " + ";
        std::string tag;
        if (key.first != 0) tag += "T^" + std::to_string(key.first);
        if (key.second != 0) tag += (tag.empty() ? "" : "*") + std::string("z^") + std::to_string(key.second);
        out += (tag.empty() ? "" : tag + "*") + "(" + m.format(part) + ")";
    }
    return out;
}

/// Compares two series coefficientwise; on mismatch records the first differing term.
template <typename V>
bool compare_series(CheckReport& rep, const LogSeries<V>& expected, const LogSeries<V>& actual,
                    const InducedModule& out_space, const std::string& v, const std::string& w,
                    const std::string& detail = {}) {
    ++rep.comparisons;
    if (expected == actual) return true;
    std::set<SeriesKey> keys;
    for (const auto& [k, c] : expected.terms()) keys.insert(k);
    for (const auto& [k, c] : actual.terms()) keys.insert(k);
    for (const auto& k : keys) {
        const V a = expected.coeff(k.e, k.k), b = actual.coeff(k.e, k.k);
        if (a == b) continue;
        rep.fail(Witness{v, w, k.e.str(), k.k, fmt(out_space, a), fmt(out_space, b), detail});
        return false;
    }
    return false;
}

bool compare_vectors(CheckReport& rep, const PBWVector& expected, const PBWVector& actual,
                     const InducedModule& out_space, const std::string& v, const std::string& w,
                     const std::string& exponent, int log_power, const std::string& detail = {}) {
    ++rep.comparisons;
    if (expected == actual) return true;
    rep.fail(Witness{v, w, exponent, log_power, fmt(out_space, expected), fmt(out_space, actual), detail});
    return false;
}

void describe_range(CheckReport& rep, const CheckRange& r) {
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    rep.parameters["window"] = "[" + r.lo.str() + ", " + r.hi.str() + "]";
}

Series delta_compose(const DeltaOperator& outer, const DeltaOperator& inner, const PBWVector& w) {
    return series_bind<PBWVector>(inner.apply(w), [&](const PBWVector& c) { return outer.apply(c); });
}

/// Coefficients of (log(1+y))^a up to y^tmax, for a = 0..amax.
std::vector<std::vector<Rational>> log_power_table(int amax, int tmax) {
    std::vector<Rational> lg(static_cast<std::size_t>(tmax + 1));
    for (int t = 1; t <= tmax; ++t) lg[static_cast<std::size_t>(t)] = Rational(t % 2 ? 1 : -1) / Rational(t);
    std::vector<std::vector<Rational>> out;
    std::vector<Rational> cur(static_cast<std::size_t>(tmax + 1));
    cur[0] = Rational(1);
    for (int a = 0; a <= amax; ++a) {
        out.push_back(cur);
        std::vector<Rational> next(static_cast<std::size_t>(tmax + 1));
        for (int i = 0; i <= tmax; ++i)
            for (int j = 1; i + j <= tmax; ++j)
                next[static_cast<std::size_t>(i + j)] += cur[static_cast<std::size_t>(i)] * lg[static_cast<std::size_t>(j)];
        cur = std::move(next);
    }
    return out;
}

/// Eigenvalue of ad_s on x, if x is an eigenvector.
std::optional<Rational> ad_eigenvalue(const LieAlgebra& g, const LieElt& s, const LieElt& x) {
    if (all_zero(x)) return std::nullopt;
    const LieElt y = s.empty() ? g.zero() : g.bracket(s, x);
    std::size_t i = 0;
    while (x[i].is_zero()) ++i;
    const Rational lambda = y[i] / x[i];
    for (std::size_t j = 0; j < x.size(); ++j)
        if (y[j] != lambda * x[j]) return std::nullopt;
    return lambda;
}

Rational class_of(const Rational& c, bool mod1) { return mod1 ? c.frac() : c; }

/// All m in (1/D)Z with |m| <= range.
std::vector<Rational> mode_grid(long denom, int range) {
    std::vector<Rational> out;
    for (long j = -range * denom; j <= range * denom; ++j) out.push_back(Rational(j) / Rational(denom));
    return out;
}

std::string mode_label(const LieAlgebra& g, const LieElt& b, const Rational& m) {
    return "(" + g.format(b) + ")(" + m.str() + ")";
}

/// Modes of x^g live in cls + Z; x must be an eigenvector of the semisimple twist data.
Rational mode_class(const TwistedModule& module, const LieElt& x) {
    const LieAlgebra& g = module.algebra();
    const auto lambda = ad_eigenvalue(g, module.semisimple_total(), x);
    if (!lambda)
        throw TwistError(ErrorCode::DomainError, g.format(x) + " is not an eigenvector of the semisimple twist data");
    Rational cls = *lambda;
    if (const auto& data = module.root().mode_data()) {
        int idx = -1;
        for (int i = 0; i < g.dim(); ++i) {
            if (x[static_cast<std::size_t>(i)].is_zero()) continue;
            if (idx >= 0) throw TwistError(ErrorCode::Unsupported, "mode classes over a data base need basis vectors");
            idx = i;
        }
        cls += data->offsets[static_cast<std::size_t>(idx)];
    }
    return cls.frac();
}

}  // namespace

// ---- Delta identities ----

CheckReport check_delta_finite(const DeltaOperator& d, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.finite";
    rep.parameters["u"] = d.module().algebra().format(d.current());
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const InducedModule& V = d.module();
    std::optional<Rational> lo, hi;
    int logs = 0;
    for (const auto& w : basis_vectors(V, r.max_weight)) {
        const Series s = d.apply(w);
        ++rep.comparisons;
        if (s.truncated()) {
            rep.fail(Witness{"", V.format(w), "", 0, "exact series", "truncated series", "Delta(x)w was truncated"});
            return rep;
        }
        for (const auto& [k, c] : s.terms()) {
            if (!lo || k.e < *lo) lo = k.e;
            if (!hi || k.e > *hi) hi = k.e;
            logs = std::max(logs, k.k);
        }
    }
    if (lo) rep.parameters["exponentRange"] = "[" + lo->str() + ", " + hi->str() + "]";
    rep.parameters["maxLogPower"] = std::to_string(logs);
    return rep;
}

CheckReport check_delta_conjugation(const DeltaOperator& d, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.conjugation";
    rep.parameters["u"] = d.module().algebra().format(d.current());
    rep.parameters["convention"] = d.convention() == DeltaConvention::Corrected ? "corrected" : "pre-correction";
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    rep.parameters["maxOutputWeight"] = std::to_string(r.max_output_weight);
    const InducedModule& V = d.module();
    const VertexOperators y(d.module_ptr(), d.module_ptr());
    const auto vs = basis_vectors(V, r.max_generator_weight);
    const auto ws = basis_vectors(V, r.max_weight);
    // terms of Delta(x)v have log power <= the nilpotency bound, j stays below the output range
    const int jcap = 2 * (r.max_output_weight + r.max_generator_weight + r.max_weight) + 8;
    const auto lg = log_power_table(16, jcap);
    for (const auto& v : vs) {
        const Series dv = d.apply(v);
        const int wv = max_depth(v);
        for (const auto& w : ws) {
            const Series dw = d.apply(w);
            const int ww = max_depth(w);
            for (int p = -(wv + ww); p <= r.max_output_weight - wv - ww; ++p) {
                // Delta(x) v_{-p-1} w
                const Series lhs = d.apply(y.mode(v, -p - 1, w));
                // coefficient of x2^p in Y(Delta(x + x2) v, x2) Delta(x) w
                Series rhs;
                for (const auto& [ke, c] : dv.terms()) {
                    const int dc = max_depth(c);
                    for (const auto& [kf, dd] : dw.terms()) {
                        const int jmax = p + dc + max_depth(dd);
                        if (jmax > jcap || ke.k > 16)
                            throw TwistError(ErrorCode::Unsupported, "conjugation check: expansion range exceeded");
                        for (int j = 0; j <= jmax; ++j) {
                            const PBWVector yv = y.mode(c, j - p - 1, dd);
                            if (yv.is_zero()) continue;
                            // (x + x2)^e log^r(x + x2) at x2^j
                            for (int a = 0; a <= ke.k; ++a) {
                                Rational coef;
                                for (int t = a; t <= j; ++t)
                                    coef += binomial(ke.e, j - t) * lg[static_cast<std::size_t>(a)][static_cast<std::size_t>(t)];
                                if (coef.is_zero()) continue;
                                coef *= binomial(Rational(ke.k), a);
                                PBWVector term = yv;
                                term *= coef;
                                rhs.add_term(ke.e - Rational(j) + kf.e, ke.k - a + kf.k, term);
                            }
                        }
                    }
                }
                if (!compare_series(rep, lhs, rhs, V, V.format(v), V.format(w),
                                    "x2^" + std::to_string(p) + " coefficient"))
                    return rep;
            }
        }
    }
    return rep;
}

CheckReport check_delta_l0(const DeltaOperator& d, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.l0";
    rep.parameters["u"] = d.module().algebra().format(d.current());
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const InducedModule& V = d.module();
    for (const auto& w : basis_vectors(V, r.max_weight)) {
        const Series s = d.apply(w);
        Series lhs = s.map<PBWVector>([&](const PBWVector& c) { return V.sugawara(0, c); });
        lhs -= d.apply(V.sugawara(0, w));
        Series rhs = series_derivative(s).shifted(Rational(1), 0);
        rhs += s.map<PBWVector>([&](const PBWVector& c) { return d.zero_mode(c); });
        if (!compare_series(rep, rhs, lhs, V, "", V.format(w), "[L(0), Delta(x)]w")) return rep;
    }
    return rep;
}

CheckReport check_delta_l_minus_1(const DeltaOperator& d, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.lMinus1";
    rep.parameters["u"] = d.module().algebra().format(d.current());
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const InducedModule& V = d.module();
    for (const auto& w : basis_vectors(V, r.max_weight)) {
        const Series s = d.apply(w);
        Series lhs = s.map<PBWVector>([&](const PBWVector& c) { return V.sugawara(-1, c); });
        lhs -= d.apply(V.sugawara(-1, w));
        const Series rhs = -series_derivative(s);
        if (!compare_series(rep, rhs, lhs, V, "", V.format(w), "[L(-1), Delta(x)]w")) return rep;
    }
    return rep;
}

CheckReport check_delta_zero(const InducedModulePtr& vacuum, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.zero";
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const auto d = DeltaOperator::make(vacuum, vacuum->algebra().zero());
    for (const auto& w : basis_vectors(*vacuum, r.max_weight))
        if (!compare_series(rep, Series::term(Rational(0), 0, w), d->apply(w), *vacuum, "0", vacuum->format(w)))
            return rep;
    return rep;
}

CheckReport check_delta_inverse(const InducedModulePtr& vacuum, const LieElt& a, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.inverse";
    rep.parameters["u"] = vacuum->algebra().format(a);
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const auto dp = DeltaOperator::make(vacuum, a);
    const auto dm = DeltaOperator::make(vacuum, negated(a));
    for (const auto& w : basis_vectors(*vacuum, r.max_weight)) {
        const Series id = Series::term(Rational(0), 0, w);
        if (!compare_series(rep, id, delta_compose(*dp, *dm, w), *vacuum, "", vacuum->format(w),
                            "Delta(u) Delta(-u)"))
            return rep;
        if (!compare_series(rep, id, delta_compose(*dm, *dp, w), *vacuum, "", vacuum->format(w),
                            "Delta(-u) Delta(u)"))
            return rep;
    }
    return rep;
}

CheckReport check_delta_additivity(const InducedModulePtr& vacuum, const LieElt& a, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.additivity";
    const LieAlgebra& g = vacuum->algebra();
    rep.parameters["u"] = g.format(a);
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const JordanParts parts = jordan_chevalley(g, a);
    rep.parameters["s"] = g.format(parts.s);
    rep.parameters["n"] = g.format(parts.n);
    ++rep.comparisons;
    if (!g.form(parts.s, parts.n).is_zero()) {
        rep.fail(Witness{g.format(parts.s), g.format(parts.n), "", 0, "0", g.form(parts.s, parts.n).str(), "(s, n)"});
        return rep;
    }
    ++rep.comparisons;
    if (!all_zero(g.bracket(parts.s, parts.n))) {
        rep.fail(Witness{g.format(parts.s), g.format(parts.n), "", 0, "0", g.format(g.bracket(parts.s, parts.n)),
                         "[s, n]"});
        return rep;
    }
    if (all_zero(parts.s) || all_zero(parts.n)) rep.notes.push_back("one Jordan-Chevalley part is zero");
    const auto da = DeltaOperator::make(vacuum, a);
    const auto ds = DeltaOperator::make(vacuum, parts.s);
    const auto dn = DeltaOperator::make(vacuum, parts.n);
    for (const auto& w : basis_vectors(*vacuum, r.max_weight)) {
        const Series full = da->apply(w);
        if (!compare_series(rep, full, delta_compose(*ds, *dn, w), *vacuum, "", vacuum->format(w),
                            "Delta(s) Delta(n)"))
            return rep;
        if (!compare_series(rep, full, delta_compose(*dn, *ds, w), *vacuum, "", vacuum->format(w),
                            "Delta(n) Delta(s)"))
            return rep;
    }
    return rep;
}

CheckReport check_delta_g_commutation(const TwistedModule& module, const DeltaOperator& d, const CheckRange& r) {
    CheckReport rep;
    rep.name = "delta.gCommutation";
    const LieAlgebra& g = module.algebra();
    rep.parameters["u"] = g.format(d.current());
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const auto field = module.field();
    if (!(apply_automorphism(g, module.automorphism(), to_cyc(d.current()), field) == to_cyc(d.current())))
        throw TwistError(ErrorCode::NotFixed, "u = (" + g.format(d.current()) + ")(-1)1 is not fixed by g");
    const InducedModule& V = module.vacuum();
    for (const auto& w : basis_vectors(V, r.max_weight)) {
        CycSeries lhs;
        const Series dw = d.apply(w);
        for (const auto& [k, c] : dw.terms()) lhs.add_term(k.e, k.k, module.act_on_vacuum(c));
        CycSeries rhs;
        for (const auto& [key, part] : cyc_components(module.act_on_vacuum(w))) {
            const CycScalar z = CycScalar::monomial(field, key.first, key.second);
            const Series dp = d.apply(part);
            for (const auto& [k, c] : dp.terms()) {
                CycPBWVector t = to_cyc(c);
                t *= z;
                rhs.add_term(k.e, k.k, t);
            }
        }
        if (!compare_series(rep, lhs, rhs, V, "", V.format(w), "g Delta(x) w vs Delta(x) g w")) return rep;
    }
    return rep;
}

std::vector<CheckReport> check_delta_identities(const TwistedModule& module, const LieElt& a, const CheckRange& r,
                                                DeltaConvention conv) {
    const auto d = DeltaOperator::make(module.vacuum_ptr(), a, conv);
    std::vector<CheckReport> out;
    out.push_back(check_delta_finite(*d, r));
    out.push_back(check_delta_conjugation(*d, r));
    out.push_back(check_delta_l0(*d, r));
    out.push_back(check_delta_l_minus_1(*d, r));
    CheckRange wider = r;
    wider.max_weight = r.max_weight + 1;
    out.push_back(check_delta_zero(module.vacuum_ptr(), wider));
    out.push_back(check_delta_inverse(module.vacuum_ptr(), a, wider));
    out.push_back(check_delta_additivity(module.vacuum_ptr(), a, r));
    out.push_back(check_delta_g_commutation(module, *d, r));
    return out;
}

// ---- twisted-module axioms ----

CheckReport check_equivariance(const TwistedModule& module, const CheckRange& r) {
    CheckReport rep;
    rep.name = "equivariance";
    describe_range(rep, r);
    const auto field = module.field();
    rep.parameters["D"] = std::to_string(field->order());
    const InducedModule& V = module.vacuum();
    const InducedModule& W = module.space();
    const auto vs = basis_vectors(V, r.max_generator_weight);
    for (const auto& v : vs) {
        const CycPBWVector gv = module.act_on_vacuum(v);
        for (const auto& w : basis_vectors(W, r.max_weight)) {
            const CycSeries ygv = module.vertex_op(gv, w, r.lo, r.hi);
            const CycSeries yv = module.vertex_op(to_cyc(v), w, r.lo, r.hi);
            for (long p = -1; p <= 1; ++p) {
                if (!compare_series(rep, branch_shift(yv, p, field), branch_shift(ygv, p + 1, field), W,
                                    V.format(v), W.format(w), "branch p=" + std::to_string(p)))
                    return rep;
            }
        }
    }
    return rep;
}

CheckReport check_commutator(const TwistedModule& module, const LieElt& a, const LieElt& b, const CheckRange& r) {
    if (module.has_log_terms())
        throw TwistError(ErrorCode::Unsupported, "commutator check needs a semisimple twist (no log terms)");
    CheckReport rep;
    rep.name = "commutator";
    const LieAlgebra& g = module.algebra();
    rep.parameters["a"] = g.format(a);
    rep.parameters["b"] = g.format(b);
    rep.parameters["modeRange"] = std::to_string(r.mode_range);
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const InducedModule& W = module.space();
    const Rational level = module.vacuum().level();
    const Rational ab = g.form(a, b) * level;
    const LieElt c = g.bracket(a, b);
    const auto full = mode_grid(module.denominator(), r.mode_range);
    const Rational ca = mode_class(module, a), cb = mode_class(module, b);
    rep.parameters["modeClasses"] = ca.str() + ", " + cb.str();
    std::vector<Rational> grid_a, grid_b;
    for (const auto& m : full) {
        if ((m - ca).is_integer()) grid_a.push_back(m);
        if ((m - cb).is_integer()) grid_b.push_back(m);
    }
    std::map<Rational, ModeExpr> cfa, cfb;
    auto closed = [&](std::map<Rational, ModeExpr>& cache, const LieElt& x, const Rational& m) -> const ModeExpr& {
        auto it = cache.find(m);
        if (it == cache.end()) it = cache.emplace(m, closed_form_mode(module, x, m, 0)).first;
        return it->second;
    };
    for (const auto& w : basis_vectors(W, r.max_weight)) {
        const std::string ws = W.format(w);
        for (const auto& m : grid_a) {
            const PBWVector aw = module.generator_mode(a, m, 0, w);
            const PBWVector aw_oracle = apply_mode_expr(module, closed(cfa, a, m), w);
            if (!compare_vectors(rep, aw_oracle, aw, W, mode_label(g, a, m), ws, (-m - Rational(1)).str(), 0,
                                 "series route vs closed-form table"))
                return rep;
            for (const auto& n : grid_b) {
                const PBWVector bw = module.generator_mode(b, n, 0, w);
                PBWVector lhs = module.generator_mode(a, m, 0, bw);
                lhs -= module.generator_mode(b, n, 0, aw);
                PBWVector rhs = module.generator_mode(c, m + n, 0, w);
                if ((m + n).is_zero()) {
                    PBWVector t = w;
                    t *= m * ab;
                    rhs += t;
                }
                const std::string label = "[" + mode_label(g, a, m) + ", " + mode_label(g, b, n) + "]";
                if (!compare_vectors(rep, rhs, lhs, W, label, ws, "", 0, "commutator relation")) return rep;
                PBWVector oracle = apply_mode_expr(module, closed(cfa, a, m),
                                                   apply_mode_expr(module, closed(cfb, b, n), w));
                oracle -= apply_mode_expr(module, closed(cfb, b, n), apply_mode_expr(module, closed(cfa, a, m), w));
                if (!compare_vectors(rep, oracle, lhs, W, label, ws, "", 0, "closed-form oracle")) return rep;
            }
        }
    }
    return rep;
}

std::vector<CheckReport> check_axioms(const TwistedModule& module, const CheckRange& r) {
    std::vector<CheckReport> out;
    const InducedModule& V = module.vacuum();
    const InducedModule& W = module.space();
    const auto ws = basis_vectors(W, r.max_weight);
    const auto vs = basis_vectors(V, r.max_generator_weight);

    {
        CheckReport rep;
        rep.name = "axioms.identity";
        describe_range(rep, r);
        for (const auto& w : ws) {
            Series expected;
            if (r.lo <= Rational(0) && Rational(0) <= r.hi) expected.add_term(Rational(0), 0, w);
            if (!compare_series(rep, expected, module.vertex_op(V.vacuum_vector(), w, r.lo, r.hi), W, "1",
                                W.format(w)))
                break;
        }
        out.push_back(std::move(rep));
    }

    {
        // Y(v, x)w has no terms below some exponent: widening the window downward adds nothing.
        CheckReport rep;
        rep.name = "axioms.lowerTruncation";
        describe_range(rep, r);
        std::optional<Rational> lowest;
        for (const auto& v : vs) {
            for (const auto& w : ws) {
                const Series near = module.vertex_op(v, w, r.lo - Rational(8), r.hi);
                const Series far = module.vertex_op(v, w, r.lo - Rational(16), r.hi);
                if (!compare_series(rep, near, far, W, V.format(v), W.format(w), "window widened by 8"))
                    goto done_truncation;
                for (const auto& [k, c] : far.terms())
                    if (!lowest || k.e < *lowest) lowest = k.e;
            }
        }
    done_truncation:
        if (lowest) rep.parameters["lowestExponent"] = lowest->str();
        out.push_back(std::move(rep));
    }

    {
        CheckReport rep;
        rep.name = "axioms.derivative";
        describe_range(rep, r);
        try {
            for (const auto& v : vs) {
                const PBWVector lv = V.sugawara(-1, v);
                for (const auto& w : ws) {
                    const Series d = series_derivative(module.vertex_op(v, w, r.lo + Rational(1), r.hi + Rational(1)));
                    Series lhs;
                    for (const auto& [k, c] : d.terms())
                        if (k.e <= r.hi) lhs.add_term(k.e, k.k, c);
                    if (!compare_series(rep, lhs, module.vertex_op(lv, w, r.lo, r.hi), W, V.format(v), W.format(w),
                                        "d/dx Y(v, x) vs Y(L(-1)v, x)"))
                        goto done_derivative;
                }
            }
        } catch (const TwistError& e) {
            if (e.code() != ErrorCode::Unsupported) throw;
            rep.uncertifiable(e.what());
        }
    done_derivative:
        out.push_back(std::move(rep));
    }

    const Bigrading& bg = module.bigrading();
    {
        CheckReport rep;
        rep.name = "axioms.l0Grading";
        rep.parameters["maxWeight"] = std::to_string(r.max_weight);
        if (!bg.available) {
            rep.uncertifiable("bigrading unavailable: " + bg.note);
        } else {
            try {
                int kmax_found = 0;
                const int kcap = 2 * r.max_weight + 4;
                for (const auto& piece : bg.pieces) {
                    for (const auto& b : piece.basis) {
                        if (max_depth(b) > r.max_weight) continue;
                        PBWVector x = b;
                        int k = 0;
                        while (!x.is_zero() && k <= kcap) {
                            PBWVector y = module.virasoro(0, x);
                            PBWVector t = x;
                            t *= piece.weight;
                            y -= t;
                            x = W.truncate(y);
                            ++k;
                        }
                        ++rep.comparisons;
                        if (!x.is_zero()) {
                            rep.fail(Witness{"omega", W.format(b), "", 0, "(L(0) - " + piece.weight.str() + ")^K = 0",
                                             W.format(x), "no nilpotency order found"});
                            break;
                        }
                        kmax_found = std::max(kmax_found, k);
                    }
                    if (!rep.passed()) break;
                }
                rep.parameters["K"] = std::to_string(kmax_found);
                if (bg.truncated) rep.notes.push_back("images beyond the weight cutoff were dropped");
            } catch (const TwistError& e) {
                if (e.code() != ErrorCode::Unsupported) throw;
                rep.uncertifiable(e.what());
            }
        }
        out.push_back(std::move(rep));
    }

    {
        CheckReport rep;
        rep.name = "axioms.gGrading";
        rep.parameters["maxWeight"] = std::to_string(r.max_weight);
        const TwistedModule* inner = &module;
        while (inner && inner->kind() != TwistedModule::StepKind::Inner) inner = inner->parent().get();
        if (!bg.available) {
            rep.uncertifiable("bigrading unavailable: " + bg.note);
        } else if (!inner) {
            rep.parameters["Lambda"] = "1";
            rep.notes.push_back("no inner step: g-grading is the base grading");
        } else {
            const TwistedModule& parent = *inner->parent();
            const PBWVector u = inner->delta()->u();
            const bool mod1 = module.grading_mode() == GradingMode::CmodZ;
            const LinearOp z = [&](const PBWVector& x) { return W.truncate(parent.zero_mode(u, x)); };
            int lambda = 1;
            for (const auto& piece : bg.pieces) {
                for (const auto& b : piece.basis) {
                    if (max_depth(b) > r.max_weight) continue;
                    for (const auto& part : generalized_eigen_split(b, z)) {
                        ++rep.comparisons;
                        lambda = std::max(lambda, static_cast<int>(part.orbit.size()));
                        const Rational expected = piece.step_eigenvalues.back();
                        if (class_of(part.eigenvalue, mod1) != expected) {
                            rep.fail(Witness{V.format(u), W.format(b), "", 0, expected.str(),
                                             part.eigenvalue.str(), "zero-mode eigenvalue vs piece class"});
                            break;
                        }
                    }
                    if (!rep.passed()) break;
                }
                if (!rep.passed()) break;
            }
            rep.parameters["Lambda"] = std::to_string(lambda);
            if (bg.truncated) rep.notes.push_back("images beyond the weight cutoff were dropped");
        }
        out.push_back(std::move(rep));
    }
    return out;
}

CheckReport check_mode_table_oracle(const TwistedModule& module, const CheckRange& r) {
    CheckReport rep;
    rep.name = "modeTable.oracle";
    rep.parameters["modeRange"] = std::to_string(r.mode_range);
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const LieAlgebra& g = module.algebra();
    const InducedModule& V = module.vacuum();
    const InducedModule& W = module.space();
    const int lmax = log_power_bound(module);
    rep.parameters["maxLogPower"] = std::to_string(lmax);
    const auto grid = mode_grid(module.denominator(), r.mode_range);
    const Rational R(r.mode_range);
    const auto ws = basis_vectors(W, r.max_weight);
    for (int i = 0; i < g.dim(); ++i) {
        const LieElt b = g.basis_vector(i);
        const PBWVector bv = weight_one_vector(V, b);
        std::map<std::pair<Rational, int>, ModeExpr> table;
        for (const auto& m : grid)
            for (int l = 0; l <= lmax; ++l) table.emplace(std::make_pair(m, l), closed_form_mode(module, b, m, l));
        for (const auto& w : ws) {
            const Series s = module.vertex_op(bv, w, -R - Rational(1), R - Rational(1));
            for (const auto& [k, c] : s.terms()) {
                ++rep.comparisons;
                if (!table.count({-k.e - Rational(1), k.k})) {
                    rep.fail(Witness{g.name(i), W.format(w), k.e.str(), k.k, "0", W.format(c),
                                     "term outside the closed-form table"});
                    return rep;
                }
            }
            for (const auto& [key, expr] : table) {
                const Rational e = -key.first - Rational(1);
                if (!compare_vectors(rep, apply_mode_expr(module, expr, w), s.coeff(e, key.second), W, g.name(i),
                                     W.format(w), e.str(), key.second, format_mode_expr(g, expr)))
                    return rep;
            }
        }
    }
    return rep;
}

CheckReport check_derivative_table(const TwistedModule& module, int n, const CheckRange& r) {
    CheckReport rep;
    rep.name = "modeTable.derivative";
    rep.parameters["n"] = std::to_string(n);
    describe_range(rep, r);
    const LieAlgebra& g = module.algebra();
    const InducedModule& V = module.vacuum();
    const InducedModule& W = module.space();
    try {
        for (int i = 0; i < g.dim(); ++i) {
            const LieElt b = g.basis_vector(i);
            const PBWVector bv = V.apply_mode(i, -n - 1, V.vacuum_vector());
            const LogSeries<ModeExpr> table = derivative_series(module, b, n, r.lo, r.hi);
            for (const auto& w : basis_vectors(W, r.max_weight)) {
                Series expected;
                for (const auto& [k, e] : table.terms()) expected.add_term(k.e, k.k, apply_mode_expr(module, e, w));
                if (!compare_series(rep, expected, module.vertex_op(bv, w, r.lo, r.hi), W, V.format(bv), W.format(w)))
                    return rep;
            }
        }
    } catch (const TwistError& e) {
        if (e.code() != ErrorCode::Unsupported) throw;
        rep.uncertifiable(e.what());
    }
    return rep;
}

CheckReport check_l0_shift(const TwistedModule& module, const CheckRange& r) {
    if (module.kind() != TwistedModule::StepKind::Inner)
        throw TwistError(ErrorCode::DomainError, "L(0) shift check needs an inner twist step");
    CheckReport rep;
    rep.name = "l0Shift";
    const auto& d = *module.delta();
    const TwistedModule& parent = *module.parent();
    rep.parameters["u"] = module.algebra().format(d.current());
    rep.parameters["kappa"] = d.kappa().str();
    rep.parameters["maxWeight"] = std::to_string(r.max_weight);
    const InducedModule& W = module.space();
    for (const auto& w : basis_vectors(W, r.max_weight)) {
        PBWVector expected = parent.virasoro(0, w);
        expected -= parent.zero_mode(d.u(), w);
        PBWVector t = w;
        t *= d.kappa() / Rational(2);
        expected += t;
        if (!compare_vectors(rep, expected, module.virasoro(0, w), W, "L(0)", W.format(w), "-2", 0)) return rep;
    }
    return rep;
}

namespace {

bool compare_modules(CheckReport& rep, const TwistedModule& expected, const TwistedModule& actual,
                     const CheckRange& r, bool with_omega, const std::string& detail) {
    const InducedModule& V = expected.vacuum();
    const InducedModule& W = expected.space();
    auto vs = basis_vectors(V, r.max_generator_weight);
    if (with_omega) vs.push_back(V.conformal_vector());
    for (const auto& v : vs)
        for (const auto& w : basis_vectors(W, r.max_weight))
            if (!compare_series(rep, expected.vertex_op(v, w, r.lo, r.hi), actual.vertex_op(v, w, r.lo, r.hi), W,
                                V.format(v), W.format(w), detail))
                return false;
    return true;
}

}  // namespace

CheckReport check_involution(const TwistedModulePtr& module, const LieElt& a, const CheckRange& r) {
    CheckReport rep;
    rep.name = "involution";
    rep.parameters["u"] = module->algebra().format(a);
    describe_range(rep, r);
    const auto there = make_twisted(module, a, module->grading_mode());
    const auto back = make_twisted(there, negated(a), module->grading_mode());
    compare_modules(rep, *module, *back, r, true, "Delta(-u) after Delta(u)");
    return rep;
}

CheckReport check_chain_additivity(const TwistedModulePtr& module, const LieElt& a, const CheckRange& r) {
    CheckReport rep;
    rep.name = "chainAdditivity";
    const LieAlgebra& g = module->algebra();
    const JordanParts parts = jordan_chevalley(g, a);
    rep.parameters["u"] = g.format(a);
    rep.parameters["s"] = g.format(parts.s);
    rep.parameters["n"] = g.format(parts.n);
    describe_range(rep, r);
    const auto one = make_twisted(module, a, module->grading_mode());
    const auto two = make_twisted(make_twisted(module, parts.s, module->grading_mode()), parts.n, module->grading_mode());
    compare_modules(rep, *one, *two, r, true, "twist by s + n vs s then n");
    return rep;
}

CheckReport check_bigrading_compatibility(const TwistedModule& module, const CheckRange& r) {
    CheckReport rep;
    rep.name = "bigradingCompatibility";
    describe_range(rep, r);
    const Bigrading& bg = module.bigrading();
    if (!bg.available) {
        rep.uncertifiable("bigrading unavailable: " + bg.note);
        return rep;
    }
    if (bg.truncated) {
        rep.uncertifiable("bigrading computed with truncated zero modes");
        return rep;
    }
    const LieAlgebra& g = module.algebra();
    const InducedModule& V = module.vacuum();
    const InducedModule& W = module.space();
    const bool mod1 = module.grading_mode() == GradingMode::CmodZ;
    std::map<Rational, SpanReducer> by_class;
    for (const auto& piece : bg.pieces)
        for (const auto& b : piece.basis) by_class[piece.cls].insert(b);
    const auto& data = module.root().mode_data();
    long skipped = 0;
    for (int i = 0; i < g.dim(); ++i) {
        const auto lambda = ad_eigenvalue(g, module.semisimple_total(), g.basis_vector(i));
        if (!lambda) {
            rep.notes.push_back(g.name(i) + " is not an eigenvector of the semisimple twist data; skipped");
            continue;
        }
        Rational shift = *lambda;
        if (data) shift += data->offsets[static_cast<std::size_t>(i)];
        const PBWVector bv = V.apply_mode(i, -1, V.vacuum_vector());
        for (const auto& piece : bg.pieces) {
            const Rational target = class_of(piece.cls + shift, mod1);
            const auto it = by_class.find(target);
            for (const auto& w : piece.basis) {
                if (max_depth(w) > r.max_weight) continue;
                const Series yw = module.vertex_op(bv, w, r.lo, r.hi);
                for (const auto& [k, c] : yw.terms()) {
                    bool overflow = false;
                    (void)W.truncate(c, &overflow);
                    if (overflow) {
                        ++skipped;
                        continue;
                    }
                    ++rep.comparisons;
                    if (it == by_class.end() || !it->second.contains(c)) {
                        rep.fail(Witness{g.name(i), W.format(w), k.e.str(), k.k, "class " + target.str(), W.format(c),
                                         "coefficient outside the expected class"});
                        return rep;
                    }
                }
            }
        }
    }
    if (skipped) rep.notes.push_back(std::to_string(skipped) + " coefficients beyond the weight cutoff skipped");
    return rep;
}

CheckReport check_grading_restriction(const TwistedModule& module, int kmax) {
    CheckReport rep;
    rep.name = "gradingRestriction";
    rep.parameters["kmax"] = std::to_string(kmax);
    rep.parameters["gradingMode"] = std::string(grading_mode_name(module.grading_mode()));
    const Bigrading& bg = module.bigrading();
    const LieAlgebra& g = module.algebra();
    const InducedModule& W = module.space();
    if (!bg.available) {
        rep.uncertifiable("bigrading unavailable: " + bg.note);
        return rep;
    }
    if (module.has_log_terms()) {
        rep.uncertifiable("twist has log terms; only semisimple chains are certified");
        return rep;
    }
    const bool mod1 = module.grading_mode() == GradingMode::CmodZ;
    bool non_monomial = false;
    const int mmax = std::max(1, W.max_depth());
    const auto& data = module.root().mode_data();
    if (data) {
        rep.uncertifiable("grading restriction scan needs an untwisted base");
        return rep;
    }
    for (int m = 1; m <= mmax; ++m) {
        for (int i = 0; i < g.dim(); ++i) {
            const auto lambda = ad_eigenvalue(g, module.semisimple_total(), g.basis_vector(i));
            if (!lambda) {
                non_monomial = true;
                continue;
            }
            const Rational step = Rational(m) - *lambda;
            const bool same_class = mod1 ? lambda->is_integer() : lambda->is_zero();
            if (step > Rational(0) || !same_class) continue;
            // candidate family b(-m)^k top: confirm the weights on the L(0) series route
            std::vector<Rational> weights;
            PBWVector x = W.top_vector(0);
            bool eigen = true;
            for (int k = 0; k <= kmax && eigen; ++k) {
                if (k > 0) x = W.apply_mode(i, -m, x);
                if (x.is_zero()) {
                    eigen = false;
                    break;
                }
                const PBWVector l0 = module.virasoro(0, x);
                const Monomial lead = x.begin()->first;
                const Rational c = l0.coeff(lead) / x.coeff(lead);
                PBWVector t = x;
                t *= c;
                if (!(l0 == t)) eigen = false;
                weights.push_back(c);
            }
            if (!eigen) {
                rep.notes.push_back("family " + g.name(i) + "(" + std::to_string(-m) + ")^k is not an L(0) eigenfamily");
                continue;
            }
            bool confirmed = true;
            for (std::size_t k = 0; k < weights.size(); ++k)
                if (weights[k] != weights[0] + Rational(static_cast<long>(k)) * step) confirmed = false;
            if (!confirmed) continue;
            std::ostringstream ws;
            for (std::size_t k = 0; k < weights.size(); ++k) ws << (k ? ", " : "") << weights[k].str();
            const std::string fam = g.name(i) + "(" + std::to_string(-m) + ")^k " + W.format(W.top_vector(0));
            rep.parameters["family"] = fam;
            rep.parameters["weights"] = ws.str();
            rep.fail(Witness{fam, "", "", 0,
                             step.is_zero() ? "finitely many vectors per (weight, class)" : "weights bounded below",
                             "weights " + ws.str() + " for k = 0.." + std::to_string(kmax),
                             step.is_zero() ? "infinitely many vectors of weight " + weights[0].str() +
                                                  " in one class"
                                            : "weights unbounded below within one class"});
            return rep;
        }
    }
    if (non_monomial) {
        rep.uncertifiable("twist data not diagonal on the Chevalley basis; no counterexample family found");
        return rep;
    }
    rep.parameters["certifiedUpToWeight"] = W.cutoff().str();
    rep.notes.push_back("no counterexample family; certified up to weight " + W.cutoff().str());
    return rep;
}

namespace {

std::vector<PBWVector> generated_submodule(const TwistedModule& module, const std::vector<PBWVector>& seeds,
                                           bool& truncated) {
    const InducedModule& W = module.space();
    const auto gens = generator_vectors(module.vacuum());
    const Rational R(W.max_depth() + 3);
    SpanReducer span;
    std::vector<PBWVector> queue;
    auto push = [&](const PBWVector& v) {
        bool over = false;
        const PBWVector t = W.truncate(v, &over);
        truncated = truncated || over;
        if (span.insert(t)) queue.push_back(t);
    };
    for (const auto& s : seeds) push(s);
    while (!queue.empty()) {
        const PBWVector x = queue.back();
        queue.pop_back();
        for (const auto& b : gens) {
            const Series y = module.vertex_op(b, x, -R - Rational(1), R - Rational(1));
            for (const auto& [k, c] : y.terms()) push(c);
        }
    }
    return span.basis();
}

}  // namespace

CheckReport check_submodule_transport(const TwistedModule& before, const TwistedModule& after,
                                      const std::vector<PBWVector>& seeds, const CheckRange& r) {
    CheckReport rep;
    rep.name = "submoduleTransport";
    rep.parameters["seeds"] = std::to_string(seeds.size());
    (void)r;
    const InducedModule& W = before.space();
    bool truncated = false;
    const auto a = generated_submodule(before, seeds, truncated);
    const auto b = generated_submodule(after, seeds, truncated);
    rep.parameters["dimBefore"] = std::to_string(a.size());
    rep.parameters["dimAfter"] = std::to_string(b.size());
    if (truncated) rep.notes.push_back("closure computed within the weight cutoff");
    SpanReducer sa, sb;
    for (const auto& v : a) sa.insert(v);
    for (const auto& v : b) sb.insert(v);
    for (const auto& v : b) {
        ++rep.comparisons;
        if (!sa.contains(v)) {
            rep.fail(Witness{"", W.format(v), "", 0, "in submodule before twisting", "not contained", ""});
            return rep;
        }
    }
    for (const auto& v : a) {
        ++rep.comparisons;
        if (!sb.contains(v)) {
            rep.fail(Witness{"", W.format(v), "", 0, "in submodule after twisting", "not contained", ""});
            return rep;
        }
    }
    return rep;
}

// ---- functor on maps ----

std::optional<Witness> find_intertwining_failure(const TwistedModule& m1, const TwistedModule& m2, const ModuleMap& f,
                                                 const CheckRange& r) {
    const InducedModule& V = m1.vacuum();
    std::vector<PBWVector> vs{V.vacuum_vector()};
    for (auto& g : generator_vectors(V)) vs.push_back(std::move(g));
    CheckReport scratch;
    for (const auto& v : vs)
        for (const auto& w : basis_vectors(m1.space(), r.max_weight)) {
            const Series lhs = m1.vertex_op(v, w, r.lo, r.hi).map<PBWVector>(f.apply);
            const Series rhs = m2.vertex_op(v, f.apply(w), r.lo, r.hi);
            if (!compare_series(scratch, rhs, lhs, m2.space(), V.format(v), m1.space().format(w),
                                "f Y_1(v, x) w vs Y_2(v, x) f w"))
                return scratch.witness;
        }
    return std::nullopt;
}

CheckReport check_functor(const TwistedModulePtr& m1, const TwistedModulePtr& m2, const ModuleMap& f,
                          const LieElt& a, const CheckRange& r) {
    if (auto w = find_intertwining_failure(*m1, *m2, f, r))
        throw TwistError(ErrorCode::NotIntertwining, f.name + " is not a module map: " + w->detail + " at v=" + w->v +
                                                         ", w=" + w->w);
    CheckReport rep;
    rep.name = "functor";
    rep.parameters["map"] = f.name;
    rep.parameters["u"] = m1->algebra().format(a);
    describe_range(rep, r);
    const auto t1 = make_twisted(m1, a), t2 = make_twisted(m2, a);
    ++rep.comparisons;
    if (auto w = find_intertwining_failure(*t1, *t2, f, r)) {
        w->detail = "twisted: " + w->detail;
        rep.fail(*w);
        return rep;
    }
    const LieElt na = negated(a);
    const auto b1 = make_twisted(t1, na), b2 = make_twisted(t2, na);
    if (!compare_modules(rep, *m1, *b1, r, false, "Delta(-u) Delta(u) on the source")) return rep;
    if (!compare_modules(rep, *m2, *b2, r, false, "Delta(-u) Delta(u) on the target")) return rep;
    const auto c1 = make_twisted(make_twisted(m1, na), a);
    if (!compare_modules(rep, *m1, *c1, r, false, "Delta(u) Delta(-u) on the source")) return rep;
    ++rep.comparisons;
    if (auto w = find_intertwining_failure(*b1, *b2, f, r)) {
        w->detail = "twisted back: " + w->detail;
        rep.fail(*w);
    }
    return rep;
}

}  // namespace twistmod
