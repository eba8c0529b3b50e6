#include "twistmod/twisted_module.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "twistmod/eigen_split.hpp"
#include "twistmod/errors.hpp"
#include "twistmod/jordan.hpp"

namespace twistmod {

std::string_view grading_mode_name(GradingMode m) {
    switch (m) {
        case GradingMode::CmodZ: return "CmodZ";
        case GradingMode::C: return "C";
        case GradingMode::StronglyC: return "stronglyC";
    }
    return "CmodZ";
}

namespace {

bool all_zero(const LieElt& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); });
}

LieElt add(const LieElt& a, const LieElt& b) {
    LieElt out = a;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

CycPBWVector scale_to_cyc(const PBWVector& v, const CycScalar& z) {
    CycPBWVector out = to_cyc(v);
    out *= z;
    return out;
}

}  // namespace

Bigrading untwisted_grading(const InducedModule& w) {
    Bigrading b;
    for (int d = 0; d <= w.max_depth(); ++d) {
        GradedPiece p;
        p.weight = w.top_weight() + Rational(d);
        p.cls = Rational(0);
        for (const auto& m : w.basis(d)) p.basis.push_back(PBWVector::basis(m));
        b.pieces.push_back(std::move(p));
    }
    return b;
}

TwistedModulePtr TwistedModule::untwisted(InducedModulePtr vacuum, InducedModulePtr w) {
    std::shared_ptr<TwistedModule> m(new TwistedModule());
    m->y_ = std::make_shared<VertexOperators>(vacuum, w);
    m->s_total_ = vacuum->algebra().zero();
    m->n_total_ = vacuum->algebra().zero();
    m->grading_ = untwisted_grading(*w);
    m->v_ = std::move(vacuum);
    m->w_ = std::move(w);
    return m;
}

TwistedModulePtr TwistedModule::untwisted(InducedModulePtr w) {
    auto v = w->is_vacuum() ? w : InducedModule::vacuum(w->algebra_ptr(), w->level(), w->cutoff());
    return untwisted(std::move(v), std::move(w));
}

TwistedModulePtr TwistedModule::from_mode_data(InducedModulePtr vacuum, InducedModulePtr w, ModeData data) {
    const LieAlgebra& g = vacuum->algebra();
    if (static_cast<int>(data.offsets.size()) != g.dim() || !data.act)
        throw TwistError(ErrorCode::DomainError, "mode data needs one offset per basis element and an action");
    validate_automorphism(g, data.mu);
    std::shared_ptr<TwistedModule> m(new TwistedModule());
    long D = 1;
    for (const auto& o : data.offsets) D = lcm_long(D, o.den().get_si());
    m->denom_ = D;
    if (!data.mu.is_identity()) m->g_.push_back(data.mu);
    m->s_total_ = g.zero();
    m->n_total_ = g.zero();
    if (data.grading) {
        m->grading_ = *data.grading;
    } else {
        m->grading_.available = false;
        m->grading_.note = "mode data carries no bigrading";
    }
    m->data_ = std::move(data);
    m->v_ = std::move(vacuum);
    m->w_ = std::move(w);
    return m;
}

const TwistedModule& TwistedModule::root() const {
    const TwistedModule* m = this;
    while (m->parent_) m = m->parent_.get();
    return *m;
}

std::string TwistedModule::describe() const {
    switch (kind_) {
        case StepKind::Base:
            return data_ ? "data[" + data_->label + "]" : "untwisted";
        case StepKind::Inner:
            return parent_->describe() + " -> inner(" + algebra().format(delta_->current()) + ")";
        case StepKind::Transport:
            return parent_->describe() + " -> transport";
    }
    return "";
}

LogSeries<PBWVector> TwistedModule::base_op(const PBWVector& v, const PBWVector& w, const Rational& lo,
                                            const Rational& hi) const {
    if (y_) return y_->series(v, w, lo, hi);
    LogSeries<PBWVector> out;
    for (const auto& [mono, c] : v) {
        if (mono.ops.empty()) {
            if (lo <= Rational(0) && Rational(0) <= hi) {
                PBWVector t = w;
                t *= c;
                out.add_term(Rational(0), 0, t);
            }
            continue;
        }
        if (mono.ops.size() != 1 || mono.ops.front().mode != -1)
            throw TwistError(ErrorCode::Unsupported,
                             "mode-data base only provides Y(v, x) for v in span{1, b(-1)1}, not " +
                                 v_->format(mono));
        const int gen = mono.ops.front().gen;
        // exponent e = -r-1 with r in offset + Z
        const Rational shift = -data_->offsets[static_cast<std::size_t>(gen)] - Rational(1);
        const Rational first = shift + Rational((lo - shift).floor()) + ((lo - shift).is_integer() ? Rational(0) : Rational(1));
        for (Rational e = first; e <= hi; e += Rational(1)) {
            PBWVector t = data_->act(gen, -e - Rational(1), w);
            t *= c;
            out.add_term(e, 0, t);
        }
    }
    return out;
}

LogSeries<PBWVector> TwistedModule::vertex_op(const PBWVector& v, const PBWVector& w, const Rational& lo,
                                              const Rational& hi) const {
    switch (kind_) {
        case StepKind::Base:
            return base_op(v, w, lo, hi);
        case StepKind::Transport:
            return parent_->vertex_op(lift_lie_map(*v_, tau_inv_, v), w, lo, hi);
        case StepKind::Inner: {
            LogSeries<PBWVector> out;
            const LogSeries<PBWVector> dv = delta_->apply(v);
            for (const auto& [key, c] : dv.terms()) {
                const LogSeries<PBWVector> part = parent_->vertex_op(c, w, lo - key.e, hi - key.e);
                for (const auto& [k2, c2] : part.terms()) out.add_term(k2.e + key.e, k2.k + key.k, c2);
            }
            return out;
        }
    }
    return {};
}

LogSeries<CycPBWVector> TwistedModule::vertex_op(const CycPBWVector& v, const PBWVector& w, const Rational& lo,
                                                 const Rational& hi) const {
    LogSeries<CycPBWVector> out;
    const auto f = field();
    for (const auto& [key, part] : cyc_components(v)) {
        const CycScalar z = CycScalar::monomial(f, key.first, key.second);
        const LogSeries<PBWVector> s = vertex_op(part, w, lo, hi);
        for (const auto& [k, c] : s.terms()) out.add_term(k.e, k.k, scale_to_cyc(c, z));
    }
    return out;
}

PBWVector TwistedModule::coefficient(const PBWVector& v, const Rational& e, int k, const PBWVector& w) const {
    return vertex_op(v, w, e, e).coeff(e, k);
}

PBWVector TwistedModule::generator_mode(const LieElt& b, const Rational& m, int l, const PBWVector& w) const {
    return coefficient(weight_one_vector(*v_, b), -m - Rational(1), l, w);
}

PBWVector TwistedModule::zero_mode(const PBWVector& u, const PBWVector& w) const {
    return coefficient(u, Rational(-1), 0, w);
}

PBWVector TwistedModule::virasoro(int n, const PBWVector& w) const {
    return coefficient(v_->conformal_vector(), Rational(-n - 2), 0, w);
}

CycPBWVector TwistedModule::act_on_vacuum(const PBWVector& v) const {
    const LieAlgebra& g = algebra();
    const auto f = field();
    const int d = g.dim();
    // g(x_i) split into rational components z * x
    std::vector<std::vector<std::pair<CycScalar, LieElt>>> img(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        const CycVec x = apply_automorphism(g, g_, to_cyc(g.basis_vector(i)), f);
        std::map<std::pair<int, int>, LieElt> comps;
        for (int j = 0; j < d; ++j)
            for (const auto& [key, c] : x[static_cast<std::size_t>(j)].components()) {
                auto& e = comps[key];
                if (e.empty()) e = g.zero();
                e[static_cast<std::size_t>(j)] = c;
            }
        for (auto& [key, e] : comps)
            img[static_cast<std::size_t>(i)].emplace_back(CycScalar::monomial(f, key.first, key.second), std::move(e));
    }
    std::function<CycPBWVector(const Monomial&)> rec = [&](const Monomial& m) -> CycPBWVector {
        if (m.ops.empty()) return to_cyc(PBWVector::basis(m));
        const ModeOp op = m.ops.front();
        const CycPBWVector rest = rec(m.rest());
        CycPBWVector out;
        for (const auto& [key, r] : cyc_components(rest)) {
            const CycScalar zr = CycScalar::monomial(f, key.first, key.second);
            for (const auto& [z, x] : img[static_cast<std::size_t>(op.gen)])
                out += scale_to_cyc(v_->apply_mode(x, op.mode, r), z * zr);
        }
        return out;
    };
    CycPBWVector out;
    for (const auto& [m, c] : v) {
        CycPBWVector t = rec(m);
        t *= c;
        out += t;
    }
    return out;
}

PBWVector lift_lie_map(const InducedModule& vacuum, const QMatrix& m, const PBWVector& v) {
    std::function<PBWVector(const Monomial&)> rec = [&](const Monomial& mono) -> PBWVector {
        if (mono.ops.empty()) return PBWVector::basis(mono);
        const ModeOp op = mono.ops.front();
        return vacuum.apply_mode(m.column(op.gen), op.mode, rec(mono.rest()));
    };
    PBWVector out;
    for (const auto& [mono, c] : v) {
        PBWVector t = rec(mono);
        t *= c;
        out += t;
    }
    return out;
}

QMatrix chevalley_involution(const LieAlgebra& g) {
    const int n = g.rank() + 1;
    QMatrix d(n, n);
    for (int i = 0; i < n; ++i) d(i, i) = Rational(i % 2 == 0 ? 1 : -1);
    std::vector<QVector> cols;
    for (int i = 0; i < g.dim(); ++i)
        cols.push_back(g.coordinates(d * g.defining_matrix(i).transpose() * d * Rational(-1)));
    QMatrix t = QMatrix::from_columns(cols, g.dim());
    if (!is_algebra_automorphism(g, t))
        throw TwistError(ErrorCode::DomainError, "internal: Chevalley involution is not an automorphism");
    return t;
}

Bigrading regrade(const TwistedModule& module, const Bigrading& grading, const PBWVector& u, const Rational& kappa,
                  GradingMode mode) {
    Bigrading out;
    out.nilpotency = grading.nilpotency;
    out.truncated = grading.truncated;
    if (!grading.available) {
        out.available = false;
        out.note = grading.note;
        return out;
    }
    const InducedModule& w = module.space();
    const bool mod1 = mode == GradingMode::CmodZ;
    bool overflow = false;
    const LinearOp z = [&](const PBWVector& x) {
        bool over = false;
        PBWVector r = w.truncate(module.zero_mode(u, x), &over);
        overflow = overflow || over;
        return r;
    };
    using Key = std::tuple<Rational, Rational, std::vector<Rational>>;
    std::map<Key, std::vector<PBWVector>> merged;
    int nil = 0;
    for (const auto& piece : grading.pieces) {
        for (const auto& b : piece.basis) {
            if (!in_span(piece.basis, z(b))) {
                out.available = false;
                out.note = "zero mode of u does not preserve the piece of weight " + piece.weight.str() +
                           " and class " + piece.cls.str();
                return out;
            }
        }
        std::map<Rational, std::vector<PBWVector>> comps;
        for (const auto& b : piece.basis)
            for (auto& part : generalized_eigen_split(b, z)) {
                nil = std::max(nil, static_cast<int>(part.orbit.size()));
                comps[part.eigenvalue].push_back(std::move(part.orbit.front()));
            }
        for (auto& [beta, vs] : comps) {
            const Rational weight = piece.weight - beta + kappa / Rational(2);
            Rational cls = piece.cls + beta;
            std::vector<Rational> steps = piece.step_eigenvalues;
            steps.push_back(mod1 ? beta.frac() : beta);
            if (mod1) cls = cls.frac();
            auto& dst = merged[Key{weight, cls, steps}];
            dst.insert(dst.end(), vs.begin(), vs.end());
        }
    }
    for (auto& [key, vs] : merged) {
        GradedPiece p;
        p.weight = std::get<0>(key);
        p.cls = std::get<1>(key);
        p.step_eigenvalues = std::get<2>(key);
        p.basis = span_basis(vs);
        out.pieces.push_back(std::move(p));
    }
    out.nilpotency.push_back(nil);
    if (overflow) {
        out.truncated = true;
        out.note = "zero-mode images beyond the weight cutoff were dropped";
    }
    return out;
}

TwistedModulePtr make_twisted(const TwistedModulePtr& base, const LieElt& a, GradingMode mode, DeltaConvention conv) {
    const LieAlgebra& g = base->algebra();
    if (static_cast<int>(a.size()) != g.dim())
        throw TwistError(ErrorCode::DomainError, "element has wrong dimension");
    auto delta = DeltaOperator::make(base->vacuum_ptr(), a, conv);
    const long D = lcm_long(base->denominator(), delta->denominator());
    const CycVec fixed = apply_automorphism(g, base->automorphism(), to_cyc(a), cyclotomic_field(D));
    if (!(fixed == to_cyc(a)))
        throw TwistError(ErrorCode::NotFixed, "u = (" + g.format(a) + ")(-1)1 is not fixed by g");
    std::shared_ptr<TwistedModule> m(new TwistedModule());
    m->kind_ = TwistedModule::StepKind::Inner;
    m->v_ = base->vacuum_ptr();
    m->w_ = base->space_ptr();
    m->parent_ = base;
    m->delta_ = delta;
    m->g_ = base->automorphism();
    AutomorphismData f;
    if (!all_zero(delta->parts().s)) f.h = delta->parts().s;
    if (!all_zero(delta->parts().n)) f.n = delta->parts().n;
    if (!f.is_identity()) m->g_.push_back(std::move(f));
    m->denom_ = D;
    m->logs_ = base->has_log_terms() || !all_zero(delta->parts().n);
    m->s_total_ = add(base->semisimple_total(), delta->parts().s);
    m->n_total_ = add(base->nilpotent_total(), delta->parts().n);
    m->mode_ = mode;
    m->grading_ = regrade(*base, base->bigrading(), delta->u(), delta->kappa(), mode);
    return m;
}

TwistedModulePtr make_twisted(const TwistedModulePtr& base, const PBWVector& u, GradingMode mode) {
    if (!base->vacuum().sugawara(1, u).is_zero()) throw TwistError(ErrorCode::NotQuasiPrimary, "L(1)u != 0");
    return make_twisted(base, weight_one_element(base->vacuum(), u), mode);
}

TwistedModulePtr transport_tau(const TwistedModulePtr& base, const QMatrix& tau) {
    const LieAlgebra& g = base->algebra();
    if (tau.rows() != g.dim() || !is_algebra_automorphism(g, tau))
        throw TwistError(ErrorCode::DomainError, "tau is not an algebra automorphism");
    std::shared_ptr<TwistedModule> m(new TwistedModule());
    m->kind_ = TwistedModule::StepKind::Transport;
    m->v_ = base->vacuum_ptr();
    m->w_ = base->space_ptr();
    m->parent_ = base;
    m->tau_ = tau;
    m->tau_inv_ = tau.inverse();
    for (auto f : base->automorphism()) {
        f.tau = f.tau ? tau * *f.tau : tau;
        m->g_.push_back(std::move(f));
    }
    m->denom_ = base->denominator();
    m->logs_ = base->has_log_terms();
    m->s_total_ = tau * base->semisimple_total();
    m->n_total_ = tau * base->nilpotent_total();
    m->mode_ = base->grading_mode();
    m->grading_ = base->bigrading();
    return m;
}

}  // namespace twistmod
