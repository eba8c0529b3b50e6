#include "twistmod/induced_module.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

#include "twistmod/errors.hpp"

namespace twistmod {

std::shared_ptr<const InducedModule> InducedModule::build(LieAlgebraPtr g, const Rational& level, TopSpace top,
                                                          const Rational& cutoff) {
    if (level + g->dual_coxeter() == Rational(0))
        throw TwistError(ErrorCode::CriticalLevel,
                         "level " + level.str() + " equals -h^vee = " + (-g->dual_coxeter()).str());
    std::shared_ptr<InducedModule> m(new InducedModule());
    m->level_ = level;
    m->top_ = std::move(top);
    m->cutoff_ = cutoff;
    m->top_weight_ = m->top_.casimir / (Rational(2) * (level + g->dual_coxeter()));
    m->max_depth_ = static_cast<int>((cutoff - m->top_weight_).floor().get_si());
    for (int i = 0; i < g->dim(); ++i) m->gen_names_.push_back(g->name(i));
    const QMatrix& ginv = g->gram_inverse();
    for (int i = 0; i < g->dim(); ++i)
        for (int j = 0; j < g->dim(); ++j)
            if (!ginv(i, j).is_zero()) m->dual_pairs_.emplace_back(i, j, ginv(i, j));
    m->g_ = std::move(g);
    return m;
}

std::shared_ptr<const InducedModule> InducedModule::vacuum(LieAlgebraPtr g, const Rational& level,
                                                           const Rational& cutoff) {
    TopSpace t = make_top_space(*g, std::vector<int>(static_cast<std::size_t>(g->rank()), 0));
    return build(std::move(g), level, std::move(t), cutoff);
}

std::vector<Monomial> InducedModule::basis(int depth) const {
    std::vector<Monomial> out;
    if (depth < 0) return out;
    const int d = g_->dim();
    std::vector<ModeOp> cur;
    // ops are produced in normal order: each new op must not precede the previous one
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            for (int t = 0; t < top_.dim; ++t) out.push_back(Monomial{cur, t});
            return;
        }
        const int max_mode_abs = remaining;
        for (int a = 1; a <= max_mode_abs; ++a) {
            for (int gen = 0; gen < d; ++gen) {
                const ModeOp op{-a, gen};
                if (!cur.empty() && !normal_before(cur.back(), op)) continue;
                cur.push_back(op);
                rec(remaining - a);
                cur.pop_back();
            }
        }
    };
    rec(depth);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> InducedModule::basis_upto(int max) const {
    std::vector<Monomial> out;
    for (int d = 0; d <= max; ++d) {
        auto b = basis(d);
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

std::vector<long> InducedModule::graded_dims() const {
    std::vector<long> dims;
    for (int d = 0; d <= max_depth_; ++d) dims.push_back(static_cast<long>(basis(d).size()));
    return dims;
}

PBWVector InducedModule::apply_mode(int gen, int m, const Monomial& w) const {
    if (m > w.depth()) return PBWVector();
    ModeKey key{gen, m, w};
    {
        std::shared_lock lock(cache_mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    PBWVector result = compute_mode(gen, m, w);
    {
        std::unique_lock lock(cache_mutex_);
        cache_.emplace(std::move(key), result);
    }
    return result;
}

PBWVector InducedModule::compute_mode(int gen, int m, const Monomial& w) const {
    if (w.ops.empty()) {
        if (m > 0) return PBWVector();
        if (m == 0) {
            PBWVector out;
            const QMatrix& r = top_.rho[static_cast<std::size_t>(gen)];
            for (int s = 0; s < top_.dim; ++s)
                if (!r(s, w.top).is_zero()) out.add_term(Monomial{{}, s}, r(s, w.top));
            return out;
        }
        return PBWVector::basis(Monomial{{ModeOp{m, gen}}, w.top});
    }
    const ModeOp& x1 = w.ops.front();
    const ModeOp op{m, gen};
    if (m < 0 && normal_before(op, x1)) {
        Monomial p = w;
        p.ops.insert(p.ops.begin(), op);
        return PBWVector::basis(p);
    }
    // a(m) x1 rest = x1 a(m) rest + [a, x1](m + m1) rest + m (a, x1) l delta_{m+m1,0} rest
    const Monomial rest = w.rest();
    PBWVector out = apply_mode(x1.gen, x1.mode, apply_mode(gen, m, rest));
    const int mm = m + x1.mode;
    const LieElt& br = g_->bracket(gen, x1.gen);
    for (int k = 0; k < g_->dim(); ++k) {
        const Rational& c = br[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        PBWVector t = apply_mode(k, mm, rest);
        t *= c;
        out += t;
    }
    if (mm == 0) {
        const Rational c = Rational(m) * g_->form(gen, x1.gen) * level_;
        if (!c.is_zero()) out.add_term(rest, c);
    }
    return out;
}

PBWVector InducedModule::apply_mode(int gen, int m, const PBWVector& w) const {
    PBWVector out;
    for (const auto& [mono, c] : w) {
        PBWVector t = apply_mode(gen, m, mono);
        t *= c;
        out += t;
    }
    return out;
}

PBWVector InducedModule::apply_mode(const LieElt& a, int m, const PBWVector& w) const {
    PBWVector out;
    for (int i = 0; i < g_->dim(); ++i) {
        const Rational& c = a[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        PBWVector t = apply_mode(i, m, w);
        t *= c;
        out += t;
    }
    return out;
}

PBWVector InducedModule::apply_word(const std::vector<ModeOp>& word, const PBWVector& w) const {
    PBWVector cur = w;
    for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_mode(it->gen, it->mode, cur);
    return cur;
}

PBWVector InducedModule::sugawara(int n, const PBWVector& w) const {
    PBWVector out;
    for (const auto& [mono, coef] : w) {
        const int d = mono.depth();
        PBWVector acc;
        const PBWVector basis_w = PBWVector::basis(mono);
        for (const auto& [i, j, c] : dual_pairs_) {
            // :x_i(k) x_j(n-k): with the annihilation mode on the right
            for (int k = n - d; k <= -1; ++k) {
                PBWVector t = apply_mode(i, k, apply_mode(j, n - k, basis_w));
                t *= c;
                acc += t;
            }
            for (int k = 0; k <= d; ++k) {
                PBWVector t = apply_mode(j, n - k, apply_mode(i, k, basis_w));
                t *= c;
                acc += t;
            }
        }
        acc *= coef;
        out += acc;
    }
    out *= Rational(1) / (Rational(2) * (level_ + g_->dual_coxeter()));
    return out;
}

PBWVector InducedModule::conformal_vector() const {
    PBWVector out;
    const PBWVector one = vacuum_vector();
    for (const auto& [i, j, c] : dual_pairs_) {
        PBWVector t = apply_mode(i, -1, apply_mode(j, -1, one));
        t *= c;
        out += t;
    }
    out *= Rational(1) / (Rational(2) * (level_ + g_->dual_coxeter()));
    return out;
}

Rational InducedModule::central_charge() const {
    return level_ * Rational(g_->dim()) / (level_ + g_->dual_coxeter());
}

PBWVector InducedModule::truncate(const PBWVector& v, bool* overflow) const {
    PBWVector out;
    bool over = false;
    for (const auto& [m, c] : v) {
        if (m.depth() <= max_depth_) out.add_term(m, c);
        else over = true;
    }
    if (overflow) *overflow = over;
    return out;
}

std::string InducedModule::format(const PBWVector& v) const {
    return format_vector(v, gen_names_, top_.basis_names);
}

std::string InducedModule::format(const Monomial& m) const {
    return format_monomial(m, gen_names_, top_.basis_names);
}

std::size_t InducedModule::cache_size() const {
    std::shared_lock lock(cache_mutex_);
    return cache_.size();
}

}  // namespace twistmod
