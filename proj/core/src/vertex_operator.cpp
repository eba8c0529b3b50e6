#include "twistmod/vertex_operator.hpp"

#include <mutex>

#include "twistmod/errors.hpp"

namespace twistmod {

VertexOperators::VertexOperators(InducedModulePtr vacuum, InducedModulePtr target)
    : v_(std::move(vacuum)), w_(std::move(target)) {
    if (!v_->is_vacuum())
        throw TwistError(ErrorCode::Unsupported, "vertex operators need the vacuum module as source");
    if (v_->algebra_ptr() != w_->algebra_ptr() || v_->level() != w_->level())
        throw TwistError(ErrorCode::DomainError, "vacuum and target modules differ in algebra or level");
}

PBWVector VertexOperators::mode(const Monomial& v, int n, const Monomial& w) const {
    if (n > v.depth() + w.depth() - 1) return PBWVector();
    Key key{v, n, w};
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }
    PBWVector r = compute(v, n, w);
    std::unique_lock lock(mutex_);
    cache_.emplace(std::move(key), r);
    return r;
}

PBWVector VertexOperators::compute(const Monomial& v, int n, const Monomial& w) const {
    if (v.ops.empty()) return n == -1 ? PBWVector::basis(w) : PBWVector();
    const ModeOp a = v.ops.front();
    const int m = -a.mode;
    const Monomial vp = v.rest();
    const int pv = vp.depth();
    const int dw = w.depth();
    const PBWVector wv = PBWVector::basis(w);
    PBWVector out;
    // a(-m-j) v'_{n+j} w
    for (int j = 0; n + j <= pv + dw - 1; ++j) {
        const PBWVector inner = mode(vp, n + j, w);
        if (inner.is_zero()) continue;
        PBWVector t = w_->apply_mode(a.gen, -m - j, inner);
        t *= binomial(Rational(m + j - 1), j);
        out += t;
    }
    // -(-1)^m v'_{n-m-j} a(j) w
    const Rational sign(m % 2 == 0 ? -1 : 1);
    for (int j = 0; j <= dw; ++j) {
        const PBWVector aw = w_->apply_mode(a.gen, j, wv);
        if (aw.is_zero()) continue;
        PBWVector t;
        for (const auto& [mono, c] : aw) {
            PBWVector s = mode(vp, n - m - j, mono);
            s *= c;
            t += s;
        }
        t *= sign * binomial(Rational(m + j - 1), j);
        out += t;
    }
    return out;
}

PBWVector VertexOperators::mode(const PBWVector& v, int n, const PBWVector& w) const {
    PBWVector out;
    for (const auto& [mv, cv] : v)
        for (const auto& [mw, cw] : w) {
            PBWVector t = mode(mv, n, mw);
            t *= cv * cw;
            out += t;
        }
    return out;
}

LogSeries<PBWVector> VertexOperators::series(const PBWVector& v, const PBWVector& w, const Rational& lo,
                                             const Rational& hi) const {
    LogSeries<PBWVector> out;
    if (v.is_zero() || w.is_zero()) return out;
    const int top_n = max_depth(v) + max_depth(w) - 1;
    // exponent e = -n-1 in [lo, hi], e integral
    const long e_lo = Rational(lo.floor()) == lo ? lo.to_long() : static_cast<long>(lo.floor().get_si()) + 1;
    const long e_hi = static_cast<long>(hi.floor().get_si());
    for (long e = std::max<long>(e_lo, -top_n - 1); e <= e_hi; ++e) {
        const int n = static_cast<int>(-e - 1);
        PBWVector c = mode(v, n, w);
        out.add_term(Rational(e), 0, c);
    }
    return out;
}

std::size_t VertexOperators::cache_size() const {
    std::shared_lock lock(mutex_);
    return cache_.size();
}

}  // namespace twistmod
