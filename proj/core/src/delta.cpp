#include "twistmod/delta.hpp"

#include <mutex>

#include "twistmod/eigen_split.hpp"
#include "twistmod/errors.hpp"

namespace twistmod {

LieElt weight_one_element(const InducedModule& vacuum, const PBWVector& u) {
    LieElt a = vacuum.algebra().zero();
    for (const auto& [m, c] : u) {
        if (m.ops.size() != 1 || m.ops.front().mode != -1 || m.top != 0)
            throw TwistError(ErrorCode::DomainError,
                             "expected u = a(-1)1, found monomial " + vacuum.format(m));
        a[static_cast<std::size_t>(m.ops.front().gen)] += c;
    }
    return a;
}

PBWVector weight_one_vector(const InducedModule& vacuum, const LieElt& a) {
    return vacuum.apply_mode(a, -1, vacuum.vacuum_vector());
}

DeltaPtr DeltaOperator::make(InducedModulePtr vacuum, const PBWVector& u, DeltaConvention conv) {
    if (!vacuum->is_vacuum())
        throw TwistError(ErrorCode::DomainError, "Delta is defined on the vacuum module");
    const LieElt a = weight_one_element(*vacuum, u);
    if (!vacuum->sugawara(1, u).is_zero())
        throw TwistError(ErrorCode::NotQuasiPrimary, "L(1)u != 0");
    return make(std::move(vacuum), a, conv);
}

DeltaPtr DeltaOperator::make(InducedModulePtr vacuum, const LieElt& a, DeltaConvention conv) {
    if (!vacuum->is_vacuum())
        throw TwistError(ErrorCode::DomainError, "Delta is defined on the vacuum module");
    const LieAlgebra& g = vacuum->algebra();
    std::shared_ptr<DeltaOperator> d(new DeltaOperator());
    d->a_ = a;
    d->u_ = weight_one_vector(*vacuum, a);
    d->conv_ = conv;
    d->zero_ = d->u_.is_zero();
    if (!vacuum->sugawara(1, d->u_).is_zero())
        throw TwistError(ErrorCode::NotQuasiPrimary, "L(1)u != 0");
    d->parts_ = jordan_chevalley(g, a);
    d->denom_ = eigen_denominator(g, d->parts_.s);
    // Y_1(u) u = a(1) a(-1) 1
    const PBWVector k = vacuum->apply_mode(a, 1, d->u_);
    d->kappa_ = k.coeff(Monomial{});
    if (!(k - PBWVector(Monomial{}, d->kappa_)).is_zero())
        throw TwistError(ErrorCode::DomainError, "Y_1(u)u is not a multiple of the vacuum");
    d->v_ = std::move(vacuum);
    return d;
}

PBWVector DeltaOperator::zero_mode(const PBWVector& v) const { return v_->apply_mode(a_, 0, v); }

LogSeries<PBWVector> DeltaOperator::exponential_part(const PBWVector& v) const {
    // S w: -int_0^{-x} sum_{n>=1} a(n)w y^{-n-1} dy  (corrected)
    //      +int_0^{x}  sum_{n>=1} a(n)w y^{-n-1} dy  (pre-correction)
    auto s_op = [&](const PBWVector& w) {
        LogSeries<PBWVector> y;
        const int d = max_depth(w);
        for (int n = 1; n <= d; ++n) y.add_term(Rational(-n - 1), 0, v_->apply_mode(a_, n, w));
        LogSeries<PBWVector> integral = formal_integral_0_to_x(y);
        if (conv_ == DeltaConvention::Corrected) return -negate_variable(integral);
        return integral;
    };
    LogSeries<PBWVector> total = LogSeries<PBWVector>::term(Rational(0), 0, v);
    LogSeries<PBWVector> term = total;
    for (int k = 1; !term.is_zero(); ++k) {
        term = series_bind<PBWVector>(term, s_op);
        term *= Rational(1) / Rational(k);
        total += term;
    }
    return total;
}

LogSeries<PBWVector> DeltaOperator::apply(const Monomial& v) const {
    {
        std::shared_lock lock(mutex_);
        auto it = cache_.find(v);
        if (it != cache_.end()) return it->second;
    }
    LogSeries<PBWVector> out;
    if (zero_) {
        out.add_term(Rational(0), 0, PBWVector::basis(v));
    } else {
        const LinearOp a0 = [&](const PBWVector& w) { return zero_mode(w); };
        const int sign = conv_ == DeltaConvention::Corrected ? -1 : 1;
        const LogSeries<PBWVector> ex = exponential_part(PBWVector::basis(v));
        for (const auto& [key, c] : ex.terms()) {
            // x^{-a(0)} c = sum_lambda x^{-lambda} sum_j (-log x)^j / j! N^j c_lambda
            for (const auto& part : generalized_eigen_split(c, a0)) {
                for (std::size_t j = 0; j < part.orbit.size(); ++j) {
                    PBWVector t = part.orbit[j];
                    t *= pow(Rational(sign), static_cast<int>(j)) / factorial(static_cast<int>(j));
                    out.add_term(key.e + Rational(sign) * part.eigenvalue, key.k + static_cast<int>(j), t);
                }
            }
        }
    }
    std::unique_lock lock(mutex_);
    cache_.emplace(v, out);
    return out;
}

LogSeries<PBWVector> DeltaOperator::apply(const PBWVector& v) const {
    LogSeries<PBWVector> out;
    for (const auto& [m, c] : v) {
        LogSeries<PBWVector> t = apply(m);
        t *= c;
        out += t;
    }
    return out;
}

}  // namespace twistmod
