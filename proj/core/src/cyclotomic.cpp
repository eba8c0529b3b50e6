#include "twistmod/cyclotomic.hpp"

#include <mutex>
#include <sstream>

#include "twistmod/errors.hpp"

namespace twistmod {

CyclotomicField::CyclotomicField(long order) : order_(order), phi_(cyclotomic_polynomial(order)) {}

std::vector<Rational> CyclotomicField::reduce(const QPoly& p) const {
    QPoly r = p % phi_;
    std::vector<Rational> out(static_cast<std::size_t>(degree()));
    for (int i = 0; i <= r.degree(); ++i) out[static_cast<std::size_t>(i)] = r[i];
    return out;
}

std::vector<Rational> CyclotomicField::zeta_power(long k) const {
    long e = k % order_;
    if (e < 0) e += order_;
    std::vector<Rational> mono(static_cast<std::size_t>(e + 1));
    mono[static_cast<std::size_t>(e)] = Rational(1);
    return reduce(QPoly(std::move(mono)));
}

CyclotomicFieldPtr cyclotomic_field(long order) {
    static std::mutex mu;
    static std::map<long, CyclotomicFieldPtr> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[order];
    if (!slot) slot = std::make_shared<const CyclotomicField>(order);
    return slot;
}

CycScalar::CycScalar(const Rational& r) {
    if (!r.is_zero()) coeffs_[0] = {r};
}

CycScalar::CycScalar(CyclotomicFieldPtr field, const Rational& r) : field_(std::move(field)) {
    if (!r.is_zero()) {
        std::vector<Rational> v(static_cast<std::size_t>(field_->degree()));
        v[0] = r;
        coeffs_[0] = std::move(v);
    }
}

CycScalar CycScalar::zeta(CyclotomicFieldPtr field, long k) {
    CycScalar out;
    out.field_ = std::move(field);
    out.coeffs_[0] = out.field_->zeta_power(k);
    out.normalize();
    return out;
}

CycScalar CycScalar::exp_2pi_i(CyclotomicFieldPtr field, const Rational& alpha) {
    const Rational scaled = alpha * Rational(field->order());
    if (!scaled.is_integer())
        throw TwistError(ErrorCode::DomainError,
                         "exponent " + alpha.str() + " has denominator not dividing D=" +
                             std::to_string(field->order()));
    return zeta(std::move(field), scaled.to_long());
}

CycScalar CycScalar::t_power(int k) {
    CycScalar out;
    out.coeffs_[k] = {Rational(1)};
    return out;
}

CycScalar CycScalar::monomial(const CyclotomicFieldPtr& field, int k, int i) {
    CycScalar out = t_power(k);
    if (field) out *= zeta(field, i);
    return out;
}

std::map<std::pair<int, int>, Rational> CycScalar::components() const {
    std::map<std::pair<int, int>, Rational> out;
    for (const auto& [k, v] : coeffs_)
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) out.emplace(std::make_pair(k, static_cast<int>(i)), v[i]);
    return out;
}

std::vector<Rational> CycScalar::t_coeff(int k) const {
    auto it = coeffs_.find(k);
    const std::size_t n = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
    if (it == coeffs_.end()) return std::vector<Rational>(n);
    return it->second;
}

bool CycScalar::is_rational() const {
    if (coeffs_.empty()) return true;
    if (coeffs_.size() != 1 || coeffs_.begin()->first != 0) return false;
    const auto& v = coeffs_.begin()->second;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!v[i].is_zero()) return false;
    return true;
}

Rational CycScalar::to_rational() const {
    if (!is_rational()) throw TwistError(ErrorCode::DomainError, "CycScalar " + str() + " is not rational");
    return coeffs_.empty() ? Rational(0) : coeffs_.begin()->second[0];
}

void CycScalar::lift_to(const CyclotomicFieldPtr& f) {
    if (field_ == f) return;
    if (field_ && field_ != f) {
        if (field_->order() != f->order())
            throw TwistError(ErrorCode::DomainError, "CycScalar: mismatched cyclotomic orders " +
                                                         std::to_string(field_->order()) + " and " +
                                                         std::to_string(f->order()));
        field_ = f;
        return;
    }
    field_ = f;
    for (auto& [k, v] : coeffs_) {
        std::vector<Rational> lifted(static_cast<std::size_t>(f->degree()));
        lifted[0] = v[0];
        v = std::move(lifted);
    }
}

void CycScalar::unify(CycScalar& other) {
    if (field_ && !other.field_) other.lift_to(field_);
    else if (!field_ && other.field_) lift_to(other.field_);
    else if (field_ && other.field_) other.lift_to(field_);
}

void CycScalar::normalize() {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        bool zero = true;
        for (const auto& c : it->second)
            if (!c.is_zero()) { zero = false; break; }
        if (zero) it = coeffs_.erase(it);
        else ++it;
    }
}

CycScalar& CycScalar::operator+=(const CycScalar& o) {
    CycScalar rhs = o;
    unify(rhs);
    for (auto& [k, v] : rhs.coeffs_) {
        auto& mine = coeffs_[k];
        if (mine.empty()) mine.resize(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) mine[i] += v[i];
    }
    normalize();
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& o) { return *this += -o; }

CycScalar& CycScalar::operator*=(const Rational& r) {
    if (r.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [k, v] : coeffs_)
        for (auto& c : v) c *= r;
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& o) {
    CycScalar rhs = o;
    unify(rhs);
    std::map<int, std::vector<Rational>> out;
    for (const auto& [ka, va] : coeffs_) {
        for (const auto& [kb, vb] : rhs.coeffs_) {
            std::vector<Rational> prod(va.size() + vb.size() - 1);
            for (std::size_t i = 0; i < va.size(); ++i) {
                if (va[i].is_zero()) continue;
                for (std::size_t j = 0; j < vb.size(); ++j) prod[i + j] += va[i] * vb[j];
            }
            std::vector<Rational> reduced =
                field_ ? field_->reduce(QPoly(std::move(prod))) : std::vector<Rational>{prod[0]};
            auto& slot = out[ka + kb];
            if (slot.empty()) slot.resize(reduced.size());
            for (std::size_t i = 0; i < reduced.size(); ++i) slot[i] += reduced[i];
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

bool operator==(const CycScalar& a, const CycScalar& b) {
    CycScalar diff = a;
    diff -= b;
    return diff.is_zero();
}

std::string CycScalar::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : coeffs_) {
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << v[i] << ")";
            if (i > 0) os << "*z^" << i;
            if (k > 0) os << "*T^" << k;
        }
    }
    return os.str();
}

}  // namespace twistmod
