#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "twistmod/polynomial.hpp"
#include "twistmod/rational.hpp"

namespace twistmod {

/// Q(zeta_D) presented as Q[z]/(Phi_D(z)), elements in the power basis
/// 1, z, ..., z^{phi(D)-1}.
class CyclotomicField {
public:
    explicit CyclotomicField(long order);

    [[nodiscard]] long order() const { return order_; }
    [[nodiscard]] int degree() const { return phi_.degree(); }
    [[nodiscard]] const QPoly& modulus() const { return phi_; }

    /// Reduced coefficient vector (length degree()) of z^k, k any integer.
    [[nodiscard]] std::vector<Rational> zeta_power(long k) const;
    [[nodiscard]] std::vector<Rational> reduce(const QPoly& p) const;

private:
    long order_;
    QPoly phi_;
};

using CyclotomicFieldPtr = std::shared_ptr<const CyclotomicField>;

/// Shared instance per order; construction of Phi_D happens once.
CyclotomicFieldPtr cyclotomic_field(long order);

/// Element of Q(zeta_D)[T], where T is a formal symbol standing for 2*pi*i.
///
/// A value constructed without a field is a plain rational polynomial in T and
/// is lifted into Q(zeta_D) on first contact with a field-bearing value.
/// Mixing two different fields is a DomainError.
class CycScalar {
public:
    CycScalar() = default;
    CycScalar(int v) : CycScalar(Rational(v)) {}  // NOLINT(implicit)
    CycScalar(const Rational& r);                 // NOLINT(implicit)
    CycScalar(CyclotomicFieldPtr field, const Rational& r);

    /// zeta_D^k
    static CycScalar zeta(CyclotomicFieldPtr field, long k);
    /// e^{2 pi i alpha} for rational alpha with alpha*D integral.
    static CycScalar exp_2pi_i(CyclotomicFieldPtr field, const Rational& alpha);
    /// T^k
    static CycScalar t_power(int k);
    /// T^k * z^i, z the power-basis generator of the field (field may be null when i = 0).
    static CycScalar monomial(const CyclotomicFieldPtr& field, int k, int i);

    [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
    [[nodiscard]] const CyclotomicFieldPtr& field() const { return field_; }
    /// Highest T power present (-1 for zero).
    [[nodiscard]] int t_degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
    /// Coefficient vector of T^k in the power basis of the field.
    [[nodiscard]] std::vector<Rational> t_coeff(int k) const;
    [[nodiscard]] const std::map<int, std::vector<Rational>>& raw() const { return coeffs_; }
    /// Nonzero rational coordinates keyed by (T power, power-basis index).
    [[nodiscard]] std::map<std::pair<int, int>, Rational> components() const;

    /// Rational value when the element lies in Q (no T, no zeta); throws otherwise.
    [[nodiscard]] Rational to_rational() const;
    [[nodiscard]] bool is_rational() const;

    CycScalar& operator+=(const CycScalar& o);
    CycScalar& operator-=(const CycScalar& o);
    CycScalar& operator*=(const CycScalar& o);
    CycScalar& operator*=(const Rational& r);
    friend CycScalar operator+(CycScalar a, const CycScalar& b) { return a += b; }
    friend CycScalar operator-(CycScalar a, const CycScalar& b) { return a -= b; }
    friend CycScalar operator*(CycScalar a, const CycScalar& b) { return a *= b; }
    friend CycScalar operator-(CycScalar a) { return a *= Rational(-1); }
    friend bool operator==(const CycScalar& a, const CycScalar& b);

    [[nodiscard]] std::string str() const;

private:
    void lift_to(const CyclotomicFieldPtr& f);
    void unify(CycScalar& other);
    void normalize();

    CyclotomicFieldPtr field_;
    // T power -> coefficients (length field degree, or 1 when no field)
    std::map<int, std::vector<Rational>> coeffs_;
};

}  // namespace twistmod
