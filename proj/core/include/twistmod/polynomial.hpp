#pragma once

#include <string>
#include <vector>

#include "twistmod/rational.hpp"

namespace twistmod {

/// Dense univariate polynomial over Q, coefficient i multiplies x^i.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<Rational> coeffs);
    static QPoly constant(const Rational& c) { return QPoly({c}); }
    static QPoly x() { return QPoly({Rational(0), Rational(1)}); }
    /// x - r
    static QPoly linear_root(const Rational& r) { return QPoly({-r, Rational(1)}); }

    [[nodiscard]] int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    [[nodiscard]] Rational coeff(int i) const;
    [[nodiscard]] const std::vector<Rational>& coeffs() const { return c_; }
    [[nodiscard]] Rational leading() const { return c_.back(); }

    [[nodiscard]] QPoly monic() const;
    [[nodiscard]] QPoly derivative() const;
    [[nodiscard]] Rational eval(const Rational& x) const;

    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    friend QPoly operator*(QPoly a, const Rational& s);
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division; throws std::domain_error on a zero divisor.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder);
    friend QPoly operator%(const QPoly& a, const QPoly& b);
    friend QPoly operator/(const QPoly& a, const QPoly& b);

    [[nodiscard]] std::string str(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
QPoly gcd(QPoly a, QPoly b);

/// Extended Euclid: returns g = gcd(a,b) monic with s*a + t*b = g.
QPoly extended_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t);

/// Squarefree part p / gcd(p, p'), monic.
QPoly squarefree_part(const QPoly& p);

/// Distinct rational roots (rational root test on the integer-cleared polynomial).
std::vector<Rational> rational_roots(const QPoly& p);

/// Root/multiplicity pairs if p splits completely into linear factors over Q.
/// Returns false when an irreducible factor of degree > 1 remains.
bool split_over_rationals(const QPoly& p, std::vector<std::pair<Rational, int>>& factors);

/// D-th cyclotomic polynomial (integer coefficients).
QPoly cyclotomic_polynomial(long D);

}  // namespace twistmod
