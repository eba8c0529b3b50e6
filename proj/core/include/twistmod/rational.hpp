#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace twistmod {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper around GMP's mpq_class so the rest of the library never
/// touches GMP directly.
class Rational {
public:
    Rational() = default;
    Rational(int v) : q_(v) {}                                   // NOLINT(implicit)
    Rational(long v) : q_(v) {}                                  // NOLINT(implicit)
    Rational(long long v) : q_(mpz_class(std::to_string(v))) {}  // NOLINT(implicit)
    Rational(long num, long den);
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
    explicit Rational(const mpz_class& z) : q_(z) {}

    /// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed input
    /// or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] mpz_class num() const { return q_.get_num(); }
    [[nodiscard]] mpz_class den() const { return q_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return q_; }

    [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
    [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
    [[nodiscard]] int sign() const { return sgn(q_); }

    /// Integer value; throws std::domain_error when not an integer or out of range.
    [[nodiscard]] long to_long() const;
    [[nodiscard]] mpz_class floor() const;
    /// Representative in [0, 1).
    [[nodiscard]] Rational frac() const;

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string str() const { return q_.get_str(); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_{0};
};

/// Generalized binomial coefficient C(top, k) for rational top and k >= 0.
Rational binomial(const Rational& top, int k);

Rational factorial(int n);

/// Integer power, negative exponents allowed for nonzero base.
Rational pow(const Rational& base, int exponent);

long lcm_long(long a, long b);

}  // namespace twistmod

template <>
struct std::hash<twistmod::Rational> {
    std::size_t operator()(const twistmod::Rational& r) const noexcept {
        return std::hash<std::string>{}(r.str());
    }
};
