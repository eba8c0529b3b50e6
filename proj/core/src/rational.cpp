#include "twistmod/rational.hpp"

#include <numeric>
#include <ostream>
#include <stdexcept>

namespace twistmod {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    // strip surrounding whitespace
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    if (b == std::string::npos) throw std::invalid_argument("Rational: empty string");
    s = s.substr(b, e - b + 1);
    const auto slash = s.find('/');
    auto valid_int = [](const std::string& t) {
        if (t.empty()) return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9') return false;
        return true;
    };
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+') num.erase(0, 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw std::invalid_argument("Rational: malformed '" + s + "'");
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return Rational(q);
}

long Rational::to_long() const {
    if (!is_integer()) throw std::domain_error("Rational::to_long: " + str() + " is not an integer");
    const mpz_class n = q_.get_num();
    if (!n.fits_slong_p()) throw std::domain_error("Rational::to_long: out of range");
    return n.get_si();
}

mpz_class Rational::floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(const Rational& top, int k) {
    if (k < 0) return Rational(0);
    Rational r(1);
    for (int i = 0; i < k; ++i) r *= (top - Rational(i)) / Rational(i + 1);
    return r;
}

Rational factorial(int n) {
    mpz_class f(1);
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

Rational pow(const Rational& base, int exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    Rational r(1), b = base;
    while (exponent > 0) {
        if (exponent & 1) r *= b;
        b *= b;
        exponent >>= 1;
    }
    return r;
}

long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace twistmod
