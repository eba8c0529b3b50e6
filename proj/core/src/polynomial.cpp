#include "twistmod/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace twistmod {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational QPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<std::size_t>(i)];
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / leading());
}

QPoly QPoly::derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rational(static_cast<long>(i)));
    return QPoly(std::move(d));
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return QPoly(std::move(r));
}

QPoly operator*(QPoly a, const Rational& s) {
    for (auto& c : a.c_) c *= s;
    a.trim();
    return a;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quotient, QPoly& remainder) {
    if (b.is_zero()) throw std::domain_error("QPoly::divmod: division by zero polynomial");
    std::vector<Rational> rem = a.c_;
    const int db = b.degree();
    const int da = a.degree();
    std::vector<Rational> q(da >= db ? static_cast<std::size_t>(da - db + 1) : 0);
    const Rational inv_lead = Rational(1) / b.leading();
    for (int i = da; i >= db; --i) {
        const Rational f = rem[static_cast<std::size_t>(i)] * inv_lead;
        if (f.is_zero()) continue;
        q[static_cast<std::size_t>(i - db)] = f;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= f * b.c_[static_cast<std::size_t>(j)];
    }
    quotient = QPoly(std::move(q));
    remainder = QPoly(std::move(rem));
}

QPoly operator%(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    QPoly::divmod(a, b, q, r);
    return r;
}

QPoly operator/(const QPoly& a, const QPoly& b) {
    QPoly q, r;
    QPoly::divmod(a, b, q, r);
    return q;
}

std::string QPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<std::size_t>(i)];
        if (c.is_zero()) continue;
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational a = c.sign() < 0 ? -c : c;
        if (i == 0 || a != Rational(1)) os << a << (i > 0 ? "*" : "");
        if (i > 0) os << var << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    return os.str();
}

QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

QPoly extended_gcd(const QPoly& a, const QPoly& b, QPoly& s, QPoly& t) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly::constant(1), s1;
    QPoly t0, t1 = QPoly::constant(1);
    while (!r1.is_zero()) {
        QPoly q, r;
        QPoly::divmod(r0, r1, q, r);
        QPoly s2 = s0 - q * s1;
        QPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) {
        s = QPoly();
        t = QPoly();
        return r0;
    }
    const Rational inv = Rational(1) / r0.leading();
    s = s0 * inv;
    t = t0 * inv;
    return r0 * inv;
}

QPoly squarefree_part(const QPoly& p) {
    if (p.degree() <= 0) return p.monic();
    return (p / gcd(p, p.derivative())).monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
    std::vector<Rational> roots;
    if (p.degree() <= 0) return roots;
    QPoly sq = squarefree_part(p);
    // clear denominators
    mpz_class common(1);
    for (const auto& c : sq.coeffs()) {
        mpz_class d = c.den();
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ic;
    for (const auto& c : sq.coeffs()) ic.push_back((c * Rational(common)).num());
    std::size_t low = 0;
    while (low < ic.size() && ic[low] == 0) ++low;
    if (low > 0) roots.emplace_back(0);
    std::vector<mpz_class> trimmed(ic.begin() + static_cast<long>(low), ic.end());
    if (trimmed.size() <= 1) return roots;
    QPoly reduced([&] {
        std::vector<Rational> v;
        for (const auto& z : trimmed) v.emplace_back(z);
        return v;
    }());
    for (const auto& pnum : positive_divisors(trimmed.front())) {
        for (const auto& qden : positive_divisors(trimmed.back())) {
            for (int sgn : {1, -1}) {
                mpq_class cand(pnum * sgn, qden);
                cand.canonicalize();
                Rational r(cand);
                if (std::find(roots.begin(), roots.end(), r) != roots.end()) continue;
                if (reduced.eval(r).is_zero()) roots.push_back(r);
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

bool split_over_rationals(const QPoly& p, std::vector<std::pair<Rational, int>>& factors) {
    factors.clear();
    if (p.is_zero()) return false;
    QPoly rest = p.monic();
    for (const auto& r : rational_roots(p)) {
        int mult = 0;
        const QPoly lin = QPoly::linear_root(r);
        for (;;) {
            QPoly q, rem;
            QPoly::divmod(rest, lin, q, rem);
            if (!rem.is_zero()) break;
            rest = q;
            ++mult;
        }
        factors.emplace_back(r, mult);
    }
    return rest.degree() == 0;
}

QPoly cyclotomic_polynomial(long D) {
    if (D <= 0) throw std::domain_error("cyclotomic_polynomial: order must be positive");
    std::vector<Rational> xd(static_cast<std::size_t>(D + 1));
    xd[0] = Rational(-1);
    xd[static_cast<std::size_t>(D)] = Rational(1);
    QPoly result(xd);
    for (long d = 1; d < D; ++d)
        if (D % d == 0) result = result / cyclotomic_polynomial(d);
    return result;
}

}  // namespace twistmod
