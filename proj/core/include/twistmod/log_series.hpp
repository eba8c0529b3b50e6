#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "twistmod/cyclotomic.hpp"
#include "twistmod/errors.hpp"
#include "twistmod/rational.hpp"

namespace twistmod {

/// Exponent / log-power pair of a term x^e (log x)^k.
struct SeriesKey {
    Rational e;
    int k = 0;
    friend auto operator<=>(const SeriesKey&, const SeriesKey&) = default;
    friend bool operator==(const SeriesKey&, const SeriesKey&) = default;
};

/// Finite formal sum of terms c * x^e (log x)^k with coefficients in V.
///
/// A series may carry a truncation floor: terms with exponent below the floor
/// are not stored, and `truncated()` records whether any were dropped. A
/// series without a floor is exact. When a denominator bound D > 0 is set,
/// every stored exponent must satisfy e*D in Z.
template <typename V>
class LogSeries {
public:
    using map_type = std::map<SeriesKey, V>;

    LogSeries() = default;
    explicit LogSeries(std::optional<Rational> floor, long denominator_bound = 0)
        : floor_(std::move(floor)), denom_(denominator_bound) {}

    static LogSeries term(const Rational& e, int k, V c) {
        LogSeries s;
        s.add_term(e, k, c);
        return s;
    }

    void add_term(const Rational& e, int k, const V& c) {
        if (c.is_zero()) return;
        if (denom_ > 0 && !(e * Rational(denom_)).is_integer())
            throw TwistError(ErrorCode::DomainError, "exponent " + e.str() +
                                                         " has denominator not dividing D=" +
                                                         std::to_string(denom_));
        if (floor_ && e < *floor_) {
            truncated_ = true;
            return;
        }
        SeriesKey key{e, k};
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] V coeff(const Rational& e, int k) const {
        auto it = terms_.find(SeriesKey{e, k});
        return it == terms_.end() ? V() : it->second;
    }

    [[nodiscard]] const map_type& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const std::optional<Rational>& floor() const { return floor_; }
    [[nodiscard]] bool truncated() const { return truncated_; }
    [[nodiscard]] long denominator_bound() const { return denom_; }

    /// Drops stored terms below a new (higher) floor.
    void raise_floor(const Rational& f) {
        if (floor_ && *floor_ >= f) return;
        floor_ = f;
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->first.e < f) {
                truncated_ = true;
                it = terms_.erase(it);
            } else {
                ++it;
            }
        }
    }
    void mark_truncated() { truncated_ = true; }

    [[nodiscard]] std::optional<Rational> max_exponent() const {
        if (terms_.empty()) return std::nullopt;
        Rational m = terms_.begin()->first.e;
        for (const auto& [key, c] : terms_)
            if (key.e > m) m = key.e;
        return m;
    }
    [[nodiscard]] int max_log_power() const {
        int m = -1;
        for (const auto& [key, c] : terms_) m = std::max(m, key.k);
        return m;
    }

    /// Termwise linear map on coefficients.
    template <typename W, typename F>
    [[nodiscard]] LogSeries<W> map(F&& f) const {
        LogSeries<W> out(floor_, denom_);
        if (truncated_) out.mark_truncated();
        for (const auto& [key, c] : terms_) out.add_term(key.e, key.k, f(c));
        return out;
    }

    /// Multiplies every term by x^e (log x)^k.
    [[nodiscard]] LogSeries shifted(const Rational& e, int k) const {
        LogSeries out(floor_ ? std::optional<Rational>(*floor_ + e) : std::nullopt, denom_);
        if (truncated_) out.mark_truncated();
        for (const auto& [key, c] : terms_) out.add_term(key.e + e, key.k + k, c);
        return out;
    }

    LogSeries& operator+=(const LogSeries& o) {
        check_compatible(o);
        if (o.floor_ && (!floor_ || *o.floor_ > *floor_)) raise_floor(*o.floor_);
        if (o.truncated_) truncated_ = true;
        if (!denom_) denom_ = o.denom_;
        for (const auto& [key, c] : o.terms_) add_term(key.e, key.k, c);
        return *this;
    }
    LogSeries& operator-=(const LogSeries& o) { return *this += -o; }
    template <typename S>
    LogSeries& operator*=(const S& s) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            if (it->second.is_zero())
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }
    friend LogSeries operator+(LogSeries a, const LogSeries& b) { return a += b; }
    friend LogSeries operator-(LogSeries a, const LogSeries& b) { return a -= b; }
    friend LogSeries operator-(LogSeries a) {
        for (auto& [key, c] : a.terms_) c = -c;
        return a;
    }
    /// Coefficientwise equality (floors and truncation flags are not compared).
    friend bool operator==(const LogSeries& a, const LogSeries& b) { return a.terms_ == b.terms_; }

private:
    void check_compatible(const LogSeries& o) const {
        if (denom_ && o.denom_ && denom_ != o.denom_)
            throw TwistError(ErrorCode::DomainError, "LogSeries: mismatched denominator bounds " +
                                                         std::to_string(denom_) + " and " +
                                                         std::to_string(o.denom_));
    }

    map_type terms_;
    std::optional<Rational> floor_;
    long denom_ = 0;
    bool truncated_ = false;
};

enum class CombineMode { Add, Scale };

/// add: a + b; scale: a * s (b ignored). Floor of the result is the max of the inputs' floors.
template <typename V>
LogSeries<V> series_combine(const LogSeries<V>& a, const LogSeries<V>& b, CombineMode mode,
                            const Rational& s = Rational(1)) {
    if (mode == CombineMode::Add) return a + b;
    LogSeries<V> out = a;
    out *= s;
    return out;
}

/// Formal integral from 0 to x: c y^n -> c/(n+1) x^{n+1}.
template <typename V>
LogSeries<V> formal_integral_0_to_x(const LogSeries<V>& s) {
    LogSeries<V> out(s.floor() ? std::optional<Rational>(*s.floor() + Rational(1)) : std::nullopt,
                     s.denominator_bound());
    if (s.truncated()) out.mark_truncated();
    for (const auto& [key, c] : s.terms()) {
        if (key.k != 0)
            throw TwistError(ErrorCode::DomainError, "formal integral: log term present");
        if (key.e == Rational(-1))
            throw TwistError(ErrorCode::DomainError, "formal integral: exponent -1 present");
        V img = c;
        img *= Rational(1) / (key.e + Rational(1));
        out.add_term(key.e + Rational(1), 0, img);
    }
    return out;
}

/// d/dx, termwise product rule; the floor drops by one.
template <typename V>
LogSeries<V> series_derivative(const LogSeries<V>& s) {
    LogSeries<V> out(s.floor() ? std::optional<Rational>(*s.floor() - Rational(1)) : std::nullopt,
                     s.denominator_bound());
    if (s.truncated()) out.mark_truncated();
    for (const auto& [key, c] : s.terms()) {
        const Rational e1 = key.e - Rational(1);
        if (!key.e.is_zero()) {
            V a = c;
            a *= key.e;
            out.add_term(e1, key.k, a);
        }
        if (key.k > 0) {
            V b = c;
            b *= Rational(key.k);
            out.add_term(e1, key.k - 1, b);
        }
    }
    return out;
}

/// Substitution x -> -x, defined for integer exponents without logs as (-1)^m x^m.
template <typename V>
LogSeries<V> negate_variable(const LogSeries<V>& s) {
    LogSeries<V> out(s.floor(), s.denominator_bound());
    if (s.truncated()) out.mark_truncated();
    for (const auto& [key, c] : s.terms()) {
        if (key.k != 0 || !key.e.is_integer())
            throw TwistError(ErrorCode::DomainError,
                             "x -> -x only defined on integer powers without logs");
        V img = c;
        if (key.e.to_long() % 2 != 0) img *= Rational(-1);
        out.add_term(key.e, 0, img);
    }
    return out;
}

/// Product of a scalar series with a vector-valued one. Exact when both inputs are
/// exact; otherwise the result floor is max(fa + Mb, fb + Ma).
template <typename S, typename V>
LogSeries<V> series_product(const LogSeries<S>& a, const LogSeries<V>& b) {
    std::optional<Rational> floor;
    auto bound = [&](const auto& x, const auto& y) -> std::optional<Rational> {
        if (!x.floor()) return std::nullopt;
        auto my = y.max_exponent();
        return my ? std::optional<Rational>(*x.floor() + *my) : x.floor();
    };
    auto fa = bound(a, b), fb = bound(b, a);
    if (fa && fb) floor = std::max(*fa, *fb);
    else if (fa) floor = fa;
    else if (fb) floor = fb;
    const long denom = a.denominator_bound() ? a.denominator_bound() : b.denominator_bound();
    LogSeries<V> out(floor, denom);
    if (a.truncated() || b.truncated()) out.mark_truncated();
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            V t = cb;
            t *= ca;
            out.add_term(ka.e + kb.e, ka.k + kb.k, t);
        }
    }
    return out;
}

/// Applies a linear operator F: V -> LogSeries<W> to every coefficient and multiplies
/// the results by the carrying monomials: sum c x^e (log x)^k -> sum F(c) x^e (log x)^k.
template <typename W, typename V, typename F>
LogSeries<W> series_bind(const LogSeries<V>& s, F&& f) {
    LogSeries<W> out;
    bool truncated = s.truncated();
    for (const auto& [key, c] : s.terms()) {
        LogSeries<W> img = f(c);
        truncated = truncated || img.truncated();
        for (const auto& [kk, cc] : img.terms()) out.add_term(kk.e + key.e, kk.k + key.k, cc);
    }
    if (truncated) out.mark_truncated();
    return out;
}

/// Rewrites x^e -> zeta_D^{eD p} x^e and log x -> log x + pT for p = steps,
/// where T stands for 2 pi i. Coefficients must be modules over CycScalar.
template <typename V>
LogSeries<V> branch_shift(const LogSeries<V>& s, long steps, const CyclotomicFieldPtr& field) {
    LogSeries<V> out(s.floor(), s.denominator_bound());
    if (s.truncated()) out.mark_truncated();
    const Rational D(field->order());
    for (const auto& [key, c] : s.terms()) {
        const Rational eD = key.e * D;
        if (!eD.is_integer())
            throw TwistError(ErrorCode::DomainError, "branch shift: exponent " + key.e.str() +
                                                         " has denominator not dividing D=" +
                                                         std::to_string(field->order()));
        const CycScalar phase = CycScalar::zeta(field, eD.to_long() * steps);
        // (log x + pT)^k = sum_j C(k,j) (pT)^{k-j} (log x)^j
        for (int j = 0; j <= key.k; ++j) {
            CycScalar f = phase * CycScalar::t_power(key.k - j);
            f *= binomial(Rational(key.k), j) * pow(Rational(steps), key.k - j);
            V img = c;
            img *= f;
            out.add_term(key.e, j, img);
        }
    }
    return out;
}

}  // namespace twistmod
