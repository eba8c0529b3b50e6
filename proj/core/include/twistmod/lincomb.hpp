#pragma once

#include <map>
#include <utility>

#include "twistmod/rational.hpp"

namespace twistmod {

/// Finite formal linear combination of ordered keys with coefficients in a ring.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// vectors. Iteration order is the key order, which keeps every printed or
/// serialized form deterministic.
template <typename Key, typename Coeff = Rational>
class LinComb {
public:
    using key_type = Key;
    using coeff_type = Coeff;
    using map_type = std::map<Key, Coeff>;

    LinComb() = default;
    LinComb(const Key& k, Coeff c) { add_term(k, std::move(c)); }

    static LinComb basis(const Key& k) { return LinComb(k, Coeff(1)); }

    void add_term(const Key& k, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    [[nodiscard]] Coeff coeff(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coeff(0) : it->second;
    }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const { return terms_.size(); }
    [[nodiscard]] const map_type& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    LinComb& operator+=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LinComb& operator-=(const LinComb& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    template <typename S>
    LinComb& operator*=(const S& s) {
        if (s.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto it = terms_.begin(); it != terms_.end();) {
            it->second *= s;
            if (it->second.is_zero())
                it = terms_.erase(it);
            else
                ++it;
        }
        return *this;
    }

    friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
    friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
    friend LinComb operator-(LinComb a) {
        for (auto& [k, c] : a.terms_) c = -c;
        return a;
    }
    friend LinComb operator*(LinComb a, const Coeff& s) { return a *= s; }
    friend LinComb operator*(const Coeff& s, LinComb a) { return a *= s; }
    friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

    /// Applies a linear map given on keys, accumulating into a target combination.
    template <typename Target, typename F>
    [[nodiscard]] Target map_linear(F&& f) const {
        Target out;
        for (const auto& [k, c] : terms_) {
            Target img = f(k);
            img *= c;
            out += img;
        }
        return out;
    }

private:
    map_type terms_;
};

}  // namespace twistmod
