#include "twistmod/pbw.hpp"

#include <sstream>

namespace twistmod {

bool Monomial::is_normal_ordered() const {
    for (std::size_t i = 0; i + 1 < ops.size(); ++i)
        if (!normal_before(ops[i], ops[i + 1])) return false;
    for (const auto& o : ops)
        if (o.mode >= 0) return false;
    return true;
}

Monomial Monomial::rest() const {
    Monomial r;
    r.ops.assign(ops.begin() + 1, ops.end());
    r.top = top;
    return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.depth() <=> b.depth(); c != 0) return c;
    if (auto c = a.ops.size() <=> b.ops.size(); c != 0) return c;
    if (auto c = a.ops <=> b.ops; c != 0) return c;
    return a.top <=> b.top;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = std::hash<int>{}(m.top) ^ 0x9e3779b97f4a7c15ULL;
    for (const auto& o : m.ops) {
        h ^= std::hash<int>{}(o.mode * 131 + o.gen) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

int max_depth(const PBWVector& v) {
    int d = 0;
    for (const auto& [m, c] : v) d = std::max(d, m.depth());
    return d;
}

bool is_homogeneous(const PBWVector& v, int* depth) {
    int d = -1;
    for (const auto& [m, c] : v) {
        if (d < 0) d = m.depth();
        else if (m.depth() != d) return false;
    }
    if (depth) *depth = d < 0 ? 0 : d;
    return true;
}

CycPBWVector to_cyc(const PBWVector& v) {
    CycPBWVector out;
    for (const auto& [m, c] : v) out.add_term(m, CycScalar(c));
    return out;
}

std::map<std::pair<int, int>, PBWVector> cyc_components(const CycPBWVector& v) {
    std::map<std::pair<int, int>, PBWVector> out;
    for (const auto& [m, c] : v)
        for (const auto& [key, r] : c.components()) out[key].add_term(m, r);
    return out;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& gen_names,
                            const std::vector<std::string>& top_names) {
    std::ostringstream os;
    for (const auto& o : m.ops) os << gen_names[static_cast<std::size_t>(o.gen)] << "(" << o.mode << ")";
    if (top_names.empty()) os << "1";
    else os << top_names[static_cast<std::size_t>(m.top)];
    return os.str();
}

std::string format_vector(const PBWVector& v, const std::vector<std::string>& gen_names,
                          const std::vector<std::string>& top_names) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : v) {
        if (!first) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational a = c.sign() < 0 ? -c : c;
        if (a != Rational(1)) os << a << "*";
        os << format_monomial(m, gen_names, top_names);
        first = false;
    }
    return os.str();
}

}  // namespace twistmod
