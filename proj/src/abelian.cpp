#include "oinv/abelian.hpp"

#include <sstream>

#include "oinv/errors.hpp"

namespace oinv {

namespace {

void add_into(CoefMap& map, std::int64_t key, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = map.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) map.erase(it);
    }
}

void merge_into(CoefMap& dst, const CoefMap& src, bool negate) {
    for (const auto& [k, c] : src) add_into(dst, k, negate ? Int(-c) : c);
}

CoefMap negated(const CoefMap& src) {
    CoefMap out;
    for (const auto& [k, c] : src) out.emplace(k, -c);
    return out;
}

CoefMap scaled(const CoefMap& src, const Int& c) {
    CoefMap out;
    for (const auto& [k, v] : src) out.emplace(k, c * v);
    return out;
}

void append_terms(std::ostringstream& out, bool& first, const CoefMap& map, const char* name) {
    for (const auto& [k, c] : map) {
        const bool neg = c < 0;
        const Int mag = abs(c);
        if (first) {
            out << (neg ? "-" : "");
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mag != 1) out << mag.get_str() << "*";
        out << name << "(" << k << ")";
    }
}

void append_bit(std::ostringstream& out, bool& first, Z2 bit, const char* name) {
    if (bit.is_zero()) return;
    if (!first) out << " + ";
    out << name;
    first = false;
}

}  // namespace

GUElement GUElement::t2(std::int64_t m, Int coef) {
    GUElement g;
    g.add_t2(m, coef);
    return g;
}

GUElement GUElement::h2(std::int64_t m, Int coef) {
    GUElement g;
    g.add_h2(m, coef);
    return g;
}

GUElement GUElement::h1_0() {
    GUElement g;
    g.m_bit_ = Z2(1);
    return g;
}

GUElement GUElement::q2_0() {
    GUElement g;
    g.q_bit_ = Z2(1);
    return g;
}

bool GUElement::is_zero() const {
    return t2_.empty() && h2_.empty() && m_bit_.is_zero() && q_bit_.is_zero();
}

GUElement GUElement::k_projection() const {
    GUElement out = *this;
    out.m_bit_ = Z2(0);
    out.q_bit_ = Z2(0);
    return out;
}

void GUElement::add_t2(std::int64_t m, const Int& c) { add_into(t2_, m, c); }
void GUElement::add_h2(std::int64_t m, const Int& c) { add_into(h2_, m, c); }

GUElement& GUElement::operator+=(const GUElement& o) {
    merge_into(t2_, o.t2_, false);
    merge_into(h2_, o.h2_, false);
    m_bit_ += o.m_bit_;
    q_bit_ += o.q_bit_;
    return *this;
}

GUElement& GUElement::operator-=(const GUElement& o) {
    merge_into(t2_, o.t2_, true);
    merge_into(h2_, o.h2_, true);
    m_bit_ += o.m_bit_;  // self-inverse torsion
    q_bit_ += o.q_bit_;
    return *this;
}

GUElement GUElement::operator-() const {
    GUElement out;
    out.t2_ = negated(t2_);
    out.h2_ = negated(h2_);
    out.m_bit_ = m_bit_;
    out.q_bit_ = q_bit_;
    return out;
}

GUElement operator*(const Int& c, const GUElement& g) {
    GUElement out;
    if (c == 0) return out;
    out.t2_ = scaled(g.t2_, c);
    out.h2_ = scaled(g.h2_, c);
    if (!is_even(c)) {
        out.m_bit_ = g.m_bit_;
        out.q_bit_ = g.q_bit_;
    }
    return out;
}

OElement OElement::x(std::int64_t n, Int coef) {
    OElement o;
    o.add_x(n, coef);
    return o;
}

OElement OElement::y(std::int64_t n, Int coef) {
    OElement o;
    o.add_y(n, coef);
    return o;
}

void OElement::add_x(std::int64_t n, const Int& c) { add_into(x_, n, c); }
void OElement::add_y(std::int64_t n, const Int& c) { add_into(y_, n, c); }

OElement& OElement::operator+=(const OElement& o) {
    merge_into(x_, o.x_, false);
    merge_into(y_, o.y_, false);
    return *this;
}

OElement& OElement::operator-=(const OElement& o) {
    merge_into(x_, o.x_, true);
    merge_into(y_, o.y_, true);
    return *this;
}

OElement OElement::operator-() const {
    OElement out;
    out.x_ = negated(x_);
    out.y_ = negated(y_);
    return out;
}

OElement operator*(const Int& c, const OElement& o) {
    OElement out;
    if (c == 0) return out;
    out.x_ = scaled(o.x_, c);
    out.y_ = scaled(o.y_, c);
    return out;
}

std::vector<std::pair<std::int64_t, int>> ranged_index_list(HalfInt a, HalfInt b) {
    int sign = 1;
    if (a.twice == b.twice) return {};
    if (a.twice > b.twice) {
        std::swap(a, b);
        sign = -1;
    }
    // smallest integer > a and largest integer < b, endpoints exclusive
    const std::int64_t lo = floor_div(a.twice, 2) + 1;
    const std::int64_t hi = floor_div(b.twice - 1, 2);
    std::vector<std::pair<std::int64_t, int>> out;
    out.reserve(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0);
    for (std::int64_t k = lo; k <= hi; ++k) out.emplace_back(k, sign);
    return out;
}

OElement phi(const GUElement& g) {
    OElement out;
    for (const auto& [m, c] : g.t2_coef()) {
        out.add_x(m - 1, c);
        out.add_x(m - 2, c);
        out.add_y(m, c);
    }
    for (const auto& [m, c] : g.h2_coef()) {
        out.add_x(m, c);
        out.add_x(m - 2, -c);
    }
    return out;
}

GUElement F_map(const OElement& o) {
    GUElement out;
    for (const auto& [m, c] : o.x_coef()) {
        for (const auto& [k, sign] : ranged_index_list(plus_half(-1), plus_half(floor_div(m, 2))))
            out.add_h2(m - 2 * k, sign > 0 ? c : Int(-c));
    }
    for (const auto& [m, c] : o.y_coef()) {
        out.add_t2(m, c);
        for (const auto& [k, sign] : ranged_index_list(plus_half(-1), plus_half(m - 1)))
            out.add_h2(k, sign > 0 ? Int(-c) : c);
    }
    return out;
}

Int eta(const GUElement& k) {
    if (!k.in_k()) throw DomainError("eta: element has a nonzero torsion bit");
    Int total = 0;
    for (const auto& [m, c] : k.h2_coef()) total += c;
    return total;
}

Int theta(int variant, const OElement& o) {
    if (variant != 0 && variant != 1) throw DomainError("theta: variant must be 0 or 1");
    Int total = 0;
    for (const auto& [n, c] : o.x_coef())
        if (((n % 2) + 2) % 2 == variant) total += c;
    for (const auto& [n, c] : o.y_coef()) total -= c;
    return total;
}

bool in_image_phi(const OElement& o) {
    Int even = 0, odd = 0, ys = 0;
    for (const auto& [n, c] : o.x_coef()) {
        if (((n % 2) + 2) % 2 == 0)
            even += c;
        else
            odd += c;
    }
    for (const auto& [n, c] : o.y_coef()) ys += c;
    return even == odd && odd == ys;
}

std::string describe(const GUElement& g) {
    std::ostringstream out;
    bool first = true;
    append_terms(out, first, g.t2_coef(), "t2");
    append_terms(out, first, g.h2_coef(), "h2");
    append_bit(out, first, g.m_bit(), "h1_0");
    append_bit(out, first, g.q_bit(), "q2_0");
    if (first) return "0";
    return out.str();
}

std::string describe(const OElement& o) {
    std::ostringstream out;
    bool first = true;
    append_terms(out, first, o.x_coef(), "x");
    append_terms(out, first, o.y_coef(), "y");
    if (first) return "0";
    return out.str();
}

}  // namespace oinv
