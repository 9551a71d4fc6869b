#include "oinv/census.hpp"

#include <sstream>

#include "oinv/errors.hpp"

namespace oinv {

namespace {

void require_even_counts(const Census& c) {
    for (const auto& [m, count] : c.n)
        if (!is_even(count))
            throw DomainError("triple point count N_" + std::to_string(m) + " = " +
                              count.get_str() + " is odd");
}

void render_map(std::ostringstream& out, const std::map<std::int64_t, Int>& map) {
    out << "{";
    bool first = true;
    for (const auto& [m, v] : map) {
        if (!first) out << ", ";
        out << m << ": " << v.get_str();
        first = false;
    }
    out << "}";
}

}  // namespace

void prune(Census& c) {
    std::erase_if(c.chi, [](const auto& kv) { return kv.second == 0; });
    std::erase_if(c.n, [](const auto& kv) { return kv.second == 0; });
}

OElement k_of(const Census& c) {
    require_even_counts(c);
    OElement out;
    for (const auto& [m, chi] : c.chi) out.add_x(m, chi);
    for (const auto& [m, count] : c.n) out.add_y(m, half_exact(count));
    return out;
}

GUElement fk_of(const Census& c) {
    require_even_counts(c);
    GUElement out;
    for (const auto& [m, chi] : c.chi) {
        for (const auto& [k, sign] : ranged_index_list(plus_half(-1), plus_half(floor_div(m, 2))))
            out.add_h2(m - 2 * k, sign > 0 ? chi : Int(-chi));
    }
    for (const auto& [m, count] : c.n) {
        const Int half = half_exact(count);
        out.add_t2(m, half);
        for (const auto& [k, sign] : ranged_index_list(plus_half(-1), plus_half(m - 1)))
            out.add_h2(k, sign > 0 ? Int(-half) : half);
    }
    return out;
}

Int u_of(const Census& c) {
    require_even_counts(c);
    Int total = 0;
    for (const auto& [m, chi] : c.chi) total += chi * Int(floor_div(m + 2, 2));
    for (const auto& [m, count] : c.n) total -= Int(m) * half_exact(count);
    return total;
}

Z2 uhat_of(const Census& c) { return parity(u_of(c)); }

Census standard_census(std::int64_t genus, int c_side) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    if (c_side != -1 && c_side != 1) throw DomainError("compact side label must be -1 or +1");
    Census c;
    c.genus = genus;
    c.chi[0] = 2 - genus;
    c.chi[c_side] = 1 - genus;
    prune(c);
    return c;
}

Census mirror(const Census& c) {
    Census out;
    out.genus = c.genus;
    for (const auto& [m, chi] : c.chi) out.chi[-m] = chi;
    for (const auto& [m, count] : c.n) out.n[3 - m] = count;
    return out;
}

bool CensusReport::clean() const {
    return odd_counts.empty() && negative_counts.empty() && even_identity.ok && odd_identity.ok;
}

CensusReport validate(const Census& c) {
    CensusReport report;
    Int total = 0;
    for (const auto& [m, count] : c.n) {
        if (!is_even(count)) report.odd_counts.push_back(m);
        if (count < 0) report.negative_counts.push_back(m);
        total += count;
    }
    Int even_sum = 0, odd_sum = 0;
    for (const auto& [m, chi] : c.chi) {
        if (((m % 2) + 2) % 2 == 0)
            even_sum += chi;
        else
            odd_sum += chi;
    }
    report.even_identity.expected = 2 - c.genus;
    report.odd_identity.expected = 1 - c.genus;
    if (is_even(total)) {
        const Int half = half_exact(total);
        report.even_identity.value = even_sum - half;
        report.odd_identity.value = odd_sum - half;
        report.even_identity.ok = *report.even_identity.value == report.even_identity.expected;
        report.odd_identity.ok = *report.odd_identity.value == report.odd_identity.expected;
    }
    return report;
}

std::string describe(const Census& c) {
    std::ostringstream out;
    out << "genus: " << c.genus << "\nchambers: ";
    render_map(out, c.chi);
    out << "\ntriple_points: ";
    render_map(out, c.n);
    out << "\n";
    return out.str();
}

}  // namespace oinv
