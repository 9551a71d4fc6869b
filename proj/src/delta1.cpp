#include "oinv/delta1.hpp"

#include <charconv>

namespace oinv {

namespace {

char family_letter(CEFamily f) {
    switch (f) {
        case CEFamily::E: return 'E';
        case CEFamily::H: return 'H';
        case CEFamily::T: return 'T';
        case CEFamily::Q: return 'Q';
    }
    return '?';
}

}  // namespace

bool ce_valid(CEFamily family, int sup) {
    switch (family) {
        case CEFamily::E: return sup >= 0 && sup <= 2;
        case CEFamily::H: return sup == 1 || sup == 2;
        case CEFamily::T: return sup >= 0 && sup <= 3;
        case CEFamily::Q: return sup >= 2 && sup <= 4;
    }
    return false;
}

void require_valid(const CESymbol& s) {
    if (!ce_valid(s.family, s.sup))
        throw DomainError("invalid CE symbol " + std::string(1, family_letter(s.family)) +
                          std::to_string(s.sup));
}

CESymbol parse_symbol(std::string_view text) {
    auto fail = [&text]() -> ParseError {
        return ParseError("bad CE symbol '" + std::string(text) +
                          "' (expected FAMILY SUP '@' DEG, e.g. T3@-2)");
    };
    if (text.size() < 4) throw fail();
    CEFamily family;
    switch (text[0]) {
        case 'E': family = CEFamily::E; break;
        case 'H': family = CEFamily::H; break;
        case 'T': family = CEFamily::T; break;
        case 'Q': family = CEFamily::Q; break;
        default: throw fail();
    }
    if (text[1] < '0' || text[1] > '9' || text[2] != '@') throw fail();
    const int sup = text[1] - '0';
    if (!ce_valid(family, sup)) throw fail();
    std::int64_t deg = 0;
    const char* begin = text.data() + 3;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, deg);
    if (ec != std::errc{} || ptr != end) throw fail();
    return CESymbol{family, sup, deg};
}

std::string format_symbol(const CESymbol& s) {
    return std::string(1, family_letter(s.family)) + std::to_string(s.sup) + "@" +
           std::to_string(s.deg);
}

const std::vector<std::pair<CEFamily, int>>& ce_alphabet() {
    using enum CEFamily;
    static const std::vector<std::pair<CEFamily, int>> alphabet = {
        {E, 0}, {E, 1}, {E, 2}, {H, 1}, {H, 2}, {T, 0},
        {T, 1}, {T, 2}, {T, 3}, {Q, 2}, {Q, 3}, {Q, 4}};
    return alphabet;
}

std::vector<CESymbol> symbols_in_window(std::int64_t lo, std::int64_t hi) {
    std::vector<CESymbol> out;
    if (hi < lo) return out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1) * ce_alphabet().size());
    for (std::int64_t m = lo; m <= hi; ++m)
        for (const auto& [f, a] : ce_alphabet()) out.push_back(CESymbol{f, a, m});
    return out;
}

GUElement g_universal(const CESymbol& s) {
    static const SeedAssignment<GUElement> seed{
        [](std::int64_t m) { return GUElement::t2(m); },
        [](std::int64_t m) { return GUElement::h2(m); },
        GUElement::h1_0(),
        GUElement::q2_0()};
    return seven_step_eval(seed, s);
}

Z2 u_M(const CESymbol& s) {
    static const SeedAssignment<Z2> seed{[](std::int64_t) { return Z2(0); },
                                         [](std::int64_t) { return Z2(0); }, Z2(1), Z2(0)};
    return seven_step_eval(seed, s);
}

Z2 u_Q(const CESymbol& s) {
    static const SeedAssignment<Z2> seed{[](std::int64_t) { return Z2(0); },
                                         [](std::int64_t) { return Z2(0); }, Z2(0), Z2(1)};
    return seven_step_eval(seed, s);
}

Int u_U(const CESymbol& s) {
    static const SeedAssignment<Int> seed{[](std::int64_t) { return Int(0); },
                                          [](std::int64_t) { return Int(1); }, Int(0), Int(0)};
    return seven_step_eval(seed, s);
}

OElement u_k_closed(const CESymbol& s) {
    require_valid(s);
    const std::int64_t m = s.deg;
    const std::int64_t a = s.sup;
    OElement out;
    switch (s.family) {
        case CEFamily::E:
        case CEFamily::H:
            out.add_x(m + a - 2, 1);
            out.add_x(m - a, -1);
            break;
        case CEFamily::T:
            out.add_x(m + a - 3, 1);
            out.add_x(m - a, 1);
            out.add_y(m, 1);
            break;
        case CEFamily::Q:
            out.add_x(m + a - 4, 1);
            out.add_x(m - a, -1);
            out.add_y(m, a - 2);
            out.add_y(m - 1, 2 - a);
            break;
    }
    return out;
}

std::vector<RelationViolation> check_relations_named(std::string_view which, std::int64_t window) {
    const std::int64_t lo = -window, hi = window;
    if (which == "gu")
        return check_relations<GUElement>([](const CESymbol& s) { return g_universal(s); }, lo, hi);
    if (which == "uk")
        return check_relations<OElement>([](const CESymbol& s) { return u_k_closed(s); }, lo, hi);
    if (which == "um")
        return check_relations<Z2>([](const CESymbol& s) { return u_M(s); }, lo, hi);
    if (which == "uq")
        return check_relations<Z2>([](const CESymbol& s) { return u_Q(s); }, lo, hi);
    if (which == "uu")
        return check_relations<Int>([](const CESymbol& s) { return u_U(s); }, lo, hi);
    throw ParseError("unknown symbol table '" + std::string(which) +
                     "' (expected gu, uk, um, uq or uu)");
}

}  // namespace oinv
