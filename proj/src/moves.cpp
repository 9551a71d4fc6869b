#include "oinv/moves.hpp"

#include "oinv/errors.hpp"

namespace oinv {

namespace {

void add_entry(std::map<std::int64_t, std::int64_t>& map, std::int64_t key, std::int64_t v) {
    if (v == 0) return;
    auto [it, inserted] = map.try_emplace(key, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0) map.erase(it);
    }
}

}  // namespace

MoveDelta census_delta(const CESymbol& s) {
    require_valid(s);
    const std::int64_t m = s.deg;
    const std::int64_t a = s.sup;
    MoveDelta d;
    switch (s.family) {
        case CEFamily::E:
        case CEFamily::H:
            add_entry(d.d_chi, m + a - 2, 1);
            add_entry(d.d_chi, m - a, -1);
            break;
        case CEFamily::T:
            add_entry(d.d_chi, m + a - 3, 1);
            add_entry(d.d_chi, m - a, 1);
            add_entry(d.d_n, m, 2);
            break;
        case CEFamily::Q:
            add_entry(d.d_chi, m + a - 4, 1);
            add_entry(d.d_chi, m - a, -1);
            add_entry(d.d_n, m, 2 * a - 4);
            add_entry(d.d_n, m - 1, 4 - 2 * a);
            break;
    }
    return d;
}

Census apply_move(const Census& c, const CESymbol& s, MoveDir dir) {
    const MoveDelta delta = census_delta(s);
    const std::int64_t sign = dir == MoveDir::Positive ? 1 : -1;
    Census out = c;
    for (const auto& [m, v] : delta.d_chi) {
        auto [it, inserted] = out.chi.try_emplace(m, sign * v);
        if (!inserted) {
            it->second += sign * v;
            if (it->second == 0) out.chi.erase(it);
        }
    }
    for (const auto& [m, v] : delta.d_n) {
        auto [it, inserted] = out.n.try_emplace(m, sign * v);
        if (!inserted) it->second += sign * v;
        if (it->second < 0)
            throw DomainError("move " + format_symbol(s) + (sign > 0 ? ":+" : ":-") +
                              " not applicable: N_" + std::to_string(m) + " would become " +
                              it->second.get_str());
        if (it->second == 0) out.n.erase(it);
    }
    return out;
}

Census apply_sequence(const Census& c, std::span<const Move> moves) {
    Census current = c;
    for (std::size_t i = 0; i < moves.size(); ++i) {
        try {
            current = apply_move(current, moves[i].symbol, moves[i].dir);
        } catch (const DomainError& e) {
            throw DomainError("move " + std::to_string(i) + " of " + std::to_string(moves.size()) +
                              " failed: " + e.what());
        }
    }
    return current;
}

Move parse_move(std::string_view text) {
    const auto colon = text.rfind(':');
    if (colon == std::string_view::npos || colon + 2 != text.size())
        throw ParseError("bad move '" + std::string(text) + "' (expected SYMBOL:+ or SYMBOL:-)");
    const char dir = text[colon + 1];
    if (dir != '+' && dir != '-')
        throw ParseError("bad move direction '" + std::string(text) + "'");
    return Move{parse_symbol(text.substr(0, colon)),
                dir == '+' ? MoveDir::Positive : MoveDir::Negative};
}

std::string format_move(const Move& m) {
    return format_symbol(m.symbol) + (m.dir == MoveDir::Positive ? ":+" : ":-");
}

}  // namespace oinv
