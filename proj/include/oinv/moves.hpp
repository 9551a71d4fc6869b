#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oinv/census.hpp"
#include "oinv/delta1.hpp"

namespace oinv {

// Census change of one codimension-one event crossed in the positive
// co-orientation direction. d_n values are even; both maps merge
// coincident indices and store no zeros.
struct MoveDelta {
    std::map<std::int64_t, std::int64_t> d_chi;
    std::map<std::int64_t, std::int64_t> d_n;
    friend bool operator==(const MoveDelta&, const MoveDelta&) = default;
};

enum class MoveDir : std::uint8_t { Positive, Negative };

struct Move {
    CESymbol symbol;
    MoveDir dir;
    friend bool operator==(const Move&, const Move&) = default;
};

// Chamber and triple-point bookkeeping per event type:
//   E a@m, H a@m: chi[m+a-2] += 1, chi[m-a] -= 1
//   T a@m:        chi[m+a-3] += 1, chi[m-a] += 1, n[m] += 2
//   Q a@m:        chi[m+a-4] += 1, chi[m-a] -= 1, n[m] += 2a-4, n[m-1] += 4-2a
// H1 and Q2 collapse to the zero delta (the one-sided strata).
MoveDelta census_delta(const CESymbol& s);

// Crossing the stratum: positive applies the delta, negative applies its
// negation. Fails when a triple point count would go negative.
Census apply_move(const Census& c, const CESymbol& s, MoveDir dir);

// Left fold of apply_move; the error of an inapplicable move names the
// failing position in the sequence.
Census apply_sequence(const Census& c, std::span<const Move> moves);

Move parse_move(std::string_view text);  // "T3@0:+"
std::string format_move(const Move& m);

}  // namespace oinv
