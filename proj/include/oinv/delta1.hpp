#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "oinv/abelian.hpp"
#include "oinv/errors.hpp"

namespace oinv {

enum class CEFamily : std::uint8_t { E, H, T, Q };

// One decorated codimension-one event symbol, e.g. T3@-2: family letter,
// superscript, and the degree at the event.
struct CESymbol {
    CEFamily family;
    int sup;
    std::int64_t deg;
    friend bool operator==(const CESymbol&, const CESymbol&) = default;
};

// Valid (family, superscript) pairs: E 0..2, H 1..2, T 0..3, Q 2..4.
bool ce_valid(CEFamily family, int sup);
void require_valid(const CESymbol& s);

CESymbol parse_symbol(std::string_view text);  // "T3@-2"; throws ParseError
std::string format_symbol(const CESymbol& s);

// The twelve (family, sup) pairs in display order E0,E1,E2,H1,H2,T0..T3,Q2..Q4.
const std::vector<std::pair<CEFamily, int>>& ce_alphabet();
// All 12*(hi-lo+1) symbols with lo <= deg <= hi, degree-major.
std::vector<CESymbol> symbols_in_window(std::int64_t lo, std::int64_t hi);

/**
 * Seed values determining a consistent symbol function: free choices on
 * T2[m] and H2[m], 2-torsion choices for H1_0 and Q2_0. The coefficient
 * group G needs value-initialized zero, +, binary and unary -, and ==;
 * instantiated with GUElement, OElement, Int and Z2.
 */
template <class G>
struct SeedAssignment {
    std::function<G(std::int64_t)> t2;
    std::function<G(std::int64_t)> h2;
    G h1{};
    G q2{};
};

template <class G>
void check_seeds(const SeedAssignment<G>& seed) {
    if (!seed.t2 || !seed.h2) throw DomainError("seed assignment is missing a value function");
    if (!(seed.h1 + seed.h1 == G{}) || !(seed.q2 + seed.q2 == G{}))
        throw DomainError("seed torsion values must satisfy 2x = 0");
}

// Extends the seeds to every decorated symbol:
//   1. E1[m] = H1[m] = H1_0
//   2. E2[m] = -E0[m] = H2[m]
//   3. T3[m] = T2[m] + H2[m] - H2[m-1]
//   4. T0[m] = T3[m], T1[m] = T2[m]
//   5. Q2[m] = Q2_0
//   6. Q3[m] = Q2_0 + T2[m] - T2[m-1]
//   7. Q4[m] = Q2_0 + 2(T2[m] - T2[m-1]) + H2[m] - 2 H2[m-1] + H2[m-2]
template <class G>
G seven_step_eval(const SeedAssignment<G>& seed, const CESymbol& s) {
    require_valid(s);
    check_seeds(seed);
    const std::int64_t m = s.deg;
    switch (s.family) {
        case CEFamily::E:
            if (s.sup == 1) return seed.h1;
            if (s.sup == 2) return seed.h2(m);
            return -seed.h2(m);
        case CEFamily::H:
            return s.sup == 1 ? seed.h1 : seed.h2(m);
        case CEFamily::T: {
            if (s.sup == 1 || s.sup == 2) return seed.t2(m);
            return seed.t2(m) + seed.h2(m) - seed.h2(m - 1);
        }
        case CEFamily::Q: {
            if (s.sup == 2) return seed.q2;
            if (s.sup == 3) return seed.q2 + seed.t2(m) - seed.t2(m - 1);
            const G tstep = seed.t2(m) - seed.t2(m - 1);
            return seed.q2 + tstep + tstep + seed.h2(m) - seed.h2(m - 1) - seed.h2(m - 1) +
                   seed.h2(m - 2);
        }
    }
    throw DomainError("invalid CE symbol");
}

struct RelationViolation {
    std::string relation;
    std::int64_t deg;
    std::string lhs, rhs;
};

// Checks every defining relation instance over lo <= m <= hi against a
// total symbol function g. Empty result means g is consistent on the
// window.
template <class G, class Fn>
std::vector<RelationViolation> check_relations(Fn&& g, std::int64_t lo, std::int64_t hi) {
    std::vector<RelationViolation> out;
    auto expect = [&out](const char* relation, std::int64_t m, const G& lhs, const G& rhs) {
        if (!(lhs == rhs)) out.push_back({relation, m, describe(lhs), describe(rhs)});
    };
    auto at = [&g](CEFamily f, int a, std::int64_t m) { return g(CESymbol{f, a, m}); };
    using enum CEFamily;
    for (std::int64_t m = lo; m <= hi; ++m) {
        const G e0 = at(E, 0, m), e1 = at(E, 1, m), e2 = at(E, 2, m);
        const G h1v = at(H, 1, m), h2v = at(H, 2, m);
        const G t0 = at(T, 0, m), t1 = at(T, 1, m), t2v = at(T, 2, m), t3 = at(T, 3, m);
        const G q2v = at(Q, 2, m), q3 = at(Q, 3, m), q4 = at(Q, 4, m);
        const G h1p = at(H, 1, m - 1), h2p = at(H, 2, m - 1);
        const G t2p = at(T, 2, m - 1), t3p = at(T, 3, m - 1), q2p = at(Q, 2, m - 1);

        expect("E2_m = -E0_m", m, e2, -e0);
        expect("E2_m = H2_m", m, e2, h2v);
        expect("E1_m = H1_m", m, e1, h1v);
        expect("T0_m = T3_m", m, t0, t3);
        expect("T1_m = T2_m", m, t1, t2v);
        expect("2 H1_m = 0", m, h1v + h1v, G{});
        expect("H1_m = H1_{m-1}", m, h1v, h1p);
        expect("2 Q2_m = 0", m, q2v + q2v, G{});
        expect("Q2_m = Q2_{m-1}", m, q2v, q2p);
        expect("H2_m - H2_{m-1} = T3_m - T2_m", m, h2v - h2p, t3 - t2v);
        expect("Q4_m - Q3_m = T3_m - T3_{m-1}", m, q4 - q3, t3 - t3p);
        expect("Q3_m - Q2_m = T2_m - T2_{m-1}", m, q3 - q2v, t2v - t2p);
    }
    return out;
}

// The universal element: generator seeds in the universal group.
GUElement g_universal(const CESymbol& s);

// Matching-tangency indicator (seeds: H1_0 -> 1, everything else 0).
Z2 u_M(const CESymbol& s);
// Quadruple-point indicator (seeds: Q2_0 -> 1, everything else 0).
Z2 u_Q(const CESymbol& s);
// Signed unmatched-tangency weight (seeds: H2[m] -> 1, T2[m] -> 0).
Int u_U(const CESymbol& s);

// Closed forms for the census invariant's symbol function:
//   E/H: x[m+a-2] - x[m-a]
//   T:   x[m+a-3] + x[m-a] + y[m]
//   Q:   x[m+a-4] - x[m-a] + (a-2) y[m] + (2-a) y[m-1]
OElement u_k_closed(const CESymbol& s);

// Relation check for one of the named symbol tables: gu, uk, um, uq, uu.
std::vector<RelationViolation> check_relations_named(std::string_view which, std::int64_t window);

}  // namespace oinv
