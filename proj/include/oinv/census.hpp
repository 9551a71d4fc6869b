#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "oinv/abelian.hpp"

namespace oinv {

/**
 * Combinatorial model of a stable immersion of a closed oriented genus-g
 * surface: chi maps a degree m to the Euler characteristic of the
 * degree-m chamber of the complement, n maps m to the number of triple
 * points of degree m. Finite support, no zero entries stored; triple
 * point counts are even and non-negative for data coming from an actual
 * immersion (validate reports offenders, the evaluators reject odd
 * counts).
 */
struct Census {
    std::int64_t genus = 0;
    std::map<std::int64_t, Int> chi;
    std::map<std::int64_t, Int> n;

    friend bool operator==(const Census&, const Census&) = default;
};

// Drops zero entries so equality is structural.
void prune(Census& c);

// k = sum chi[m] x[m] + sum (n[m]/2) y[m]. Rejects odd counts.
OElement k_of(const Census& c);

// The closed-form invariant with values in K:
//   sum_m chi[m] (sum_{-1/2<k<floor(m/2)+1/2} h2[m-2k])
// + sum_m n[m]/2 (t2[m] - sum_{-1/2<k<m-1/2} h2[k]).
// Computed directly from the double sum; F_map(k_of(c)) is the
// independent route the tests compare against.
GUElement fk_of(const Census& c);

// U = sum chi[m] floor((m+2)/2) - sum m n[m]/2, and its parity.
Int u_of(const Census& c);
Z2 uhat_of(const Census& c);

// Unknotted reference model: chi = {0: 2-g, c_side: 1-g}, no triple
// points. c_side (+1 or -1) is the degree label of the compact side.
Census standard_census(std::int64_t genus, int c_side);

// Effect of reversing ambient orientation: chamber degrees negate,
// triple point degrees map m -> 3-m.
Census mirror(const Census& c);

struct IdentityCheck {
    std::optional<Int> value;  // absent when the total count is odd
    Int expected;
    bool ok = false;
};

struct CensusReport {
    std::vector<std::int64_t> odd_counts;
    std::vector<std::int64_t> negative_counts;
    IdentityCheck even_identity;  // sum chi[2m] - N/2 = 2-g
    IdentityCheck odd_identity;   // sum chi[2m+1] - N/2 = 1-g
    bool clean() const;
};

// Necessary conditions for the data to arise from an immersion; violations
// are reported, never thrown.
CensusReport validate(const Census& c);

std::string describe(const Census& c);

}  // namespace oinv
