#pragma once

#include <cstdint>
#include <vector>

#include "oinv/gf2.hpp"
#include "oinv/ints.hpp"
#include "oinv/z2.hpp"

namespace oinv {

enum class Orientation : std::uint8_t { Preserving, Reversing };

// Action of a surface diffeomorphism on first homology mod 2, expressed
// in a basis where the intersection form is the standard symplectic
// matrix. orientation carries the data the homology action cannot see.
struct DiffeoAction {
    std::int64_t genus = 0;
    gf2::Matrix h_star;
    Orientation orientation = Orientation::Preserving;
};

// h_star must be 2g x 2g, invertible, and preserve the intersection form.
void check_diffeo(const DiffeoAction& d);

// rank(h_star - Id) mod 2.
Z2 m_diffeo(const DiffeoAction& d);

// Homology data of an embedding: map0 and map1 are the maps induced on
// H_1(F; Z/2) by inclusion into the compact and non-compact complement
// pieces, as r x 2g matrices in the standard symplectic basis. c_side is
// the degree label of the compact side.
struct EmbeddingSides {
    std::int64_t genus = 0;
    gf2::Matrix map0, map1;
    int c_side = -1;
};

// Kernel dimensions must both equal g and the two kernels must pair
// nondegenerately under the intersection form.
void check_embedding(const EmbeddingSides& e);

struct DualBases {
    std::vector<gf2::Vector> a;  // kernel basis of map0
    std::vector<gf2::Vector> b;  // kernel basis of map1, normalized so a_i . b_j = delta_ij
};

// Runs the dual-basis construction on explicitly supplied kernel bases;
// exposed so tests can re-run it under random changes of kernel basis.
DualBases dualize(std::vector<gf2::Vector> a_basis, std::vector<gf2::Vector> b_basis,
                  std::int64_t genus);

DualBases lagrangian_dual_bases(const EmbeddingSides& e);

// Rank mod 2 of the span of the componentwise basis differences.
Z2 m_from_bases(const DualBases& first, const DualBases& second, std::int64_t genus);

Z2 m_embeddings(const EmbeddingSides& e, const EmbeddingSides& e2);

// 0 when the compact sides carry the same degree label, +1 for a
// (-1, +1) pair, -1 for a (+1, -1) pair.
int epsilon_pair(const EmbeddingSides& e, const EmbeddingSides& e2);

// U difference (1-g) * epsilon.
Int u_diff_embeddings(const EmbeddingSides& e, const EmbeddingSides& e2);

// Q differences: M plus the mod-2 epsilon term.
Z2 q_diff_embeddings(const EmbeddingSides& e, const EmbeddingSides& e2);
Z2 q_diff_diffeo(const DiffeoAction& d);

}  // namespace oinv
