#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "oinv/census.hpp"
#include "oinv/delta1.hpp"
#include "oinv/errors.hpp"
#include "oinv/gf2.hpp"
#include "oinv/invariant_m.hpp"
#include "oinv/moves.hpp"

namespace testutil {

using Rng = std::mt19937_64;

inline std::int64_t rand_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

inline oinv::GUElement random_gu(Rng& rng, int terms = 6, std::int64_t window = 8,
                                 std::int64_t coef_mag = 9) {
    oinv::GUElement out;
    for (int i = 0; i < terms; ++i) {
        const std::int64_t m = rand_int(rng, -window, window);
        const oinv::Int c = rand_int(rng, -coef_mag, coef_mag);
        if (rand_int(rng, 0, 1) == 0)
            out.add_t2(m, c);
        else
            out.add_h2(m, c);
    }
    if (rand_int(rng, 0, 1)) out.add_m_bit(oinv::Z2(1));
    if (rand_int(rng, 0, 1)) out.add_q_bit(oinv::Z2(1));
    return out;
}

inline oinv::OElement random_o(Rng& rng, int terms = 6, std::int64_t window = 8,
                               std::int64_t coef_mag = 9) {
    oinv::OElement out;
    for (int i = 0; i < terms; ++i) {
        const std::int64_t n = rand_int(rng, -window, window);
        const oinv::Int c = rand_int(rng, -coef_mag, coef_mag);
        if (rand_int(rng, 0, 1) == 0)
            out.add_x(n, c);
        else
            out.add_y(n, c);
    }
    return out;
}

// Arbitrary census data: any chi, even non-negative counts. Not
// necessarily realizable.
inline oinv::Census random_census(Rng& rng, std::int64_t genus_max = 5, std::int64_t window = 7,
                                  std::int64_t chi_mag = 5) {
    oinv::Census c;
    c.genus = rand_int(rng, 0, genus_max);
    const std::int64_t chambers = rand_int(rng, 0, 6);
    for (std::int64_t i = 0; i < chambers; ++i)
        c.chi[rand_int(rng, -window, window)] = rand_int(rng, -chi_mag, chi_mag);
    const std::int64_t triples = rand_int(rng, 0, 5);
    for (std::int64_t i = 0; i < triples; ++i)
        c.n[rand_int(rng, -window, window)] = 2 * rand_int(rng, 0, 4);
    oinv::prune(c);
    return c;
}

// Census with every triple point count >= floor on the window, so every
// move with degree inside the window applies positively.
inline oinv::Census random_census_rich(Rng& rng, std::int64_t window = 7,
                                       std::int64_t count_floor = 4) {
    oinv::Census c = random_census(rng, 5, window, 5);
    for (std::int64_t m = -window; m <= window; ++m)
        c.n[m] = 2 * rand_int(rng, count_floor / 2, count_floor / 2 + 4);
    oinv::prune(c);
    return c;
}

inline oinv::CESymbol random_symbol(Rng& rng, std::int64_t deg_window = 6) {
    const auto& alphabet = oinv::ce_alphabet();
    const auto& [family, sup] = alphabet[static_cast<std::size_t>(
        rand_int(rng, 0, static_cast<std::int64_t>(alphabet.size()) - 1))];
    return oinv::CESymbol{family, sup, rand_int(rng, -deg_window, deg_window)};
}

// Random applicable move trail from a standard census; skips moves whose
// undo would need absent triple points.
inline oinv::Census random_valid_census(Rng& rng, std::int64_t max_moves = 30,
                                        std::int64_t genus_max = 5) {
    oinv::Census c = oinv::standard_census(rand_int(rng, 0, genus_max),
                                           rand_int(rng, 0, 1) ? 1 : -1);
    const std::int64_t steps = rand_int(rng, 0, max_moves);
    for (std::int64_t i = 0; i < steps; ++i) {
        const oinv::CESymbol s = random_symbol(rng);
        const oinv::MoveDir dir =
            rand_int(rng, 0, 2) ? oinv::MoveDir::Positive : oinv::MoveDir::Negative;
        try {
            c = oinv::apply_move(c, s, dir);
        } catch (const oinv::DomainError&) {
            // inapplicable, try another
        }
    }
    return c;
}

inline oinv::gf2::Vector random_vector(Rng& rng, std::size_t n, bool nonzero = false) {
    oinv::gf2::Vector v(n);
    do {
        for (std::size_t i = 0; i < n; ++i) v.set(i, rand_int(rng, 0, 1) == 1);
    } while (nonzero && v.is_zero());
    return v;
}

inline oinv::gf2::Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    oinv::gf2::Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rand_int(rng, 0, 1) == 1);
    return m;
}

inline oinv::gf2::Matrix random_invertible(Rng& rng, std::size_t n) {
    while (true) {
        const oinv::gf2::Matrix m = random_matrix(rng, n, n);
        if (oinv::gf2::rank(m) == n) return m;
    }
}

// Product of random symplectic transvections.
inline oinv::gf2::Matrix random_symplectic(Rng& rng, std::size_t genus, std::size_t factors = 0) {
    const std::size_t n = 2 * genus;
    if (n == 0) return oinv::gf2::Matrix(0, 0);
    const oinv::gf2::Matrix j = oinv::gf2::Matrix::standard_symplectic(genus);
    if (factors == 0) factors = 3 * genus + 4;
    oinv::gf2::Matrix out = oinv::gf2::Matrix::identity(n);
    for (std::size_t i = 0; i < factors; ++i)
        out = oinv::gf2::mat_mul(oinv::gf2::transvection(random_vector(rng, n, true), j), out);
    return out;
}

// The standard quadratic refinement of the intersection form: q vanishes
// on the a- and b-coordinate lagrangians, q(x|y) = x.y.
inline bool q_std(const oinv::gf2::Vector& v) {
    const std::size_t g = v.size() / 2;
    bool acc = false;
    for (std::size_t i = 0; i < g; ++i) acc ^= v.get(i) && v.get(g + i);
    return acc;
}

// Frame from the orthogonal subgroup preserving q_std: a product of
// transvections along q = 1 vectors. Kernel pairs drawn from a common
// such frame model embeddings within one regular homotopy class, which
// is what the M difference formula is stated for.
inline oinv::gf2::Matrix random_orthogonal_frame(Rng& rng, std::size_t genus,
                                                 std::size_t factors = 0) {
    const std::size_t n = 2 * genus;
    if (n == 0) return oinv::gf2::Matrix(0, 0);
    const oinv::gf2::Matrix j = oinv::gf2::Matrix::standard_symplectic(genus);
    if (factors == 0) factors = 3 * genus + 4;
    oinv::gf2::Matrix out = oinv::gf2::Matrix::identity(n);
    for (std::size_t i = 0; i < factors; ++i) {
        oinv::gf2::Vector v = random_vector(rng, n, true);
        while (!q_std(v)) v = random_vector(rng, n, true);
        out = oinv::gf2::mat_mul(oinv::gf2::transvection(v, j), out);
    }
    return out;
}

// Embedding data built from a random q-isotropic frame: the compact-side
// kernel is the span of the frame's a-columns, the other side the
// b-columns, each presented as the J-pairing against the spanning set
// plus optional redundant rows.
inline oinv::EmbeddingSides random_embedding(Rng& rng, std::int64_t genus, int c_side) {
    const std::size_t g = static_cast<std::size_t>(genus);
    const std::size_t n = 2 * g;
    const oinv::gf2::Matrix j = oinv::gf2::Matrix::standard_symplectic(g);
    const oinv::gf2::Matrix frame = random_orthogonal_frame(rng, g);

    auto side_map = [&](std::size_t col_offset) {
        std::vector<oinv::gf2::Vector> rows;
        rows.reserve(g + 2);
        for (std::size_t i = 0; i < g; ++i) {
            oinv::gf2::Vector col(n);
            for (std::size_t r = 0; r < n; ++r) col.set(r, frame.get(r, col_offset + i));
            rows.push_back(oinv::gf2::mat_vec(j, col));
        }
        // redundant extra rows keep the kernel and vary the presentation
        const std::int64_t extra = rand_int(rng, 0, 2);
        for (std::int64_t i = 0; i < extra; ++i) {
            oinv::gf2::Vector sum(n);
            for (const auto& row : rows)
                if (rand_int(rng, 0, 1)) sum ^= row;
            rows.push_back(sum);
        }
        return oinv::gf2::Matrix::from_rows(rows, n);
    };

    return oinv::EmbeddingSides{genus, side_map(0), side_map(g), c_side};
}

inline std::pair<oinv::EmbeddingSides, oinv::EmbeddingSides> random_embedding_pair(
    Rng& rng, std::int64_t genus) {
    const int side1 = rand_int(rng, 0, 1) ? 1 : -1;
    const int side2 = rand_int(rng, 0, 1) ? 1 : -1;
    return {random_embedding(rng, genus, side1), random_embedding(rng, genus, side2)};
}

// Random invertible change of the two kernel bases followed by
// re-dualization; m_from_bases over these must match m_embeddings.
inline oinv::DualBases scrambled_dual_bases(Rng& rng, const oinv::EmbeddingSides& e) {
    const std::size_t g = static_cast<std::size_t>(e.genus);
    auto scramble = [&](std::vector<oinv::gf2::Vector> basis) {
        const oinv::gf2::Matrix change = random_invertible(rng, g);
        std::vector<oinv::gf2::Vector> out;
        out.reserve(g);
        for (std::size_t i = 0; i < g; ++i) {
            oinv::gf2::Vector v(2 * g);
            for (std::size_t k = 0; k < g; ++k)
                if (change.get(i, k)) v ^= basis[k];
            out.push_back(std::move(v));
        }
        return out;
    };
    return oinv::dualize(scramble(oinv::gf2::kernel_basis(e.map0)),
                         scramble(oinv::gf2::kernel_basis(e.map1)), e.genus);
}

}  // namespace testutil
