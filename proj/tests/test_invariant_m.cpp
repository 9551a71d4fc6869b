#include <doctest.h>

#include "helpers.hpp"
#include "oinv/errors.hpp"
#include "oinv/invariant_m.hpp"

using namespace oinv;
using testutil::Rng;

namespace {

gf2::Matrix from_bits(std::initializer_list<std::initializer_list<int>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    gf2::Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        std::size_t j = 0;
        for (int bit : row) m.set(i, j++, bit != 0);
        ++i;
    }
    return m;
}

// g=1 torus reference data: map0 kills a=(1,0), map1 kills b=(0,1).
EmbeddingSides torus_standard(int c_side = -1) {
    return EmbeddingSides{1, from_bits({{0, 1}}), from_bits({{1, 0}}), c_side};
}

}  // namespace

TEST_CASE("m_diffeo on reference actions") {
    for (std::int64_t g = 0; g <= 6; ++g) {
        const DiffeoAction identity{g, gf2::Matrix::identity(2 * g), Orientation::Preserving};
        CHECK(m_diffeo(identity) == Z2(0));
    }

    const DiffeoAction transvect{1, from_bits({{1, 1}, {0, 1}}), Orientation::Preserving};
    CHECK(m_diffeo(transvect) == Z2(1));

    // two independent transvections, genus 2: rank(h - 1) = 2
    const DiffeoAction doubled{
        2, from_bits({{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
        Orientation::Preserving};
    CHECK(m_diffeo(doubled) == Z2(0));
}

TEST_CASE("m_diffeo rejects bad actions") {
    CHECK_THROWS_AS(m_diffeo(DiffeoAction{1, gf2::Matrix(2, 2), Orientation::Preserving}),
                    DomainError);  // singular
    CHECK_THROWS_AS(m_diffeo(DiffeoAction{1, from_bits({{1, 1}, {1, 1}}), Orientation::Preserving}),
                    DomainError);  // singular
    CHECK_THROWS_AS(
        m_diffeo(DiffeoAction{2, gf2::Matrix::identity(2), Orientation::Preserving}),
        DomainError);  // wrong size
    // invertible but not symplectic: swaps a1 with b1 only partially
    CHECK_THROWS_AS(
        m_diffeo(DiffeoAction{2,
                              from_bits({{0, 1, 0, 0},
                                         {1, 0, 0, 0},
                                         {0, 0, 1, 0},
                                         {0, 0, 1, 1}}),
                              Orientation::Preserving}),
        DomainError);
}

TEST_CASE("m_diffeo equals m of the inverse action") {
    Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const std::int64_t g = testutil::rand_int(rng, 1, 6);
        const gf2::Matrix h = testutil::random_symplectic(rng, g);
        const auto h_inv = gf2::inverse(h);
        REQUIRE(h_inv.has_value());
        const DiffeoAction fwd{g, h, Orientation::Preserving};
        const DiffeoAction back{g, *h_inv, Orientation::Preserving};
        CHECK(m_diffeo(fwd) == m_diffeo(back));
    }
}

TEST_CASE("random symplectic products pass the invariant check") {
    Rng rng(52);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t g = testutil::rand_int(rng, 1, 6);
        check_diffeo(DiffeoAction{g, testutil::random_symplectic(rng, g),
                                  Orientation::Preserving});
    }
}

TEST_CASE("dual bases on the standard torus") {
    const DualBases bases = lagrangian_dual_bases(torus_standard());
    REQUIRE(bases.a.size() == 1);
    REQUIRE(bases.b.size() == 1);
    CHECK(bases.a[0] == gf2::Vector::unit(2, 0));
    CHECK(bases.b[0] == gf2::Vector::unit(2, 1));

    // swapped roles
    const EmbeddingSides swapped{1, from_bits({{1, 0}}), from_bits({{0, 1}}), -1};
    const DualBases swapped_bases = lagrangian_dual_bases(swapped);
    CHECK(swapped_bases.a[0] == gf2::Vector::unit(2, 1));
    CHECK(swapped_bases.b[0] == gf2::Vector::unit(2, 0));
}

TEST_CASE("dual bases pairing is the identity") {
    Rng rng(53);
    for (int trial = 0; trial < 150; ++trial) {
        const std::int64_t g = testutil::rand_int(rng, 1, 6);
        const EmbeddingSides e = testutil::random_embedding(rng, g, -1);
        const DualBases bases = lagrangian_dual_bases(e);
        const gf2::Matrix j = gf2::Matrix::standard_symplectic(g);
        for (std::size_t i = 0; i < bases.a.size(); ++i) {
            CHECK(gf2::mat_vec(e.map0, bases.a[i]).is_zero());
            CHECK(gf2::mat_vec(e.map1, bases.b[i]).is_zero());
            for (std::size_t k = 0; k < bases.b.size(); ++k)
                CHECK(gf2::dot(bases.a[i], gf2::mat_vec(j, bases.b[k])) == (i == k));
        }
    }
}

TEST_CASE("dual basis construction rejects degenerate data") {
    // both maps kill the same lagrangian: pairing of the kernels is zero
    const EmbeddingSides degenerate{1, from_bits({{0, 1}}), from_bits({{0, 1}}), -1};
    CHECK_THROWS_AS(lagrangian_dual_bases(degenerate), DomainError);
    // kernel too large
    const EmbeddingSides flat{1, gf2::Matrix(1, 2), from_bits({{1, 0}}), -1};
    CHECK_THROWS_AS(lagrangian_dual_bases(flat), DomainError);
}

TEST_CASE("m_embeddings on reference pairs") {
    CHECK(m_embeddings(torus_standard(), torus_standard()) == Z2(0));

    // second embedding's non-compact side kills a + b
    const EmbeddingSides tilted{1, from_bits({{0, 1}}), from_bits({{1, 1}}), -1};
    CHECK(m_embeddings(torus_standard(), tilted) == Z2(1));

    const EmbeddingSides other_genus{2, gf2::Matrix(0, 4), gf2::Matrix(0, 4), -1};
    CHECK_THROWS_AS(m_embeddings(torus_standard(), other_genus), DomainError);
}

TEST_CASE("m_embeddings is independent of the internal kernel bases") {
    Rng rng(54);
    for (int trial = 0; trial < 150; ++trial) {
        const std::int64_t g = testutil::rand_int(rng, 1, 5);
        const auto [e, e2] = testutil::random_embedding_pair(rng, g);
        const Z2 reference = m_embeddings(e, e2);
        for (int change = 0; change < 4; ++change) {
            const DualBases left = testutil::scrambled_dual_bases(rng, e);
            const DualBases right = testutil::scrambled_dual_bases(rng, e2);
            CHECK(m_from_bases(left, right, g) == reference);
        }
        CHECK(m_embeddings(e, e) == Z2(0));
        const DualBases self_scrambled = testutil::scrambled_dual_bases(rng, e);
        CHECK(m_from_bases(self_scrambled, testutil::scrambled_dual_bases(rng, e), g) == Z2(0));
    }
}

TEST_CASE("pairs without a common quadratic refinement have no consistent M") {
    // Both kernels of e and the a-kernel of ep are isotropic for the
    // standard refinement q(x|y) = x.y, but ep's b-kernel contains
    // a1 + b1 with q = 1. No embedding pair in one regular homotopy
    // class produces such data, and the step-3 rank parity genuinely
    // depends on the basis choice here. The generator used by the
    // randomized suites draws both frames from the q-preserving group,
    // so this cannot occur there.
    const gf2::Matrix map0 = from_bits({{0, 0, 1, 0}, {0, 0, 0, 1}});   // kernel a1, a2
    const gf2::Matrix map1 = from_bits({{1, 0, 0, 0}, {0, 1, 0, 0}});   // kernel b1, b2
    const gf2::Matrix map1p = from_bits({{1, 0, 1, 0}, {0, 1, 0, 0}});  // kernel a1+b1, b2
    const EmbeddingSides e{2, map0, map1, -1};
    const EmbeddingSides ep{2, map0, map1p, -1};

    const DualBases reference = lagrangian_dual_bases(e);
    bool seen[2] = {false, false};
    for (int bits = 0; bits < 16; ++bits) {
        gf2::Matrix change(2, 2);
        for (int i = 0; i < 4; ++i) change.set(i / 2, i % 2, ((bits >> i) & 1) != 0);
        if (gf2::rank(change) != 2) continue;
        auto a_basis = gf2::kernel_basis(ep.map0);
        std::vector<gf2::Vector> scrambled;
        for (std::size_t i = 0; i < 2; ++i) {
            gf2::Vector v(4);
            for (std::size_t k = 0; k < 2; ++k)
                if (change.get(i, k)) v ^= a_basis[k];
            scrambled.push_back(v);
        }
        const DualBases primed = dualize(scrambled, gf2::kernel_basis(ep.map1), 2);
        seen[m_from_bases(reference, primed, 2).value()] = true;
    }
    CHECK(seen[0]);
    CHECK(seen[1]);
}

TEST_CASE("epsilon and the u/q differences") {
    const EmbeddingSides inside = torus_standard(-1);
    const EmbeddingSides outside = torus_standard(1);

    CHECK(epsilon_pair(inside, inside) == 0);
    CHECK(epsilon_pair(inside, outside) == 1);
    CHECK(epsilon_pair(outside, inside) == -1);

    CHECK(u_diff_embeddings(inside, inside) == 0);
    CHECK(u_diff_embeddings(inside, outside) == 0);  // genus 1 kills the factor

    Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
        const std::int64_t g = testutil::rand_int(rng, 0, 5);
        const auto [e, e2] = testutil::random_embedding_pair(rng, g);
        CHECK(u_diff_embeddings(e, e2) == Int(1 - g) * Int(epsilon_pair(e, e2)));
        // the composition identity: q = m + uhat with independent inputs
        const Z2 uhat = parity(u_diff_embeddings(e, e2));
        CHECK(q_diff_embeddings(e, e2) == m_embeddings(e, e2) + uhat);
    }
}

TEST_CASE("q difference for a diffeomorphism") {
    const DiffeoAction reversing{0, gf2::Matrix(0, 0), Orientation::Reversing};
    CHECK(m_diffeo(reversing) == Z2(0));
    CHECK(q_diff_diffeo(reversing) == Z2(1));  // (1-0) * eps

    const DiffeoAction preserving{3, gf2::Matrix::identity(6), Orientation::Preserving};
    CHECK(q_diff_diffeo(preserving) == Z2(0));

    const DiffeoAction genus2{2, gf2::Matrix::identity(4), Orientation::Reversing};
    CHECK(q_diff_diffeo(genus2) == Z2(1));  // (1-2) odd
}
