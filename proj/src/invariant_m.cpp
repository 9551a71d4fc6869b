#include "oinv/invariant_m.hpp"

#include <string>
#include <utility>

#include "oinv/errors.hpp"

namespace oinv {

namespace {

std::size_t unsigned_genus(std::int64_t genus) {
    if (genus < 0) throw DomainError("genus must be non-negative");
    return static_cast<std::size_t>(genus);
}

void require_same_genus(std::int64_t a, std::int64_t b) {
    if (a != b)
        throw DomainError("genus mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

void check_diffeo(const DiffeoAction& d) {
    const std::size_t g = unsigned_genus(d.genus);
    if (d.h_star.rows() != 2 * g || d.h_star.cols() != 2 * g)
        throw DomainError("h_star must be 2g x 2g for genus " + std::to_string(d.genus));
    if (gf2::rank(d.h_star) != 2 * g) throw DomainError("h_star is singular");
    const gf2::Matrix j = gf2::Matrix::standard_symplectic(g);
    if (gf2::mat_mul(gf2::mat_mul(gf2::transpose(d.h_star), j), d.h_star) != j)
        throw DomainError("h_star does not preserve the intersection form");
}

Z2 m_diffeo(const DiffeoAction& d) {
    check_diffeo(d);
    const std::size_t g = unsigned_genus(d.genus);
    const gf2::Matrix diff = gf2::mat_add(d.h_star, gf2::Matrix::identity(2 * g));
    return Z2(static_cast<long long>(gf2::rank(diff)));
}

void check_embedding(const EmbeddingSides& e) {
    const std::size_t g = unsigned_genus(e.genus);
    if (e.map0.cols() != 2 * g || e.map1.cols() != 2 * g)
        throw DomainError("side maps must have 2g columns for genus " + std::to_string(e.genus));
    if (e.c_side != -1 && e.c_side != 1)
        throw DomainError("compact side label must be -1 or +1");
    (void)lagrangian_dual_bases(e);
}

DualBases dualize(std::vector<gf2::Vector> a_basis, std::vector<gf2::Vector> b_basis,
                  std::int64_t genus) {
    const std::size_t g = unsigned_genus(genus);
    if (a_basis.size() != g || b_basis.size() != g)
        throw DomainError("not a valid side-kernel for genus " + std::to_string(genus));
    const gf2::Matrix j = gf2::Matrix::standard_symplectic(g);

    // pairing[i][j] = a_i . J b_j
    gf2::Matrix pairing(g, g);
    for (std::size_t i = 0; i < g; ++i) {
        const gf2::Vector ja = gf2::mat_vec(j, a_basis[i]);
        for (std::size_t k = 0; k < g; ++k) pairing.set(i, k, gf2::dot(ja, b_basis[k]));
    }
    const auto inv = gf2::inverse(pairing);
    if (!inv) throw DomainError("cannot form dual basis: kernel pairing is degenerate");

    // b'_i = sum_k (P^-T)[i][k] b_k turns the pairing matrix into the identity
    const gf2::Matrix coeffs = gf2::transpose(*inv);
    std::vector<gf2::Vector> b_dual;
    b_dual.reserve(g);
    for (std::size_t i = 0; i < g; ++i) {
        gf2::Vector v(2 * g);
        for (std::size_t k = 0; k < g; ++k)
            if (coeffs.get(i, k)) v ^= b_basis[k];
        b_dual.push_back(std::move(v));
    }
    return DualBases{std::move(a_basis), std::move(b_dual)};
}

DualBases lagrangian_dual_bases(const EmbeddingSides& e) {
    const std::size_t g = unsigned_genus(e.genus);
    if (e.map0.cols() != 2 * g || e.map1.cols() != 2 * g)
        throw DomainError("side maps must have 2g columns for genus " + std::to_string(e.genus));
    return dualize(gf2::kernel_basis(e.map0), gf2::kernel_basis(e.map1), e.genus);
}

Z2 m_from_bases(const DualBases& first, const DualBases& second, std::int64_t genus) {
    const std::size_t g = unsigned_genus(genus);
    std::vector<gf2::Vector> diffs;
    diffs.reserve(2 * g);
    for (std::size_t i = 0; i < g; ++i) diffs.push_back(second.a[i] ^ first.a[i]);
    for (std::size_t i = 0; i < g; ++i) diffs.push_back(second.b[i] ^ first.b[i]);
    const std::size_t dim = gf2::rank(gf2::Matrix::from_rows(diffs, 2 * g));
    return Z2(static_cast<long long>(dim));
}

Z2 m_embeddings(const EmbeddingSides& e, const EmbeddingSides& e2) {
    require_same_genus(e.genus, e2.genus);
    return m_from_bases(lagrangian_dual_bases(e), lagrangian_dual_bases(e2), e.genus);
}

int epsilon_pair(const EmbeddingSides& e, const EmbeddingSides& e2) {
    require_same_genus(e.genus, e2.genus);
    if (e.c_side == e2.c_side) return 0;
    return e.c_side == -1 ? 1 : -1;
}

Int u_diff_embeddings(const EmbeddingSides& e, const EmbeddingSides& e2) {
    return Int(1 - e.genus) * Int(epsilon_pair(e, e2));
}

Z2 q_diff_embeddings(const EmbeddingSides& e, const EmbeddingSides& e2) {
    const Z2 eps_hat(e.c_side == e2.c_side ? 0 : 1);
    const Z2 m = m_embeddings(e, e2);
    return m + Z2(1 - e.genus) * eps_hat;
}

Z2 q_diff_diffeo(const DiffeoAction& d) {
    const Z2 eps(d.orientation == Orientation::Reversing ? 1 : 0);
    return m_diffeo(d) + Z2(1 - d.genus) * eps;
}

}  // namespace oinv
