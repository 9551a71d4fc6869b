#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "oinv/ints.hpp"
#include "oinv/z2.hpp"

namespace oinv {

// Sparse coefficients indexed by degree. Canonical form: no zero entries,
// so equality is plain structural comparison.
using CoefMap = std::map<std::int64_t, Int>;

/**
 * Element of the universal coefficient group: free abelian part on the
 * generators t2[m] and h2[m] for all integers m, plus two 2-torsion
 * generators h1_0 and q2_0. The subgroup K consists of the elements with
 * both torsion bits clear.
 */
class GUElement {
  public:
    GUElement() = default;

    static GUElement t2(std::int64_t m, Int coef = 1);
    static GUElement h2(std::int64_t m, Int coef = 1);
    static GUElement h1_0();
    static GUElement q2_0();

    const CoefMap& t2_coef() const { return t2_; }
    const CoefMap& h2_coef() const { return h2_; }
    Z2 m_bit() const { return m_bit_; }
    Z2 q_bit() const { return q_bit_; }

    bool is_zero() const;
    bool in_k() const { return m_bit_.is_zero() && q_bit_.is_zero(); }
    GUElement k_projection() const;

    void add_t2(std::int64_t m, const Int& c);
    void add_h2(std::int64_t m, const Int& c);
    void add_m_bit(Z2 b) { m_bit_ += b; }
    void add_q_bit(Z2 b) { q_bit_ += b; }

    GUElement& operator+=(const GUElement& o);
    GUElement& operator-=(const GUElement& o);
    GUElement operator-() const;
    friend GUElement operator+(GUElement a, const GUElement& b) {
        a += b;
        return a;
    }
    friend GUElement operator-(GUElement a, const GUElement& b) {
        a -= b;
        return a;
    }
    friend GUElement operator*(const Int& c, const GUElement& g);
    friend bool operator==(const GUElement&, const GUElement&) = default;

  private:
    CoefMap t2_, h2_;
    Z2 m_bit_, q_bit_;
};

/** Element of the free abelian group on the generators x[n], y[n]. */
class OElement {
  public:
    OElement() = default;

    static OElement x(std::int64_t n, Int coef = 1);
    static OElement y(std::int64_t n, Int coef = 1);

    const CoefMap& x_coef() const { return x_; }
    const CoefMap& y_coef() const { return y_; }

    bool is_zero() const { return x_.empty() && y_.empty(); }

    void add_x(std::int64_t n, const Int& c);
    void add_y(std::int64_t n, const Int& c);

    OElement& operator+=(const OElement& o);
    OElement& operator-=(const OElement& o);
    OElement operator-() const;
    friend OElement operator+(OElement a, const OElement& b) {
        a += b;
        return a;
    }
    friend OElement operator-(OElement a, const OElement& b) {
        a -= b;
        return a;
    }
    friend OElement operator*(const Int& c, const OElement& o);
    friend bool operator==(const OElement&, const OElement&) = default;

  private:
    CoefMap x_, y_;
};

// Half-integers stored doubled, so range endpoints never touch floating
// point. whole(n) is n, plus_half(n) is n + 1/2.
struct HalfInt {
    std::int64_t twice;
};
inline constexpr HalfInt whole(std::int64_t n) { return {2 * n}; }
inline constexpr HalfInt plus_half(std::int64_t n) { return {2 * n + 1}; }

// The integers strictly between a and b, with the orientation sign of the
// range: empty when a == b, and the reversed range carries sign -1.
std::vector<std::pair<std::int64_t, int>> ranged_index_list(HalfInt a, HalfInt b);

// t2[m] -> x[m-1] + x[m-2] + y[m], h2[m] -> x[m] - x[m-2], torsion -> 0.
OElement phi(const GUElement& g);

// Section of phi over K, pinned by F(x[-2]) = F(x[-1]) = 0; F(phi(.)) is
// the projection onto K.
GUElement F_map(const OElement& o);

// Sum of all h2 coefficients. Defined on K only; rejects torsion.
Int eta(const GUElement& k);

// variant 0: even-index x coefficients minus all y coefficients;
// variant 1: the same with odd-index x.
Int theta(int variant, const OElement& o);

// Whether the even-x, odd-x and y coefficient sums agree.
bool in_image_phi(const OElement& o);

std::string describe(const GUElement& g);
std::string describe(const OElement& o);

}  // namespace oinv
