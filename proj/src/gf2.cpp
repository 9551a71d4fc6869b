#include "oinv/gf2.hpp"

#include <algorithm>
#include <bit>
#include <utility>

#include "oinv/errors.hpp"

namespace oinv::gf2 {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

Vector::Vector(std::size_t size) : size_(size), w_(words_for(size), 0) {}

Vector Vector::unit(std::size_t size, std::size_t i) {
    Vector v(size);
    v.set(i, true);
    return v;
}

bool Vector::get(std::size_t i) const { return (w_[i / kWordBits] >> (i % kWordBits)) & 1u; }

void Vector::set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
    if (v)
        w_[i / kWordBits] |= mask;
    else
        w_[i / kWordBits] &= ~mask;
}

bool Vector::is_zero() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
}

Vector& Vector::operator^=(const Vector& o) {
    if (size_ != o.size_) throw DomainError("gf2: vector length mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

bool dot(const Vector& a, const Vector& b) {
    if (a.size_ != b.size_) throw DomainError("gf2: vector length mismatch");
    unsigned acc = 0;
    for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= std::popcount(a.w_[i] & b.w_[i]) & 1u;
    return acc != 0;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_(words_for(cols)), w_(rows * wpr_, 0) {}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

Matrix Matrix::standard_symplectic(std::size_t genus) {
    Matrix m(2 * genus, 2 * genus);
    for (std::size_t i = 0; i < genus; ++i) {
        m.set(i, genus + i, true);
        m.set(genus + i, i, true);
    }
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DomainError("gf2: row length mismatch");
        std::copy(rows[r].w_.begin(), rows[r].w_.end(), m.row_ptr(r));
    }
    return m;
}

bool Matrix::get(std::size_t r, std::size_t c) const {
    return (row_ptr(r)[c / kWordBits] >> (c % kWordBits)) & 1u;
}

void Matrix::set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (c % kWordBits);
    if (v)
        row_ptr(r)[c / kWordBits] |= mask;
    else
        row_ptr(r)[c / kWordBits] &= ~mask;
}

Vector Matrix::row(std::size_t r) const {
    Vector v(cols_);
    std::copy(row_ptr(r), row_ptr(r) + wpr_, v.w_.begin());
    return v;
}

void Matrix::xor_row(std::size_t src, std::size_t dst) {
    const std::uint64_t* s = row_ptr(src);
    std::uint64_t* d = row_ptr(dst);
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::swap_ranges(row_ptr(a), row_ptr(a) + wpr_, row_ptr(b));
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols_ && r < m.rows_; ++c) {
        std::size_t p = r;
        while (p < m.rows_ && !m.get(p, c)) ++p;
        if (p == m.rows_) continue;
        m.swap_rows(p, r);
        for (std::size_t q = 0; q < m.rows_; ++q)
            if (q != r && m.get(q, c)) m.xor_row(r, q);
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(const Matrix& m) {
    Matrix work = m;
    return rref_in_place(work).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    Matrix work = m;
    const auto pivots = rref_in_place(work);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    std::vector<Vector> basis;
    basis.reserve(m.cols() - pivots.size());
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        Vector v(m.cols());
        v.set(f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (work.get(i, f)) v.set(pivots[i], true);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (b.size() != a.rows()) throw DomainError("gf2: solve dimension mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) aug.set(r, c, a.get(r, c));
        aug.set(r, a.cols(), b.get(r));
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    Vector x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x.set(pivots[i], aug.get(i, a.cols()));
    return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DomainError("gf2: inverse of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Matrix(0, 0);
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.get(r, c));
        aug.set(r, n + r, true);
    }
    const auto pivots = rref_in_place(aug);
    if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv.set(r, c, aug.get(r, n + c));
    return inv;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw DomainError("gf2: mat_mul dimension mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::uint64_t* dst = out.row_ptr(r);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (!a.get(r, k)) continue;
            const std::uint64_t* src = b.row_ptr(k);
            for (std::size_t i = 0; i < out.wpr_; ++i) dst[i] ^= src[i];
        }
    }
    return out;
}

Matrix mat_add(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DomainError("gf2: mat_add dimension mismatch");
    Matrix out = a;
    for (std::size_t i = 0; i < out.w_.size(); ++i) out.w_[i] ^= b.w_[i];
    return out;
}

Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) out.set(c, r, true);
    return out;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
    if (v.size() != m.cols()) throw DomainError("gf2: mat_vec dimension mismatch");
    Vector out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) out.set(r, dot(m.row(r), v));
    return out;
}

Matrix transvection(const Vector& v, const Matrix& form) {
    const std::size_t n = v.size();
    if (form.rows() != n || form.cols() != n)
        throw DomainError("gf2: transvection dimension mismatch");
    // r = v^T form
    Vector r(n);
    for (std::size_t k = 0; k < n; ++k)
        if (v.get(k)) r ^= form.row(k);
    Matrix t = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!v.get(i)) continue;
        for (std::size_t j = 0; j < n; ++j)
            if (r.get(j)) t.set(i, j, !t.get(i, j));
    }
    return t;
}

Matrix symplectic_basis(const Matrix& form) {
    const std::size_t n = form.rows();
    if (form.cols() != n) throw DomainError("gf2: form must be square");
    if (n % 2 != 0) throw DomainError("gf2: form must have even dimension");
    for (std::size_t i = 0; i < n; ++i) {
        if (form.get(i, i)) throw DomainError("gf2: form must have zero diagonal");
        for (std::size_t j = i + 1; j < n; ++j)
            if (form.get(i, j) != form.get(j, i)) throw DomainError("gf2: form must be symmetric");
    }

    auto pairing = [&form](const Vector& x, const Vector& y) { return dot(x, mat_vec(form, y)); };

    std::vector<Vector> pool;
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.push_back(Vector::unit(n, i));

    std::vector<Vector> us, ws;
    while (us.size() < n / 2) {
        auto iu = std::find_if(pool.begin(), pool.end(), [](const Vector& v) { return !v.is_zero(); });
        if (iu == pool.end()) throw DomainError("gf2: form is degenerate");
        Vector u = *iu;
        pool.erase(iu);

        auto iw = std::find_if(pool.begin(), pool.end(),
                               [&](const Vector& v) { return pairing(u, v); });
        if (iw == pool.end()) throw DomainError("gf2: form is degenerate");
        Vector w = *iw;
        pool.erase(iw);

        // make the rest orthogonal to the new hyperbolic pair
        for (Vector& v : pool) {
            if (pairing(v, w)) v ^= u;
            if (pairing(v, u)) v ^= w;
        }
        us.push_back(std::move(u));
        ws.push_back(std::move(w));
    }

    Matrix b(n, n);
    for (std::size_t j = 0; j < n / 2; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (us[j].get(i)) b.set(i, j, true);
            if (ws[j].get(i)) b.set(i, n / 2 + j, true);
        }
    return b;
}

}  // namespace oinv::gf2
