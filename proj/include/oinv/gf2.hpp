#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace oinv::gf2 {

// Bit-packed vector over the two-element field.
class Vector {
  public:
    Vector() = default;
    explicit Vector(std::size_t size);
    static Vector unit(std::size_t size, std::size_t i);

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    bool is_zero() const;

    Vector& operator^=(const Vector& o);
    friend Vector operator^(Vector a, const Vector& b) {
        a ^= b;
        return a;
    }
    friend bool operator==(const Vector&, const Vector&) = default;

  private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> w_;

    friend class Matrix;
    friend bool dot(const Vector&, const Vector&);
};

// Parity of the pointwise product.
bool dot(const Vector& a, const Vector& b);

// Dense bit-packed matrix, row-major. Values are immutable in practice:
// every algorithm below eliminates on a local copy.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    static Matrix identity(std::size_t n);
    // 2g x 2g intersection form [[0, I], [I, 0]] in the split basis
    // a_1..a_g, b_1..b_g.
    static Matrix standard_symplectic(std::size_t genus);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool get(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool v);
    Vector row(std::size_t r) const;

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;

    std::uint64_t* row_ptr(std::size_t r) { return w_.data() + r * wpr_; }
    const std::uint64_t* row_ptr(std::size_t r) const { return w_.data() + r * wpr_; }
    void xor_row(std::size_t src, std::size_t dst);
    void swap_rows(std::size_t a, std::size_t b);

    friend std::vector<std::size_t> rref_in_place(Matrix&);
    friend Matrix mat_mul(const Matrix&, const Matrix&);
    friend Matrix mat_add(const Matrix&, const Matrix&);
};

// Reduced row echelon form, pivoting on the first nonzero column with
// the top-most row; returns the pivot columns in ascending order.
std::vector<std::size_t> rref_in_place(Matrix& m);

std::size_t rank(const Matrix& m);
// Basis of the right null space; size is cols - rank.
std::vector<Vector> kernel_basis(const Matrix& m);
// Some x with Ax = b (free variables zero), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

Matrix mat_mul(const Matrix& a, const Matrix& b);
Matrix mat_add(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& m);
Vector mat_vec(const Matrix& m, const Vector& v);

// x -> x + <x,v> v with <x,y> = x^T form y. Symplectic when the form is.
Matrix transvection(const Vector& v, const Matrix& form);

// Basis change B with B^T form B = standard_symplectic. The form must be
// symmetric with zero diagonal and invertible.
Matrix symplectic_basis(const Matrix& form);

}  // namespace oinv::gf2
