#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "grcodes/ring.hpp"

namespace grcodes {

/// Dense row-major matrix over GF(p) holding reduced residues.
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static FpMatrix identity(std::size_t n, std::uint32_t p);
    /// Rows given as residue vectors of equal length.
    static FpMatrix from_rows(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols, std::uint32_t p);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint32_t modulus() const noexcept { return p_; }
    PrimeField field() const noexcept { return PrimeField{p_}; }

    std::uint32_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    std::uint32_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    std::span<std::uint32_t> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const std::uint32_t> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::vector<std::uint32_t> column(std::size_t j) const;

    FpMatrix transpose() const;
    FpMatrix select_rows(std::span<const std::size_t> indices) const;
    FpMatrix select_cols(std::span<const std::size_t> indices) const;
    /// All columns except the listed ones, in order.
    FpMatrix delete_cols(std::span<const std::size_t> indices) const;
    /// Stacks rows of `other` below this matrix.
    FpMatrix vstack(const FpMatrix& other) const;
    /// Places `other` to the right of this matrix.
    FpMatrix hstack(const FpMatrix& other) const;

    bool is_zero() const;
    /// Number of nonzero entries in row i.
    std::size_t row_weight(std::size_t i) const;
    std::size_t col_weight(std::size_t j) const;

    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> data_;
};

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator+(const FpMatrix& a, const FpMatrix& b);
FpMatrix operator-(const FpMatrix& a, const FpMatrix& b);
/// Row vector times matrix.
std::vector<std::uint32_t> vec_mul(std::span<const std::uint32_t> x, const FpMatrix& m);
/// Matrix times column vector.
std::vector<std::uint32_t> mul_vec(const FpMatrix& m, std::span<const std::uint32_t> x);

/// Reduced row echelon form. Pivots are chosen leftmost-column first, and
/// within a column the smallest row index at or below the current row.
struct RrefResult {
    FpMatrix reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_columns;
};

RrefResult rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);

/// Basis of {x : M x = 0}, one vector per free column of the RREF in
/// increasing column order (free entry set to 1).
std::vector<std::vector<std::uint32_t>> null_space(const FpMatrix& m);
/// The null-space basis as the rows of a matrix.
FpMatrix null_space_matrix(const FpMatrix& m);
/// Basis of {x : x M = 0} as the rows of a matrix.
FpMatrix left_null_space_matrix(const FpMatrix& m);

/// Nonzero rows of the RREF, i.e. the canonical basis of the row space.
FpMatrix row_space_basis(const FpMatrix& m);
bool same_row_space(const FpMatrix& a, const FpMatrix& b);
/// Indices of the rows kept by a greedy scan in order, each independent of
/// those kept before it.
std::vector<std::size_t> independent_row_indices(const FpMatrix& m);
FpMatrix independent_rows(const FpMatrix& m);
/// True when x lies in the row space of m.
bool in_row_space(const FpMatrix& m, std::span<const std::uint32_t> x);

/// n x r matrix C with M C = I_r for a full-row-rank r x n matrix M, free
/// variables set to zero. Throws PreconditionError when rank < r.
FpMatrix right_inverse(const FpMatrix& m);
/// Inverse of a square matrix, if it exists.
std::optional<FpMatrix> inverse(const FpMatrix& m);

/// Incrementally built echelon basis used for greedy independence scans.
class IncrementalBasis {
public:
    IncrementalBasis(std::size_t cols, std::uint32_t p);

    /// Adds v if it is independent of the rows kept so far. Returns whether
    /// it was added.
    bool add(std::span<const std::uint32_t> v);
    bool contains(std::span<const std::uint32_t> v) const;
    std::size_t size() const noexcept { return pivots_.size(); }

private:
    bool reduce_packed(std::vector<std::uint64_t>& w) const;
    bool reduce_dense(std::vector<std::uint32_t>& v) const;

    std::size_t cols_;
    std::uint32_t p_;
    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> packed_;
    std::vector<std::vector<std::uint32_t>> dense_;
    std::vector<std::size_t> pivots_;
};

/// Binary matrix with rows packed into 64-bit words; bit j of a row lives in
/// word j / 64 at position j % 64.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols);
    static BitMatrix from(const FpMatrix& m);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t words() const noexcept { return words_; }

    bool get(std::size_t i, std::size_t j) const { return (row(i)[j >> 6] >> (j & 63)) & 1u; }
    void set(std::size_t i, std::size_t j, bool v);
    std::span<std::uint64_t> row(std::size_t i) { return {data_.data() + i * words_, words_}; }
    std::span<const std::uint64_t> row(std::size_t i) const { return {data_.data() + i * words_, words_}; }

    FpMatrix to_fp() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Dense integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    /// Entrywise reduction into GF(p).
    FpMatrix reduce(std::uint32_t p) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);

/// Exact determinant by fraction-free (Bareiss) elimination.
Integer det_integer(const IntMatrix& m);
/// Basis of the rational null space {x : M x = 0}.
std::vector<std::vector<Rational>> rational_null_space(const IntMatrix& m);
/// Solves M x = b over the rationals; nullopt if inconsistent.
std::optional<std::vector<Rational>> rational_solve(const IntMatrix& m, const std::vector<Integer>& b);

}  // namespace grcodes
