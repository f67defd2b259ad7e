#include "grcodes/matrix.hpp"

#include <algorithm>
#include <bit>

#include "grcodes/error.hpp"

namespace grcodes {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, std::uint32_t p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<std::vector<std::uint32_t>>& rows, std::size_t cols, std::uint32_t p) {
    FpMatrix m(rows.size(), cols, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw PreconditionError("ragged matrix rows");
        std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
    }
    return m;
}

std::vector<std::uint32_t> FpMatrix::column(std::size_t j) const {
    std::vector<std::uint32_t> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix t(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

FpMatrix FpMatrix::select_rows(std::span<const std::size_t> indices) const {
    FpMatrix out(indices.size(), cols_, p_);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= rows_) throw PreconditionError("row index out of range");
        std::copy(row(indices[k]).begin(), row(indices[k]).end(), out.row(k).begin());
    }
    return out;
}

FpMatrix FpMatrix::select_cols(std::span<const std::size_t> indices) const {
    FpMatrix out(rows_, indices.size(), p_);
    for (std::size_t k = 0; k < indices.size(); ++k) {
        if (indices[k] >= cols_) throw PreconditionError("column index out of range");
        for (std::size_t i = 0; i < rows_; ++i) out(i, k) = (*this)(i, indices[k]);
    }
    return out;
}

FpMatrix FpMatrix::delete_cols(std::span<const std::size_t> indices) const {
    std::vector<bool> drop(cols_, false);
    for (auto j : indices) {
        if (j >= cols_) throw PreconditionError("column index out of range");
        drop[j] = true;
    }
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < cols_; ++j) {
        if (!drop[j]) keep.push_back(j);
    }
    return select_cols(keep);
}

FpMatrix FpMatrix::vstack(const FpMatrix& other) const {
    if (rows_ == 0) return other;
    if (other.rows_ == 0) return *this;
    if (other.cols_ != cols_ || other.p_ != p_) throw PreconditionError("vstack: shape mismatch");
    FpMatrix out(rows_ + other.rows_, cols_, p_);
    std::copy(data_.begin(), data_.end(), out.data_.begin());
    std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
    return out;
}

FpMatrix FpMatrix::hstack(const FpMatrix& other) const {
    if (other.rows_ != rows_ || other.p_ != p_) throw PreconditionError("hstack: shape mismatch");
    FpMatrix out(rows_, cols_ + other.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::copy(row(i).begin(), row(i).end(), out.row(i).begin());
        std::copy(other.row(i).begin(), other.row(i).end(), out.row(i).begin() + static_cast<std::ptrdiff_t>(cols_));
    }
    return out;
}

bool FpMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](auto v) { return v == 0; });
}

std::size_t FpMatrix::row_weight(std::size_t i) const {
    return static_cast<std::size_t>(std::count_if(row(i).begin(), row(i).end(), [](auto v) { return v != 0; }));
}

std::size_t FpMatrix::col_weight(std::size_t j) const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < rows_; ++i) w += (*this)(i, j) != 0;
    return w;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.rows() || a.modulus() != b.modulus()) throw PreconditionError("matrix product: shape mismatch");
    const std::uint32_t p = a.modulus();
    FpMatrix c(a.rows(), b.cols(), p);
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const std::uint64_t x = a(i, k);
            if (!x) continue;
            const auto brow = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) acc[j] += x * brow[j];
            if (k % 4096 == 4095) {
                for (auto& v : acc) v %= p;
            }
        }
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = static_cast<std::uint32_t>(acc[j] % p);
    }
    return c;
}

FpMatrix operator+(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus()) throw PreconditionError("matrix sum: shape mismatch");
    FpMatrix c(a.rows(), a.cols(), a.modulus());
    const PrimeField f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
    }
    return c;
}

FpMatrix operator-(const FpMatrix& a, const FpMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.modulus() != b.modulus()) throw PreconditionError("matrix difference: shape mismatch");
    FpMatrix c(a.rows(), a.cols(), a.modulus());
    const PrimeField f = a.field();
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.sub(a(i, j), b(i, j));
    }
    return c;
}

std::vector<std::uint32_t> vec_mul(std::span<const std::uint32_t> x, const FpMatrix& m) {
    if (x.size() != m.rows()) throw PreconditionError("vector-matrix product: shape mismatch");
    std::vector<std::uint64_t> acc(m.cols(), 0);
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (!x[k]) continue;
        const auto r = m.row(k);
        for (std::size_t j = 0; j < m.cols(); ++j) acc[j] += static_cast<std::uint64_t>(x[k]) * r[j];
    }
    std::vector<std::uint32_t> out(m.cols());
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = static_cast<std::uint32_t>(acc[j] % m.modulus());
    return out;
}

std::vector<std::uint32_t> mul_vec(const FpMatrix& m, std::span<const std::uint32_t> x) {
    if (x.size() != m.cols()) throw PreconditionError("matrix-vector product: shape mismatch");
    std::vector<std::uint32_t> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::uint64_t acc = 0;
        const auto r = m.row(i);
        for (std::size_t j = 0; j < x.size(); ++j) acc += static_cast<std::uint64_t>(r[j]) * x[j];
        out[i] = static_cast<std::uint32_t>(acc % m.modulus());
    }
    return out;
}

// ---------------------------------------------------------------------------
// BitMatrix

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(rows * ((cols + 63) / 64), 0) {}

BitMatrix BitMatrix::from(const FpMatrix& m) {
    if (m.modulus() != 2) throw PreconditionError("bit matrices require GF(2)");
    BitMatrix b(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto r = b.row(i);
        const auto src = m.row(i);
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (src[j]) r[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
    }
    return b;
}

void BitMatrix::set(std::size_t i, std::size_t j, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (j & 63);
    if (v) {
        row(i)[j >> 6] |= mask;
    } else {
        row(i)[j >> 6] &= ~mask;
    }
}

FpMatrix BitMatrix::to_fp() const {
    FpMatrix m(rows_, cols_, 2);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = get(i, j) ? 1 : 0;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Row reduction

namespace {

RrefResult rref_gf2(const FpMatrix& m) {
    BitMatrix b = BitMatrix::from(m);
    const std::size_t words = b.words();
    RrefResult res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < b.cols() && r < b.rows(); ++c) {
        const std::size_t w = c >> 6;
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        std::size_t piv = r;
        while (piv < b.rows() && !(b.row(piv)[w] & mask)) ++piv;
        if (piv == b.rows()) continue;
        if (piv != r) std::swap_ranges(b.row(piv).begin(), b.row(piv).end(), b.row(r).begin());
        const auto prow = b.row(r);
        for (std::size_t i = 0; i < b.rows(); ++i) {
            if (i == r) continue;
            auto row = b.row(i);
            if (row[w] & mask) {
                for (std::size_t k = w; k < words; ++k) row[k] ^= prow[k];
            }
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    res.rank = r;
    res.reduced = b.to_fp();
    return res;
}

RrefResult rref_dense(const FpMatrix& m) {
    RrefResult res;
    res.reduced = m;
    FpMatrix& a = res.reduced;
    const PrimeField f = a.field();
    std::size_t r = 0;
    for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
        std::size_t piv = r;
        while (piv < a.rows() && a(piv, c) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != r) std::swap_ranges(a.row(piv).begin(), a.row(piv).end(), a.row(r).begin());
        const std::uint32_t s = f.inv(a(r, c));
        for (std::size_t j = c; j < a.cols(); ++j) a(r, j) = f.mul(a(r, j), s);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r || a(i, c) == 0) continue;
            const std::uint32_t factor = a(i, c);
            for (std::size_t j = c; j < a.cols(); ++j) a(i, j) = f.sub(a(i, j), f.mul(factor, a(r, j)));
        }
        res.pivot_columns.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

}  // namespace

RrefResult rref(const FpMatrix& m) { return m.modulus() == 2 ? rref_gf2(m) : rref_dense(m); }

std::size_t rank(const FpMatrix& m) { return rref(m).rank; }

std::vector<std::vector<std::uint32_t>> null_space(const FpMatrix& m) {
    const RrefResult r = rref(m);
    const PrimeField f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<std::uint32_t> x(m.cols(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < r.rank; ++i) x[r.pivot_columns[i]] = f.neg(r.reduced(i, free));
        basis.push_back(std::move(x));
    }
    return basis;
}

FpMatrix null_space_matrix(const FpMatrix& m) {
    return FpMatrix::from_rows(null_space(m), m.cols(), m.modulus());
}

FpMatrix left_null_space_matrix(const FpMatrix& m) { return null_space_matrix(m.transpose()); }

FpMatrix row_space_basis(const FpMatrix& m) {
    const RrefResult r = rref(m);
    std::vector<std::size_t> idx(r.rank);
    for (std::size_t i = 0; i < r.rank; ++i) idx[i] = i;
    return r.reduced.select_rows(idx);
}

bool same_row_space(const FpMatrix& a, const FpMatrix& b) {
    if (a.cols() != b.cols() || a.modulus() != b.modulus()) return false;
    return row_space_basis(a) == row_space_basis(b);
}

bool in_row_space(const FpMatrix& m, std::span<const std::uint32_t> x) {
    IncrementalBasis basis(m.cols(), m.modulus());
    for (std::size_t i = 0; i < m.rows(); ++i) basis.add(m.row(i));
    return basis.contains(x);
}

namespace {

// Reduces [M | I] and returns the transform block E with E M = RREF(M).
std::pair<RrefResult, FpMatrix> rref_with_transform(const FpMatrix& m) {
    const FpMatrix aug = m.hstack(FpMatrix::identity(m.rows(), m.modulus()));
    RrefResult full = rref(aug);
    std::vector<std::size_t> left(m.cols()), right(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j) left[j] = j;
    for (std::size_t j = 0; j < m.rows(); ++j) right[j] = m.cols() + j;
    RrefResult res;
    res.reduced = full.reduced.select_cols(left);
    for (auto c : full.pivot_columns) {
        if (c < m.cols()) res.pivot_columns.push_back(c);
    }
    res.rank = res.pivot_columns.size();
    return {std::move(res), full.reduced.select_cols(right)};
}

}  // namespace

FpMatrix right_inverse(const FpMatrix& m) {
    auto [r, e] = rref_with_transform(m);
    if (r.rank < m.rows()) {
        throw PreconditionError("matrix has no right inverse",
                                "rank " + std::to_string(r.rank) + " < " + std::to_string(m.rows()) + " rows");
    }
    FpMatrix c(m.cols(), m.rows(), m.modulus());
    for (std::size_t i = 0; i < r.rank; ++i) {
        for (std::size_t j = 0; j < m.rows(); ++j) c(r.pivot_columns[i], j) = e(i, j);
    }
    return c;
}

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
    auto [r, e] = rref_with_transform(m);
    if (r.rank < m.rows()) return std::nullopt;
    return e;
}

// ---------------------------------------------------------------------------
// IncrementalBasis

IncrementalBasis::IncrementalBasis(std::size_t cols, std::uint32_t p) : cols_(cols), p_(p), words_((cols + 63) / 64) {}

bool IncrementalBasis::reduce_packed(std::vector<std::uint64_t>& w) const {
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t c = pivots_[k];
        if ((w[c >> 6] >> (c & 63)) & 1u) {
            const auto& b = packed_[k];
            for (std::size_t i = c >> 6; i < words_; ++i) w[i] ^= b[i];
        }
    }
    return std::any_of(w.begin(), w.end(), [](auto x) { return x != 0; });
}

bool IncrementalBasis::reduce_dense(std::vector<std::uint32_t>& v) const {
    const PrimeField f{p_};
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t c = pivots_[k];
        const std::uint32_t x = v[c];
        if (!x) continue;
        const auto& b = dense_[k];
        for (std::size_t j = c; j < cols_; ++j) {
            if (b[j]) v[j] = f.sub(v[j], f.mul(x, b[j]));
        }
    }
    return std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; });
}

bool IncrementalBasis::add(std::span<const std::uint32_t> v) {
    if (v.size() != cols_) throw PreconditionError("basis vector length mismatch");
    if (p_ == 2) {
        std::vector<std::uint64_t> w(words_, 0);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j] & 1u) w[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
        if (!reduce_packed(w)) return false;
        std::size_t pivot = 0;
        for (std::size_t i = 0; i < words_; ++i) {
            if (w[i]) {
                pivot = i * 64 + static_cast<std::size_t>(std::countr_zero(w[i]));
                break;
            }
        }
        pivots_.push_back(pivot);
        packed_.push_back(std::move(w));
        return true;
    }
    std::vector<std::uint32_t> x(v.begin(), v.end());
    if (!reduce_dense(x)) return false;
    const PrimeField f{p_};
    std::size_t pivot = 0;
    while (x[pivot] == 0) ++pivot;
    const std::uint32_t s = f.inv(x[pivot]);
    for (auto& e : x) e = f.mul(e, s);
    pivots_.push_back(pivot);
    dense_.push_back(std::move(x));
    return true;
}

bool IncrementalBasis::contains(std::span<const std::uint32_t> v) const {
    if (v.size() != cols_) throw PreconditionError("basis vector length mismatch");
    if (p_ == 2) {
        std::vector<std::uint64_t> w(words_, 0);
        for (std::size_t j = 0; j < cols_; ++j) {
            if (v[j] & 1u) w[j >> 6] |= std::uint64_t{1} << (j & 63);
        }
        return !reduce_packed(w);
    }
    std::vector<std::uint32_t> x(v.begin(), v.end());
    return !reduce_dense(x);
}

// ---------------------------------------------------------------------------
// Integer matrices

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Integer(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
}

FpMatrix IntMatrix::reduce(std::uint32_t p) const {
    FpMatrix out(rows_, cols_, p);
    const PrimeField f{p};
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f.reduce((*this)(i, j));
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw PreconditionError("matrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix sum: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    }
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw PreconditionError("matrix difference: shape mismatch");
    IntMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    }
    return c;
}

Integer det_integer(const IntMatrix& m) {
    if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    IntMatrix a = m;
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && a(piv, k) == 0) ++piv;
            if (piv == n) return Integer(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

struct RationalRref {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;
};

RationalRref rational_rref(std::vector<std::vector<Rational>> a, std::size_t cols) {
    RationalRref res;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t piv = r;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        const Rational s = a[r][c];
        for (auto& x : a[r]) x /= s;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            const Rational factor = a[i][c];
            for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= factor * a[r][j];
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rows = std::move(a);
    return res;
}

}  // namespace

std::vector<std::vector<Rational>> rational_null_space(const IntMatrix& m) {
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
    }
    const RationalRref r = rational_rref(std::move(a), m.cols());
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> x(m.cols(), Rational(0));
        x[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = -r.rows[i][free];
        basis.push_back(std::move(x));
    }
    return basis;
}

std::optional<std::vector<Rational>> rational_solve(const IntMatrix& m, const std::vector<Integer>& b) {
    if (b.size() != m.rows()) throw PreconditionError("rational_solve: shape mismatch");
    std::vector<std::vector<Rational>> a(m.rows(), std::vector<Rational>(m.cols() + 1));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rational(m(i, j));
        a[i][m.cols()] = Rational(b[i]);
    }
    const RationalRref r = rational_rref(std::move(a), m.cols() + 1);
    if (!r.pivots.empty() && r.pivots.back() == m.cols()) return std::nullopt;
    std::vector<Rational> x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.rows[i][m.cols()];
    return x;
}

std::vector<std::size_t> independent_row_indices(const FpMatrix& m) {
    IncrementalBasis basis(m.cols(), m.modulus());
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (basis.add(m.row(i))) kept.push_back(i);
    return kept;
}

FpMatrix independent_rows(const FpMatrix& m) { return m.select_rows(independent_row_indices(m)); }

}  // namespace grcodes
