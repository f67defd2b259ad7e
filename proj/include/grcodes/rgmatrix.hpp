#pragma once

#include <optional>
#include <span>
#include <vector>

#include "grcodes/groupring.hpp"
#include "grcodes/matrix.hpp"

namespace grcodes {

/// sigma(u): the n x n matrix with entry (i, j) equal to the coefficient of
/// u at g_i^-1 g_j. Row i is the coefficient vector of g_i u, so right
/// encoding x -> xu is the row-vector product x sigma(u).
FpMatrix rg_matrix(const Element& u);
IntMatrix rg_matrix_integer(const Element& u);

/// Matrix of left encoding x -> ux: row i is the coefficient vector of u g_i.
/// Equals rg_matrix(u) for abelian groups.
FpMatrix left_rg_matrix(const Element& u);

/// The element whose RG-matrix has the given first row (coefficients in
/// listing order).
Element element_from_first_row(GroupPtr group, Ring ring, std::span<const std::uint32_t> row);
/// The element whose RG-matrix has the given first column: the coefficient
/// at g_i^-1 is column[i].
Element element_from_first_column(GroupPtr group, Ring ring, std::span<const std::uint32_t> column);
Element element_from_first_column(GroupPtr group, Ring ring, std::span<const Integer> column);
/// First column of sigma(v): entry i is the coefficient of v at g_i^-1.
std::vector<std::uint32_t> first_column(const Element& v);

/// Unit / zero-divisor dichotomy with certificates.
struct Classification {
    enum class Kind { unit, zero_divisor, neither };

    Kind kind = Kind::neither;
    std::optional<Element> inverse;   // unit: u * inverse = inverse * u = 1
    std::optional<Element> witness;   // zero-divisor: nonzero w with u * w = 0
    std::size_t rank = 0;             // rank of sigma(u) (prime fields)
    std::optional<Integer> determinant;  // integers only
};

const char* to_string(Classification::Kind kind);

/// Prime fields: unit iff sigma(u) has full rank, otherwise zero-divisor
/// with a witness built from the first null-space vector. Integers: unit iff
/// det sigma(u) = +-1, zero-divisor iff det = 0, otherwise neither.
Classification classify(const Element& u);

/// rank of sigma(u) over a prime field.
std::size_t rg_rank(const Element& u);

}  // namespace grcodes
