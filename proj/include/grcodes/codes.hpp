#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grcodes/distance.hpp"
#include "grcodes/groupring.hpp"
#include "grcodes/matrix.hpp"

namespace grcodes {

/// Right encoding x -> xu (the default) or left encoding x -> ux.
enum class Side { right, left };

/// An ordered set S = {g_k1, ..., g_kr} of listing indices spanning the
/// submodule W. Indices are strictly increasing and in range.
class SubmoduleBasis {
public:
    SubmoduleBasis() = default;
    SubmoduleBasis(std::vector<std::size_t> indices, std::size_t group_order);

    /// {g_0, ..., g_(r-1)}.
    static SubmoduleBasis first(std::size_t r, std::size_t group_order);

    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    std::size_t group_order() const noexcept { return order_; }
    bool contains(std::size_t g) const;
    /// The basis G \ S of the complementary submodule.
    SubmoduleBasis complement() const;
    /// Comma-separated indices, e.g. "0,1,2,3".
    std::string to_string() const;

    friend bool operator==(const SubmoduleBasis&, const SubmoduleBasis&) = default;

private:
    std::vector<std::size_t> indices_;
    std::size_t order_ = 0;
};

enum class CodeKind { zero_divisor, unit_derived, check_code, dual, cyclic, ldpc, generic };
const char* to_string(CodeKind kind);

struct Provenance {
    CodeKind kind = CodeKind::generic;
    std::optional<Element> element;
    std::optional<SubmoduleBasis> basis;
    Side side = Side::right;
    /// Free-form detail, e.g. which route produced a dual.
    std::string note;
};

/// An (n, k) linear code over GF(p) with a k x n generator and an
/// (n - k) x n check matrix: y is a codeword iff check * y^T = 0.
struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    FpMatrix generator;
    FpMatrix check;
    Provenance provenance;
    std::optional<std::size_t> distance;

    std::uint32_t modulus() const noexcept { return generator.modulus(); }
};

/// Checks generator * check^T = 0, rank(generator) = k, rank(check) = n - k.
bool is_consistent(const LinearCode& code);

/// Exact minimum distance, cached on the code.
std::size_t code_distance(LinearCode& code, const DistanceOptions& options = {});

/// The encoding matrix for a side: sigma(u) for right, the left
/// multiplication matrix for left.
FpMatrix encoding_matrix(const Element& u, Side side);

/// Scans the rows of sigma(u) in listing order keeping each row that is
/// independent of those kept. |S| = rank sigma(u).
SubmoduleBasis greedy_basis(const Element& u, Side side = Side::right);

/// The code Wu (or uW): generator = rows S of the encoding matrix. Throws
/// PreconditionError naming a maximal independent S' when S u is dependent.
LinearCode zero_divisor_code(const Element& u, const SubmoduleBasis& basis, Side side = Side::right);

/// Annihilators of a zero-divisor u (u v = 0).
struct CheckElements {
    /// v with rank sigma(v) = n - rank sigma(u), if one was found.
    std::optional<Element> principal;
    /// How the principal element was found.
    std::string principal_source;
    /// v_1 .. v_(n-r): first columns of sigma(v_i) form a basis of Ker sigma(u).
    std::vector<Element> general;
    std::size_t rank = 0;
};

/// Builds the general check elements from the null space of sigma(u) and
/// searches for a principal one: each v_i in order (first few), then for
/// cyclic groups the minimal-degree annihilator (x^n - 1) / gcd(u, x^n - 1),
/// then seeded random combinations of the v_i. Throws for units.
CheckElements check_elements(const Element& u, std::uint64_t seed = 0);

/// Check matrix for the code Wu, W = span S, right encoding. For |S| = rank
/// this is the transposed null-space basis; for |S| < rank the right inverse
/// of r independent rows supplies the extra check columns.
FpMatrix check_matrix(const Element& u, const SubmoduleBasis& basis, const CheckElements& elems);

/// The check zero-divisor code T_v = {x in T : x v = 0}; T = RG when no
/// basis is given. Throws when the code is zero (v a unit).
LinearCode check_code(const Element& v, const std::optional<SubmoduleBasis>& basis = std::nullopt);

/// Unit-derived code: generator = rows S of the encoding matrix of u, check
/// = transpose of the inverse's encoding matrix with columns S deleted.
LinearCode unit_code(const Element& u, const SubmoduleBasis& basis, Side side = Side::right);

/// Dual code. Zero-divisor codes with a principal check v use the
/// transpose of v over G \ S; unit-derived codes use the transpose of the
/// inverse over G \ S; anything else (or a failed guard) uses the
/// orthogonal complement directly. provenance.note records the route.
LinearCode dual(const LinearCode& code);

struct SelfDualReport {
    bool u_transpose_zero = false;  // u u^T = 0
    bool u_squared_zero = false;    // u^2 = 0
    bool half_rank = false;         // rank sigma(u) = n / 2
    std::size_t rank = 0;
    bool self_dual = false;         // u u^T = 0 and rank = n / 2
};
SelfDualReport is_self_dual(const Element& u);

/// True iff Wu is a left ideal, i.e. rank sigma(u) = |S| (S u independent).
bool is_ideal(const Element& u, const SubmoduleBasis& basis);

struct BestBasisResult {
    SubmoduleBasis basis;
    std::size_t distance = 0;
    bool exhaustive = false;
    std::uint64_t evaluations = 0;
};

struct BestBasisOptions {
    /// Exhaustive search when C(n, r) <= budget; otherwise the number of
    /// distinct bases the local search may evaluate.
    std::uint64_t budget = 5000;
    std::uint64_t seed = 0;
    bool force_local = false;
    DistanceOptions distance;
};

/// argmax over |S| = r of the minimum distance of Wu. Bases with dependent
/// S u are skipped. Ties keep the lexicographically first basis found.
BestBasisResult best_basis(const Element& u, std::size_t r, const BestBasisOptions& options = {});

/// C(n, r), saturating at UINT64_MAX.
std::uint64_t binomial(std::size_t n, std::size_t r);

}  // namespace grcodes
