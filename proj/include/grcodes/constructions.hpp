#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "grcodes/codes.hpp"
#include "grcodes/groupring.hpp"
#include "grcodes/matrix.hpp"
#include "grcodes/poly.hpp"

namespace grcodes {

/// d = gcd(h, x^n - 1) and p = (x^n - 1) / d, with d p = x^n - 1.
struct PolyPair {
    Poly d;
    Poly p;
    Element generator;  // d as an element of GF(p)C_n
    Element check;      // p as an element of GF(p)C_n
};

struct CyclicCode {
    PolyPair pair;
    LinearCode code;
};

/// The cyclic code generated by h in GF(p)C_n: generator rows are the first
/// n - deg d rows of sigma(d); check rows are independent columns of
/// sigma(p). A unit h gives the whole space.
CyclicCode cyclic_code(const Element& h);

/// Inverse in GF(p)C_n by the extended Euclidean algorithm. Throws
/// PreconditionError carrying gcd(u, x^n - 1) when u is not a unit.
Element euclid_inverse(const Element& u);

/// sigma(u) = (A B; B A) for u in RD_2n with A circulant and B reverse
/// circulant.
struct DihedralBlocks {
    IntMatrix a;
    IntMatrix b;
    bool unit = false;
    /// True when the A+B / A-B test decided; false for GF(2), which uses
    /// the rank of sigma(u).
    bool used_block_criterion = false;
};
DihedralBlocks dihedral_blocks(const Element& u);

struct DihedralDouble {
    Element element;      // u + a x u in RD_2n
    Element annihilator;  // v + a y v^T
    SubmoduleBasis basis;
    LinearCode code;
};

/// Lifts u in RC_n (generator b) to the zero-divisor u + a x u of RD_2n,
/// annihilated by v + a y v^T where v is the minimal annihilator of u (v =
/// u^-1 for units over GF(2), which needs x = y = 1). x and y default to 1.
DihedralDouble dihedral_double(const Element& u, const std::optional<Element>& x = std::nullopt,
                               const std::optional<Element>& y = std::nullopt);

struct RateHalfDihedral {
    Element u;  // 1 + a + ab + ... + ab^(n-2)
    Element v;  // b + b^2 + ... + b^(n-1) + ab^(n-1)
    LinearCode code;
};
/// The (2n, n) code over GF(2)D_2n with generator (I_n B), n even.
RateHalfDihedral rate_half_dihedral(std::size_t n);

/// a = 1 + sum_{i in I} (g^i + g^(n-i) + g^(n+i) + g^(2n-i)) in GF(2)C_2n,
/// which satisfies a^2 = a a^T = 1.
Element orthogonal_unit(std::size_t n, const std::vector<std::size_t>& indices);

struct SelfDualFamily {
    Element u;  // 1 + h(a + a^2 + a^3) in GF(2)(C2 x C4)
    LinearCode code;
};
SelfDualFamily selfdual_family();

/// v = sum_h (h, f(h)) in GF(2)(H x G) with H = label (order k, listed
/// slowest) and G = base (order m), so sigma(v) is a k x k grid of m x m
/// permutation blocks. `rows` are the j block-rows kept in the check.
struct LdpcPlan {
    GroupSpec base;
    GroupSpec label;
    std::vector<std::size_t> f;     // f[h] = listing index in G
    std::vector<std::size_t> rows;  // block-row indices into H
    std::optional<std::uint64_t> seed;
};

/// f(h) uniform in G, j distinct block rows, from a seeded generator.
LdpcPlan random_ldpc_plan(const GroupSpec& base, const GroupSpec& label, std::size_t j, std::uint64_t seed);

struct QcLdpc {
    LdpcPlan plan;
    Element v;
    /// The jm x km (j, k)-regular check (may have dependent rows).
    FpMatrix check;
    LinearCode code;
    std::size_t m = 0;
    std::size_t k = 0;
    std::size_t j = 0;
    double target_rate = 0;
    double exact_rate = 0;
};
QcLdpc qc_ldpc(const LdpcPlan& plan);

struct LdpcUnitExample {
    Element v;  // check element 1 + sum g^(n - o)
    Element u;  // v^-1, the generator element
    LinearCode code;
};
/// Unit-derived LDPC code in GF(2)C_n: W spanned by g^0, g^stride, ...;
/// generator rows of sigma(u), check = sigma(v) with those columns deleted,
/// transposed.
LdpcUnitExample ldpc_unit_example(std::size_t n, const std::vector<std::size_t>& offsets = {1, 3, 8, 12},
                                  std::size_t stride = 2);

}  // namespace grcodes
