#include "grcodes/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "grcodes/error.hpp"
#include "grcodes/rgmatrix.hpp"

namespace grcodes {

namespace {

void require_cyclic_field(const Element& u, const char* what) {
    if (!u.group().is_cyclic()) throw PreconditionError(std::string(what) + " requires a cyclic group");
    if (!u.ring().is_field()) throw PreconditionError(std::string(what) + " requires a prime-field coefficient ring");
}

// Rows y with y sigma(p) = 0 are exactly those orthogonal to the columns of
// sigma(p).
FpMatrix check_from_annihilator(const Element& v) { return independent_rows(rg_matrix(v).transpose()); }

// Minimal-degree annihilator (x^n - 1) / gcd(u, x^n - 1) of u in GF(p)C_n.
Element minimal_annihilator(const Element& u) {
    const Poly xn1 = Poly::cyclotomic_modulus(u.size(), u.ring().modulus());
    return from_poly(divmod(xn1, gcd(to_poly(u), xn1)).quotient, u.group_ptr(), u.ring());
}

}  // namespace

CyclicCode cyclic_code(const Element& h) {
    require_cyclic_field(h, "cyclic_code");
    if (h.is_zero()) throw PreconditionError("h = 0 generates the zero code");
    const std::size_t n = h.size();
    const std::uint32_t q = h.ring().modulus();
    const Poly xn1 = Poly::cyclotomic_modulus(n, q);
    const Poly d = gcd(to_poly(h), xn1);
    const auto [p, rem] = divmod(xn1, d);
    if (!rem.is_zero()) throw Error("internal: gcd does not divide x^n - 1");

    CyclicCode out{{d, p, from_poly(d, h.group_ptr(), h.ring()), from_poly(p, h.group_ptr(), h.ring())}, {}};
    const std::size_t k = n - static_cast<std::size_t>(d.degree());
    LinearCode& code = out.code;
    code.n = n;
    code.k = k;
    if (k == n) {
        code.generator = FpMatrix::identity(n, q);
        code.check = FpMatrix(0, n, q);
    } else {
        code.generator = rg_matrix(out.pair.generator).select_rows(SubmoduleBasis::first(k, n).indices());
        code.check = check_from_annihilator(out.pair.check);
    }
    code.provenance = {CodeKind::cyclic, out.pair.generator, SubmoduleBasis::first(k, n), Side::right,
                       "generator polynomial " + d.to_string('g')};
    return out;
}

Element euclid_inverse(const Element& u) {
    require_cyclic_field(u, "euclid_inverse");
    const Poly xn1 = Poly::cyclotomic_modulus(u.size(), u.ring().modulus());
    const ExtendedGcd eg = extended_gcd(to_poly(u), xn1);
    if (!eg.g.is_one()) throw PreconditionError("u is not a unit", "gcd(u, g^n - 1) = " + eg.g.to_string('g'));
    return from_poly(eg.s, u.group_ptr(), u.ring());
}

DihedralBlocks dihedral_blocks(const Element& u) {
    if (!u.group().is_dihedral()) throw PreconditionError("dihedral_blocks requires a dihedral group");
    const std::size_t n = u.group().spec().param;
    const IntMatrix s = rg_matrix_integer(u);
    DihedralBlocks out{IntMatrix(n, n), IntMatrix(n, n), false, false};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.a(i, j) = s(i, j);
            out.b(i, j) = s(i, n + j);
        }
    }
    const Ring& ring = u.ring();
    if (ring.is_field() && ring.modulus() == 2) {
        out.unit = rg_rank(u) == 2 * n;
        return out;
    }
    out.used_block_criterion = true;
    const Integer dp = det_integer(out.a + out.b);
    const Integer dm = det_integer(out.a - out.b);
    if (ring.is_field()) {
        const std::uint32_t p = ring.modulus();
        out.unit = dp % p != 0 && dm % p != 0;
    } else {
        out.unit = (dp == 1 || dp == -1) && (dm == 1 || dm == -1);
    }
    return out;
}

DihedralDouble dihedral_double(const Element& u, const std::optional<Element>& x, const std::optional<Element>& y) {
    require_cyclic_field(u, "dihedral_double");
    const std::size_t n = u.size();
    const Element one = Element::one(u.group_ptr(), u.ring());
    const Element xe = x ? *x : one;
    const Element ye = y ? *y : one;
    if (!xe.compatible(u) || !ye.compatible(u)) throw PreconditionError("x and y must lie in the same group ring as u");

    Element v = minimal_annihilator(u);
    if (v.is_zero()) {
        if (u.ring().modulus() != 2)
            throw PreconditionError("u is a unit; doubling needs a zero-divisor outside characteristic 2");
        // (u + a u)(u^-1 + a u^-T) = 1 + 2a + 1 = 0 over GF(2).
        v = euclid_inverse(u);
    }

    const GroupPtr d = make_group(GroupSpec::dihedral(n));
    auto lift = [&](const Element& rot, const Element& refl) {
        std::vector<std::uint32_t> c(2 * n);
        std::copy(rot.residues().begin(), rot.residues().end(), c.begin());
        std::copy(refl.residues().begin(), refl.residues().end(), c.begin() + static_cast<long>(n));
        return Element::from_residues(d, u.ring(), std::move(c));
    };
    DihedralDouble out{lift(u, xe * u), lift(v, ye * transpose(v)), SubmoduleBasis{}, LinearCode{}};
    if (!(out.element * out.annihilator).is_zero())
        throw PreconditionError("v + a y v^T does not annihilate u + a x u for these x, y");
    out.basis = greedy_basis(out.element);
    out.code = zero_divisor_code(out.element, out.basis);
    return out;
}

RateHalfDihedral rate_half_dihedral(std::size_t n) {
    if (n == 0 || n % 2) throw PreconditionError("rate_half_dihedral requires n even");
    const GroupPtr g = make_group(GroupSpec::dihedral(n));
    const Ring f2 = Ring::gf2();
    Element u = Element::one(g, f2);
    for (std::size_t k = 0; k + 1 < n; ++k) u.set_coeff(n + k, 1);
    Element v(g, f2);
    for (std::size_t k = 1; k < n; ++k) v.set_coeff(k, 1);
    v.set_coeff(2 * n - 1, 1);
    if (!(u * v).is_zero()) throw Error("internal: rate-half annihilator fails");

    RateHalfDihedral out{u, v, zero_divisor_code(u, SubmoduleBasis::first(n, 2 * n))};
    if (rg_rank(u) != n) throw Error("internal: rate-half element has rank other than n");
    const FpMatrix check = check_from_annihilator(v);
    if (check.rows() == n) {
        out.code.check = check;
        out.code.provenance.note = "check from v";
    }
    return out;
}

Element orthogonal_unit(std::size_t n, const std::vector<std::size_t>& indices) {
    if (n == 0) throw PreconditionError("orthogonal_unit requires n >= 1");
    std::set<std::size_t> seen;
    for (std::size_t i : indices) {
        if (i == 0 || i >= n) throw PreconditionError("orthogonal_unit indices must satisfy 1 <= i < n");
        if (2 * i == n) throw PreconditionError("index " + std::to_string(i) + " collapses (2i = n)");
        if (!seen.insert(i).second) throw PreconditionError("orthogonal_unit indices must be distinct");
        if (seen.count(n - i))
            throw PreconditionError("indices " + std::to_string(i) + " and " + std::to_string(n - i) +
                                    " give the same term");
    }
    const GroupPtr g = make_group(GroupSpec::cyclic(2 * n));
    const Ring f2 = Ring::gf2();
    std::vector<std::uint32_t> c(2 * n, 0);
    c[0] = 1;
    for (std::size_t i : indices)
        for (std::size_t e : {i, n - i, n + i, 2 * n - i}) c[e] ^= 1u;
    Element a = Element::from_residues(g, f2, std::move(c));
    if (!(a * a).is_one() || !(a * transpose(a)).is_one()) throw Error("internal: orthogonal unit check failed");
    return a;
}

SelfDualFamily selfdual_family() {
    const GroupPtr g = make_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}));
    const Element u = parse_element("1 + h*a + h*a^2 + h*a^3", g, Ring::gf2());
    return {u, zero_divisor_code(u, greedy_basis(u))};
}

LdpcPlan random_ldpc_plan(const GroupSpec& base, const GroupSpec& label, std::size_t j, std::uint64_t seed) {
    const std::size_t m = base.order();
    const std::size_t k = label.order();
    if (j == 0 || j >= k) throw PreconditionError("LDPC plan needs 1 <= j < k");
    std::mt19937_64 rng(seed);
    LdpcPlan plan{base, label, std::vector<std::size_t>(k), {}, seed};
    for (auto& x : plan.f) x = static_cast<std::size_t>(rng() % m);
    std::vector<std::size_t> pool(k);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    plan.rows.assign(pool.begin(), pool.begin() + static_cast<long>(j));
    std::sort(plan.rows.begin(), plan.rows.end());
    return plan;
}

QcLdpc qc_ldpc(const LdpcPlan& plan) {
    const std::size_t m = plan.base.order();
    const std::size_t k = plan.label.order();
    const std::size_t j = plan.rows.size();
    if (j == 0 || j >= k) throw PreconditionError("LDPC plan needs 1 <= j < k");
    if (plan.f.size() != k) throw PreconditionError("f must assign one element of G to each element of H");
    for (std::size_t x : plan.f)
        if (x >= m) throw PreconditionError("f(h) out of range for G");
    for (std::size_t i = 0; i < j; ++i) {
        if (plan.rows[i] >= k) throw PreconditionError("block row out of range");
        if (i > 0 && plan.rows[i] <= plan.rows[i - 1]) throw PreconditionError("block rows must be strictly increasing");
    }

    const GroupPtr grp = make_group(GroupSpec::product({plan.label, plan.base}));
    const Ring f2 = Ring::gf2();
    std::vector<std::uint32_t> c(k * m, 0);
    for (std::size_t h = 0; h < k; ++h) c[h * m + plan.f[h]] ^= 1u;

    QcLdpc out{plan, Element::from_residues(grp, f2, std::move(c)), {}, {}, m, k, j, 0, 0};
    const FpMatrix s = rg_matrix(out.v);
    std::vector<std::size_t> rows;
    for (std::size_t b : plan.rows)
        for (std::size_t t = 0; t < m; ++t) rows.push_back(b * m + t);
    out.check = s.select_rows(rows);

    for (std::size_t i = 0; i < out.check.rows(); ++i)
        if (out.check.row_weight(i) != k) throw Error("internal: LDPC check row weight differs from k");
    for (std::size_t col = 0; col < out.check.cols(); ++col)
        if (out.check.col_weight(col) != j) throw Error("internal: LDPC check column weight differs from j");

    LinearCode& code = out.code;
    code.n = k * m;
    code.generator = null_space_matrix(out.check);
    code.k = code.generator.rows();
    code.check = independent_rows(out.check);
    code.provenance = {CodeKind::ldpc, out.v, std::nullopt, Side::right,
                       plan.seed ? "seed " + std::to_string(*plan.seed) : "user plan"};
    out.target_rate = 1.0 - static_cast<double>(j) / static_cast<double>(k);
    out.exact_rate = static_cast<double>(code.k) / static_cast<double>(code.n);
    return out;
}

LdpcUnitExample ldpc_unit_example(std::size_t n, const std::vector<std::size_t>& offsets, std::size_t stride) {
    if (n < 2) throw PreconditionError("ldpc_unit_example requires n >= 2");
    if (stride == 0) throw PreconditionError("stride must be positive");
    const GroupPtr g = make_group(GroupSpec::cyclic(n));
    const Ring f2 = Ring::gf2();
    std::vector<std::uint32_t> c(n, 0);
    c[0] = 1;
    for (std::size_t o : offsets) c[(n - o % n) % n] ^= 1u;
    const Element v = Element::from_residues(g, f2, std::move(c));
    const Element u = euclid_inverse(v);
    if (!(u * v).is_one()) throw Error("internal: Euclid inverse check failed");

    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; i += stride) idx.push_back(i);
    if (idx.size() >= n) throw PreconditionError("stride 1 leaves no check rows");
    const SubmoduleBasis basis(idx, n);

    LdpcUnitExample out{v, u, {}};
    LinearCode& code = out.code;
    code.n = n;
    code.k = idx.size();
    code.generator = rg_matrix(u).select_rows(idx);
    code.check = rg_matrix(v).delete_cols(idx).transpose();
    code.provenance = {CodeKind::unit_derived, u, basis, Side::right, "check element " + print_element(v)};
    return out;
}

}  // namespace grcodes
