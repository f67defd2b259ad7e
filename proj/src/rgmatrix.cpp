#include "grcodes/rgmatrix.hpp"

#include <boost/integer/common_factor.hpp>

#include "grcodes/error.hpp"

namespace grcodes {

namespace {

void require_field(const Element& u, const char* what) {
    if (!u.ring().is_field()) throw PreconditionError(std::string(what) + " requires a prime-field coefficient ring");
}

}  // namespace

FpMatrix rg_matrix(const Element& u) {
    require_field(u, "rg_matrix");
    const Group& g = u.group();
    const std::size_t n = u.size();
    FpMatrix m(n, n, u.ring().modulus());
    const auto& c = u.residues();
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t gi_inv = g.inv(i);
        auto row = m.row(i);
        for (std::size_t j = 0; j < n; ++j) row[j] = c[g.mul(gi_inv, j)];
    }
    return m;
}

IntMatrix rg_matrix_integer(const Element& u) {
    const Group& g = u.group();
    const std::size_t n = u.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t gi_inv = g.inv(i);
        for (std::size_t j = 0; j < n; ++j) m(i, j) = u.coeff(g.mul(gi_inv, j));
    }
    return m;
}

FpMatrix left_rg_matrix(const Element& u) {
    require_field(u, "left_rg_matrix");
    const Group& g = u.group();
    const std::size_t n = u.size();
    FpMatrix m(n, n, u.ring().modulus());
    const auto& c = u.residues();
    // (u g_i) has coefficient u_{g_j g_i^-1} at g_j.
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t gi_inv = g.inv(i);
        auto row = m.row(i);
        for (std::size_t j = 0; j < n; ++j) row[j] = c[g.mul(j, gi_inv)];
    }
    return m;
}

Element element_from_first_row(GroupPtr group, Ring ring, std::span<const std::uint32_t> row) {
    if (row.size() != group->order()) throw PreconditionError("first row length does not match group order");
    return Element::from_residues(std::move(group), ring, std::vector<std::uint32_t>(row.begin(), row.end()));
}

Element element_from_first_column(GroupPtr group, Ring ring, std::span<const std::uint32_t> column) {
    if (column.size() != group->order()) throw PreconditionError("first column length does not match group order");
    std::vector<std::uint32_t> coeffs(column.size());
    for (std::size_t i = 0; i < column.size(); ++i) coeffs[group->inv(i)] = column[i];
    return Element::from_residues(std::move(group), ring, std::move(coeffs));
}

Element element_from_first_column(GroupPtr group, Ring ring, std::span<const Integer> column) {
    if (column.size() != group->order()) throw PreconditionError("first column length does not match group order");
    Element e(group, ring);
    for (std::size_t i = 0; i < column.size(); ++i) e.set_coeff(group->inv(i), column[i]);
    return e;
}

std::vector<std::uint32_t> first_column(const Element& v) {
    require_field(v, "first_column");
    std::vector<std::uint32_t> col(v.size());
    for (std::size_t i = 0; i < col.size(); ++i) col[i] = v.residues()[v.group().inv(i)];
    return col;
}

const char* to_string(Classification::Kind kind) {
    switch (kind) {
        case Classification::Kind::unit: return "unit";
        case Classification::Kind::zero_divisor: return "zero-divisor";
        case Classification::Kind::neither: return "neither";
    }
    return "?";
}

std::size_t rg_rank(const Element& u) { return rank(rg_matrix(u)); }

namespace {

Classification classify_field(const Element& u) {
    Classification out;
    const FpMatrix m = rg_matrix(u);
    const std::size_t n = u.size();
    if (u.is_zero()) {
        out.kind = Classification::Kind::zero_divisor;
        out.rank = 0;
        out.witness = Element::one(u.group_ptr(), u.ring());
        return out;
    }
    if (auto inv = inverse(m)) {
        out.kind = Classification::Kind::unit;
        out.rank = n;
        out.inverse = element_from_first_row(u.group_ptr(), u.ring(), inv->row(0));
        return out;
    }
    const auto kernel = null_space(m);
    out.kind = Classification::Kind::zero_divisor;
    out.rank = n - kernel.size();
    out.witness = element_from_first_column(u.group_ptr(), u.ring(), kernel.front());
    return out;
}

Classification classify_integers(const Element& u) {
    Classification out;
    const IntMatrix m = rg_matrix_integer(u);
    const std::size_t n = u.size();
    const Integer det = det_integer(m);
    out.determinant = det;
    if (det == 1 || det == -1) {
        // First row y of sigma(u)^-1 solves sigma(u)^T y = e_1.
        std::vector<Integer> e1(n, Integer(0));
        e1[0] = 1;
        const auto y = rational_solve(m.transpose(), e1);
        if (!y) throw Error("internal: unimodular system without solution");
        Element inv(u.group_ptr(), u.ring());
        for (std::size_t j = 0; j < n; ++j) {
            if (denominator((*y)[j]) != 1) throw Error("internal: non-integral inverse of a unimodular matrix");
            inv.set_coeff(j, numerator((*y)[j]));
        }
        out.kind = Classification::Kind::unit;
        out.inverse = std::move(inv);
        out.rank = n;
        return out;
    }
    if (det == 0) {
        const auto kernel = rational_null_space(m);
        const auto& x = kernel.front();
        Integer lcm(1);
        for (const auto& q : x) lcm = boost::integer::lcm(lcm, Integer(denominator(q)));
        std::vector<Integer> col(n);
        Integer g(0);
        for (std::size_t i = 0; i < n; ++i) {
            col[i] = numerator(x[i]) * (lcm / denominator(x[i]));
            g = boost::integer::gcd(g, col[i]);
        }
        if (g > 1) {
            for (auto& c : col) c /= g;
        }
        out.kind = Classification::Kind::zero_divisor;
        out.rank = n - kernel.size();
        out.witness = element_from_first_column(u.group_ptr(), u.ring(), std::span<const Integer>(col));
        return out;
    }
    out.kind = Classification::Kind::neither;
    out.rank = n;
    return out;
}

}  // namespace

Classification classify(const Element& u) {
    return u.ring().is_field() ? classify_field(u) : classify_integers(u);
}

}  // namespace grcodes
