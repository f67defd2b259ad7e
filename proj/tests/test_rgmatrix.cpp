#include <doctest.h>

#include <random>

#include "grcodes/error.hpp"
#include "grcodes/rgmatrix.hpp"
#include "oracles.hpp"

using namespace grcodes;

namespace {

FpMatrix mat(const std::vector<std::vector<std::uint32_t>>& rows, std::uint32_t p = 2) {
    return FpMatrix::from_rows(rows, rows.empty() ? 0 : rows[0].size(), p);
}

std::vector<std::vector<Integer>> as_rows(const IntMatrix& m) {
    std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
    return out;
}

// Entry (i, j) straight from the definition, with no group-ring arithmetic.
FpMatrix entry_formula(const Element& u) {
    const auto& g = u.group();
    FpMatrix m(u.size(), u.size(), u.ring().modulus());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) m(i, j) = u.residues()[g.mul(g.inv(i), j)];
    return m;
}

const std::vector<GroupSpec>& specs() {
    static const std::vector<GroupSpec> s = {GroupSpec::cyclic(7), GroupSpec::cyclic(8), GroupSpec::dihedral(3),
                                             GroupSpec::dihedral(4), GroupSpec::elementary_abelian_2(3),
                                             GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}),
                                             GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)})};
    return s;
}

}  // namespace

TEST_CASE("rg_matrix small cases") {
    const auto c2 = make_group(GroupSpec::cyclic(2));
    CHECK(rg_matrix(parse_element("1+g", c2, Ring::gf2())) == mat({{1, 1}, {1, 1}}));
    const auto d8 = make_group(GroupSpec::dihedral(4));
    CHECK(rg_matrix(Element::one(d8, Ring::prime_field(5))) == FpMatrix::identity(8, 5));
    const auto c3 = make_group(GroupSpec::cyclic(3));
    const IntMatrix z = rg_matrix_integer(parse_element("2 - g", c3, Ring::integers()));
    CHECK(z(0, 0) == 2);
    CHECK(z(0, 1) == -1);
    CHECK(z(1, 2) == -1);
    CHECK(z(2, 0) == -1);
}

TEST_CASE("rg_matrix is a ring homomorphism compatible with transpose") {
    std::mt19937_64 rng(21);
    std::size_t cases = 0;
    for (const auto& spec : specs()) {
        const auto g = make_group(spec);
        for (const Ring ring : {Ring::gf2(), Ring::prime_field(3)}) {
            for (int t = 0; t < 10; ++t, ++cases) {
                const Element u = oracle::random_element(g, ring, rng);
                const Element v = oracle::random_element(g, ring, rng);
                CHECK(rg_matrix(u) == entry_formula(u));
                CHECK(rg_matrix(u * v) == rg_matrix(u) * rg_matrix(v));
                CHECK(rg_matrix(u + v) == rg_matrix(u) + rg_matrix(v));
                CHECK(rg_matrix(transpose(u)) == rg_matrix(u).transpose());
                // row i of the left matrix is u g_i
                const FpMatrix l = left_rg_matrix(u);
                for (std::size_t i = 0; i < u.size(); ++i) {
                    const Element ug = u * Element::monomial(g, ring, i);
                    CHECK(std::vector<std::uint32_t>(l.row(i).begin(), l.row(i).end()) == ug.residues());
                }
                CHECK(element_from_first_row(g, ring, rg_matrix(u).row(0)) == u);
                CHECK(element_from_first_column(g, ring, rg_matrix(u).column(0)) == u);
                CHECK(first_column(u) == rg_matrix(u).column(0));
            }
        }
    }
    CHECK(cases >= 100);
}

TEST_CASE("dihedral block form") {
    std::mt19937_64 rng(5);
    for (std::size_t n : {3, 4}) {
        const auto g = make_group(GroupSpec::dihedral(n));
        for (int t = 0; t < 10; ++t) {
            const Element u = oracle::random_element(g, Ring::gf2(), rng);
            const FpMatrix m = rg_matrix(u);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    CHECK(m(i, j) == m(i + n, j + n));
                    CHECK(m(i, j + n) == m(i + n, j));
                    CHECK(m(i, j) == m(0, (j + n - i) % n));
                    CHECK(m(i, j + n) == m(0, n + (j + i) % n));
                }
        }
    }
}

TEST_CASE("rref, rank, null space") {
    const FpMatrix ones = mat({{1, 1}, {1, 1}});
    const auto r = rref(ones);
    CHECK(r.reduced == mat({{1, 1}, {0, 0}}));
    CHECK(r.rank == 1);
    CHECK(r.pivot_columns == std::vector<std::size_t>{0});
    CHECK(null_space(ones) == std::vector<std::vector<std::uint32_t>>{{1, 1}});
    CHECK(rref(FpMatrix::identity(5, 3)).reduced == FpMatrix::identity(5, 3));
    CHECK(null_space(FpMatrix::identity(4, 2)).empty());

    const auto c7 = make_group(GroupSpec::cyclic(7));
    CHECK(null_space(rg_matrix(parse_element("1 + g + g^3", c7, Ring::gf2()))).size() == 3);
    const auto c2c4 = make_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}));
    CHECK(rank(rg_matrix(parse_element("1 + h*a + h*a^2 + h*a^3", c2c4, Ring::gf2()))) == 4);
}

TEST_CASE("linear algebra against brute force") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 120; ++t) {
        const std::uint32_t p = t % 2 ? 3 : 2;
        const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % (p == 2 ? 9 : 6);
        const FpMatrix m = oracle::random_matrix(rows, cols, p, rng);
        const auto ns = null_space_matrix(m);
        const auto brute = oracle::orthogonal_complement(m);
        CHECK(rank(m) + ns.rows() == cols);
        CHECK(oracle::codeword_set(ns.rows() ? ns : FpMatrix(1, cols, p)) == brute);
        CHECK(oracle::codeword_set(m) == oracle::codeword_set(row_space_basis(m)));
        const FpMatrix ln = left_null_space_matrix(m);
        CHECK((ln.rows() == 0 || (ln * m).is_zero()));
        CHECK(ln.rows() + rank(m) == rows);
        const FpMatrix ind = independent_rows(m);
        CHECK(ind.rows() == rank(m));
        CHECK(same_row_space(ind, m));
        for (std::size_t i = 0; i < rows; ++i) CHECK(in_row_space(m, m.row(i)));
    }
}

TEST_CASE("right inverse") {
    CHECK(right_inverse(FpMatrix::identity(4, 2)) == FpMatrix::identity(4, 2));
    CHECK(right_inverse(mat({{1, 1}})) == mat({{1}, {0}}));
    CHECK_THROWS_AS(right_inverse(mat({{1, 1}, {1, 1}})), PreconditionError);
    std::mt19937_64 rng(4);
    int tried = 0;
    for (int t = 0; t < 200 && tried < 100; ++t) {
        const std::uint32_t p = t % 3 ? 2 : 5;
        const FpMatrix m = oracle::random_matrix(1 + rng() % 5, 6 + rng() % 4, p, rng);
        if (rank(m) < m.rows()) continue;
        ++tried;
        CHECK(m * right_inverse(m) == FpMatrix::identity(m.rows(), p));
    }
    CHECK(tried == 100);
    const auto inv = inverse(mat({{1, 2}, {3, 4}}, 5));
    REQUIRE(inv);
    CHECK(*inv * mat({{1, 2}, {3, 4}}, 5) == FpMatrix::identity(2, 5));
    CHECK_FALSE(inverse(mat({{1, 1}, {1, 1}})));
}

TEST_CASE("integer determinant") {
    CHECK(det_integer(IntMatrix::identity(5)) == 1);
    IntMatrix ones(2, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) ones(i, j) = 1;
    CHECK(det_integer(ones) == 0);
    std::mt19937_64 rng(12);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 1 + t % 5;
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long long>(rng() % 21) - 10;
        CHECK(det_integer(m) == oracle::cofactor_det(as_rows(m)));
    }
}

TEST_CASE("bit-packed and dense paths agree") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        const FpMatrix m = oracle::random_matrix(3 + rng() % 10, 60 + rng() % 140, 2, rng);
        CHECK(BitMatrix::from(m).to_fp() == m);
        IncrementalBasis basis(m.cols(), 2);
        std::size_t added = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) added += basis.add(m.row(i));
        CHECK(added == rank(m));
        for (std::size_t i = 0; i < m.rows(); ++i) CHECK(basis.contains(m.row(i)));
    }
}

TEST_CASE("classify") {
    const auto c1 = make_group(GroupSpec::cyclic(1));
    const auto c2 = make_group(GroupSpec::cyclic(2));
    const auto c14 = make_group(GroupSpec::cyclic(14));

    const auto one = classify(Element::one(c2, Ring::gf2()));
    CHECK(one.kind == Classification::Kind::unit);
    CHECK(one.inverse->is_one());

    const Element s = parse_element("1+g", c2, Ring::gf2());
    const auto zd = classify(s);
    CHECK(zd.kind == Classification::Kind::zero_divisor);
    CHECK(*zd.witness == s);
    CHECK(zd.rank == 1);

    const Element u14 = parse_element("1+g^2+g^5+g^9+g^12", c14, Ring::gf2());
    const auto un = classify(u14);
    CHECK(un.kind == Classification::Kind::unit);
    CHECK(*un.inverse == u14);

    const auto two = classify(parse_element("2", c1, Ring::integers()));
    CHECK(two.kind == Classification::Kind::neither);
    CHECK(*two.determinant == 2);
    CHECK(classify(parse_element("1 - g", c2, Ring::integers())).kind == Classification::Kind::zero_divisor);
    CHECK(classify(parse_element("-1", c2, Ring::integers())).kind == Classification::Kind::unit);
}

TEST_CASE("unit / zero-divisor dichotomy over small groups") {
    std::mt19937_64 rng(31);
    std::size_t cases = 0;
    for (const auto& spec : specs()) {
        if (spec.order() > 12) continue;
        const auto g = make_group(spec);
        for (const Ring ring : {Ring::gf2(), Ring::prime_field(3)}) {
            for (int t = 0; t < 12; ++t, ++cases) {
                const Element u = oracle::random_element(g, ring, rng);
                const auto c = classify(u);
                CHECK(c.kind != Classification::Kind::neither);
                if (c.kind == Classification::Kind::unit) {
                    CHECK((u * *c.inverse).is_one());
                    CHECK((*c.inverse * u).is_one());
                    CHECK(c.rank == u.size());
                } else {
                    CHECK_FALSE(c.witness->is_zero());
                    CHECK((u * *c.witness).is_zero());
                    CHECK(c.rank < u.size());
                }
            }
        }
    }
    CHECK(cases >= 100);
}
