#include <doctest.h>

#include <random>

#include "grcodes/constructions.hpp"
#include "grcodes/error.hpp"
#include "grcodes/rgmatrix.hpp"
#include "oracles.hpp"

using namespace grcodes;

namespace {

Element el(const GroupSpec& spec, const std::string& text, Ring ring = Ring::gf2()) {
    return parse_element(text, make_group(spec), ring);
}

}  // namespace

TEST_CASE("cyclic codes") {
    auto ham = cyclic_code(el(GroupSpec::cyclic(7), "1 + g + g^3"));
    CHECK(ham.pair.d == Poly({1, 1, 0, 1}, 2));
    CHECK(ham.code.k == 4);
    CHECK(code_distance(ham.code) == 3);
    CHECK(is_consistent(ham.code));

    auto par = cyclic_code(el(GroupSpec::cyclic(4), "1 + g"));
    CHECK(par.pair.d == Poly({1, 1}, 2));
    CHECK(par.pair.p == Poly({1, 1, 1, 1}, 2));
    CHECK(par.code.k == 3);
    CHECK(code_distance(par.code) == 2);

    // 1 + x^2 + x^5 is coprime to x^7 - 1 over GF(2)
    auto full = cyclic_code(el(GroupSpec::cyclic(7), "1 + g^2 + g^5"));
    CHECK(full.pair.d.is_one());
    CHECK(full.code.k == 7);
    CHECK(code_distance(full.code) == 1);

    CHECK_THROWS_AS(cyclic_code(Element::zero(make_group(GroupSpec::cyclic(5)), Ring::gf2())), PreconditionError);
    CHECK_THROWS_AS(cyclic_code(el(GroupSpec::dihedral(3), "1 + a")), PreconditionError);
}

TEST_CASE("cyclic pairs multiply to x^n - 1 and their ranks add to n") {
    std::mt19937_64 rng(51);
    std::size_t cases = 0;
    for (int t = 0; cases < 150; ++t) {
        const std::size_t n = 2 + rng() % 15;
        const Ring ring = t % 3 == 0 ? Ring::prime_field(3) : Ring::gf2();
        const Element h = oracle::random_element(make_group(GroupSpec::cyclic(n)), ring, rng);
        if (h.is_zero()) continue;
        const auto cc = cyclic_code(h);
        CHECK(cc.pair.d * cc.pair.p == Poly::cyclotomic_modulus(n, ring.modulus()));
        CHECK(rg_rank(cc.pair.generator) + rg_rank(cc.pair.check) == n);
        CHECK(cc.code.k == n - static_cast<std::size_t>(cc.pair.d.degree()));
        CHECK(is_consistent(cc.code));
        // the code is the ideal generated by h
        CHECK(same_row_space(cc.code.generator, rg_matrix(h)));
        ++cases;
    }
}

TEST_CASE("minimal annihilator is principal") {
    std::mt19937_64 rng(52);
    std::size_t cases = 0;
    for (int t = 0; cases < 120; ++t) {
        const std::size_t n = 2 + rng() % 15;
        const Element u = oracle::random_element(make_group(GroupSpec::cyclic(n)), Ring::gf2(), rng);
        const std::size_t r = rg_rank(u);
        if (r == 0 || r == n) continue;
        const Poly v = divmod(Poly::cyclotomic_modulus(n, 2), gcd(to_poly(u), Poly::cyclotomic_modulus(n, 2))).quotient;
        const Element ve = from_poly(v, u.group_ptr(), Ring::gf2());
        CHECK((u * ve).is_zero());
        CHECK(rg_rank(ve) == n - r);
        ++cases;
    }
}

TEST_CASE("dihedral blocks") {
    const Element u = el(GroupSpec::dihedral(4), "1 + b + b^3", Ring::prime_field(3));
    const auto blk = dihedral_blocks(u);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(blk.b(i, j) == 0);
    CHECK(blk.used_block_criterion);

    for (std::size_t n : {3, 4, 5}) {
        CHECK_FALSE(dihedral_blocks(el(GroupSpec::dihedral(n), "1 + a", Ring::prime_field(3))).unit);
        CHECK_FALSE(dihedral_blocks(el(GroupSpec::dihedral(n), "1 + a", Ring::integers())).unit);
    }
    CHECK_THROWS_AS(dihedral_blocks(el(GroupSpec::cyclic(4), "1")), PreconditionError);
    CHECK_FALSE(dihedral_blocks(el(GroupSpec::dihedral(3), "1 + a")).used_block_criterion);
}

TEST_CASE("A +- B criterion agrees with the rank test") {
    std::mt19937_64 rng(53);
    const auto d10 = make_group(GroupSpec::dihedral(5));
    for (int t = 0; t < 500; ++t) {
        const Element u = oracle::random_element(d10, Ring::prime_field(3), rng);
        const auto blk = dihedral_blocks(u);
        CHECK(blk.unit == (rg_rank(u) == 10));
        const FpMatrix m = rg_matrix(u);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                CHECK(blk.a.reduce(3)(i, j) == m(i, j));
                CHECK(blk.b.reduce(3)(i, j) == m(i, j + 5));
            }
    }
    const auto d6 = make_group(GroupSpec::dihedral(3));
    for (int t = 0; t < 500; ++t) {
        std::vector<long long> c(6);
        for (auto& x : c) x = static_cast<long long>(rng() % 5) - 2;
        const Element u = Element::from_coefficients(d6, Ring::integers(), c);
        const Integer det = det_integer(rg_matrix_integer(u));
        CHECK(dihedral_blocks(u).unit == (det == 1 || det == -1));
        CHECK((classify(u).kind == Classification::Kind::unit) == (det == 1 || det == -1));
    }
}

TEST_CASE("dihedral doubles") {
    auto d24 = dihedral_double(el(GroupSpec::cyclic(12), "1 + g^2 + g^3 + g^9 + g^10 + g^11"));
    CHECK(d24.code.n == 24);
    CHECK(d24.code.k == 11);
    CHECK(code_distance(d24.code) == 8);
    CHECK((d24.element * d24.annihilator).is_zero());
    CHECK(is_consistent(d24.code));

    auto d14 = dihedral_double(el(GroupSpec::cyclic(7), "1 + g + g^3"));
    CHECK(d14.code.k == 7);
    CHECK(code_distance(d14.code) == 4);

    // a unit u over GF(2) still doubles to a zero-divisor
    auto du = dihedral_double(el(GroupSpec::cyclic(7), "1 + g^2 + g^5"));
    CHECK((du.element * du.annihilator).is_zero());
    CHECK(du.code.k == 7);
    CHECK(code_distance(du.code) == oracle::naive_distance(du.code.generator));

    std::mt19937_64 rng(54);
    std::size_t cases = 0;
    for (int t = 0; cases < 100; ++t) {
        const std::size_t n = 3 + rng() % 8;
        const auto g = make_group(GroupSpec::cyclic(n));
        const Element u = oracle::random_element(g, Ring::gf2(), rng);
        if (u.is_zero()) continue;
        const bool unit = rg_rank(u) == n;
        const std::optional<Element> x = unit ? std::nullopt : std::optional(oracle::random_element(g, Ring::gf2(), rng));
        const std::optional<Element> y = unit ? std::nullopt : std::optional(oracle::random_element(g, Ring::gf2(), rng));
        const auto dd = dihedral_double(u, x, y);
        CHECK((dd.element * dd.annihilator).is_zero());
        CHECK(is_consistent(dd.code));
        CHECK(dd.code.k == rg_rank(dd.element));
        ++cases;
    }
}

namespace {

// Length of the scan that stops at the first dependent row, taken over each
// run of listing indices in turn.
std::size_t stopping_scan(const Element& u, const std::vector<std::pair<std::size_t, std::size_t>>& runs) {
    const FpMatrix m = rg_matrix(u);
    IncrementalBasis basis(m.cols(), m.modulus());
    for (const auto& [begin, end] : runs)
        for (std::size_t i = begin; i < end; ++i)
            if (!basis.add(m.row(i))) break;
    return basis.size();
}

}  // namespace

TEST_CASE("cyclic and dihedral rank theorems") {
    std::mt19937_64 rng(55);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 14;
        const Element u = oracle::random_element(make_group(GroupSpec::cyclic(n)), Ring::gf2(), rng);
        CHECK(stopping_scan(u, {{0, n}}) == rg_rank(u));
    }
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = 2 + rng() % 8;
        const Ring ring = t % 2 ? Ring::gf2() : Ring::prime_field(3);
        const Element u = oracle::random_element(make_group(GroupSpec::dihedral(n)), ring, rng);
        CHECK(stopping_scan(u, {{0, n}, {n, 2 * n}}) == rg_rank(u));
    }
}

TEST_CASE("rate one-half dihedral family") {
    const auto r4 = rate_half_dihedral(4);
    CHECK(r4.code.n == 8);
    CHECK(r4.code.k == 4);
    CHECK(rg_rank(r4.u) == 4);
    CHECK((r4.u * r4.v).is_zero());
    const auto r6 = rate_half_dihedral(6);
    CHECK(r6.code.generator.select_cols(std::vector<std::size_t>{0, 1, 2, 3, 4, 5}) == FpMatrix::identity(6, 2));
    CHECK(is_consistent(r6.code));
    CHECK_THROWS_AS(rate_half_dihedral(5), PreconditionError);
    CHECK(r6.v == el(GroupSpec::dihedral(6), "b + b^2 + b^3 + b^4 + b^5 + a*b^5"));
}

TEST_CASE("orthogonal units") {
    CHECK(orthogonal_unit(5, {}).is_one());
    CHECK(orthogonal_unit(7, {2}) == el(GroupSpec::cyclic(14), "1+g^2+g^5+g^9+g^12"));
    std::mt19937_64 rng(56);
    for (int t = 0; t < 100; ++t) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 1; i < 5; ++i)
            if (rng() % 2) idx.push_back(i);
        const Element a = orthogonal_unit(10, idx);
        CHECK((a * transpose(a)).is_one());
        CHECK((a * a).is_one());
        const FpMatrix m = rg_matrix(a);
        CHECK(m * m.transpose() == FpMatrix::identity(20, 2));
    }
    CHECK_THROWS_AS(orthogonal_unit(10, {5}), PreconditionError);
    CHECK_THROWS_AS(orthogonal_unit(10, {3, 7}), PreconditionError);
    CHECK_THROWS_AS(orthogonal_unit(10, {10}), PreconditionError);
}

TEST_CASE("self-dual family") {
    auto fam = selfdual_family();
    CHECK((fam.u * fam.u).is_zero());
    CHECK(is_symmetric(fam.u));
    CHECK(fam.code.k == 4);
    CHECK(code_distance(fam.code) == 4);
    CHECK(oracle::codewords(fam.code.generator).size() == 16);
}

TEST_CASE("quasi-cyclic LDPC") {
    LdpcPlan plan;
    plan.base = GroupSpec::cyclic(5);
    plan.label = GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::cyclic(2)});
    plan.f = {0, 1, 2, 3, 4, 0};
    plan.rows = {0, 3};
    const auto q = qc_ldpc(plan);
    CHECK(q.check.rows() == 10);
    CHECK(q.check.cols() == 30);
    for (std::size_t i = 0; i < 10; ++i) CHECK(q.check.row_weight(i) == 6);
    for (std::size_t j = 0; j < 30; ++j) CHECK(q.check.col_weight(j) == 2);
    CHECK(q.code.k == 30 - rank(q.check));
    CHECK(is_consistent(q.code));

    // block (l, c) at block-row r is the permutation with 1 at g_s^-1 g_t = f(h_r^-1 h_c)
    const auto base = make_group(plan.base);
    const auto label = make_group(plan.label);
    for (std::size_t bi = 0; bi < plan.rows.size(); ++bi)
        for (std::size_t c = 0; c < 6; ++c) {
            const std::size_t f = plan.f[label->mul(label->inv(plan.rows[bi]), c)];
            for (std::size_t s = 0; s < 5; ++s)
                for (std::size_t t = 0; t < 5; ++t)
                    CHECK(q.check(bi * 5 + s, c * 5 + t) == (base->mul(base->inv(s), t) == f ? 1u : 0u));
        }

    std::size_t plans = 0;
    for (std::size_t m : {5, 7, 11})
        for (std::size_t k : {3, 4, 6})
            for (std::size_t j : {2, 3}) {
                if (j >= k) continue;
                const auto p = random_ldpc_plan(GroupSpec::cyclic(m), GroupSpec::cyclic(k), j, plans);
                const auto r = qc_ldpc(p);
                ++plans;
                CHECK(r.exact_rate + 1e-12 >= 1.0 - static_cast<double>(j) / static_cast<double>(k));
                CHECK(r.code.k == k * m - rank(r.check));
            }
    CHECK(plans == 15);

    plan.rows = {0, 1, 2, 3, 4, 5};
    CHECK_THROWS_AS(qc_ldpc(plan), PreconditionError);
    CHECK(random_ldpc_plan(GroupSpec::cyclic(7), GroupSpec::cyclic(4), 2, 9).f ==
          random_ldpc_plan(GroupSpec::cyclic(7), GroupSpec::cyclic(4), 2, 9).f);
}

TEST_CASE("unit-derived LDPC example") {
    const auto ex = ldpc_unit_example(100);
    CHECK((ex.v * ex.u).is_one());
    CHECK(weight(ex.v) == 5);
    CHECK(is_consistent(ex.code));
    for (std::size_t i = 0; i < ex.code.check.rows(); ++i) CHECK(ex.code.check.row_weight(i) <= 5);
    CHECK(ex.code.k == 50);
    CHECK_THROWS_AS(ldpc_unit_example(99), PreconditionError);
}
