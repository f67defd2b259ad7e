#include <doctest.h>

#include <random>

#include "grcodes/error.hpp"
#include "grcodes/groups.hpp"

using namespace grcodes;

namespace {

std::size_t index_of(const Group& g, const std::string& word) {
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.word(i) == word) return i;
    FAIL("no element " << word);
    return 0;
}

std::vector<GroupSpec> small_groups() {
    return {GroupSpec::cyclic(1),
            GroupSpec::cyclic(7),
            GroupSpec::cyclic(12),
            GroupSpec::dihedral(1),
            GroupSpec::dihedral(3),
            GroupSpec::dihedral(8),
            GroupSpec::elementary_abelian_2(3),
            GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}),
            GroupSpec::product({GroupSpec::dihedral(4), GroupSpec::cyclic(3)}),
            GroupSpec::product({GroupSpec::cyclic(5), GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::cyclic(2)})})};
}

}  // namespace

TEST_CASE("cyclic listing and law") {
    const auto g = make_group(GroupSpec::cyclic(4));
    CHECK(g->order() == 4);
    CHECK(g->word(0) == "1");
    CHECK(g->word(1) == "g");
    CHECK(g->word(3) == "g^3");
    CHECK(g->mul(1, 2) == 3);
    CHECK(g->mul(3, 2) == 1);

    const auto c7 = make_group(GroupSpec::cyclic(7));
    CHECK(c7->inv(2) == 5);
    CHECK(c7->inv(0) == 0);
    CHECK(c7->pow(1, -2) == 5);
}

TEST_CASE("dihedral listing follows ab = b^-1 a") {
    const auto g = make_group(GroupSpec::dihedral(3));
    REQUIRE(g->order() == 6);
    const std::size_t a = index_of(*g, "a"), b = index_of(*g, "b");
    CHECK(a == 3);
    CHECK(b == 1);
    CHECK(g->mul(a, b) == index_of(*g, "a*b"));
    CHECK(g->mul(b, a) == index_of(*g, "a*b^2"));
    CHECK(g->mul(b, index_of(*g, "b^2")) == 0);
    for (std::size_t k = 0; k < 3; ++k) CHECK(g->inv(3 + k) == 3 + k);
    CHECK_FALSE(g->is_abelian());
}

TEST_CASE("product listing: first factor slowest") {
    const auto g = make_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}));
    CHECK(g->order() == 8);
    CHECK(g->spec().to_string() == "C2xC4");
    const std::size_t ha = index_of(*g, "h*a"), ha3 = index_of(*g, "h*a^3");
    CHECK(ha == 5);
    CHECK(ha3 == 7);
    CHECK(g->mul(ha, ha3) == 0);
    CHECK(g->find_symbol("h")->element == 4);
    CHECK(g->find_symbol("a")->element == 1);
}

TEST_CASE("nested products list like the flattened product") {
    const auto nested = make_group(parse_group_spec("C5x(C3xC2)"));
    const auto flat = make_group(GroupSpec::product({GroupSpec::cyclic(5), GroupSpec::cyclic(3), GroupSpec::cyclic(2)}));
    REQUIRE(nested->order() == 30);
    for (std::size_t x = 0; x < 30; ++x)
        for (std::size_t y = 0; y < 30; ++y) CHECK(nested->mul(x, y) == flat->mul(x, y));
}

TEST_CASE("elementary abelian 2-group") {
    const auto g = make_group(GroupSpec::elementary_abelian_2(3));
    CHECK(g->order() == 8);
    for (std::size_t x = 0; x < 8; ++x) {
        CHECK(g->inv(x) == x);
        for (std::size_t y = 0; y < 8; ++y) CHECK(g->mul(x, y) == (x ^ y));
    }
}

TEST_CASE("group spec grammar") {
    CHECK(parse_group_spec("C4xC2") == GroupSpec::product({GroupSpec::cyclic(4), GroupSpec::cyclic(2)}));
    CHECK(parse_group_spec(" d6 ") == GroupSpec::dihedral(3));
    CHECK(parse_group_spec("e2^3") == GroupSpec::elementary_abelian_2(3));
    CHECK(parse_group_spec("C5 x (C3 x C2)").to_string() == "C5x(C3xC2)");
    CHECK(parse_group_spec("C7").order() == 7);
    CHECK_THROWS_AS(parse_group_spec("D7"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("C0"), Error);
    CHECK_THROWS_AS(parse_group_spec("Q8"), ParseError);
    CHECK_THROWS_AS(parse_group_spec("C4x"), ParseError);
    CHECK_THROWS_AS(GroupSpec::product({}), Error);
    for (const auto& s : small_groups()) CHECK(parse_group_spec(s.to_string()).order() == s.order());
}

TEST_CASE("index range is checked") {
    const auto g = make_group(GroupSpec::cyclic(5));
    CHECK_THROWS_AS(g->mul(5, 0), PreconditionError);
    CHECK_THROWS_AS(g->inv(9), PreconditionError);
}

TEST_CASE("group axioms on small groups") {
    std::mt19937_64 rng(1);
    for (const auto& spec : small_groups()) {
        CAPTURE(spec.to_string());
        const auto g = make_group(spec);
        const std::size_t n = g->order();
        for (std::size_t x = 0; x < n; ++x) {
            CHECK(g->mul(0, x) == x);
            CHECK(g->mul(x, 0) == x);
            CHECK(g->mul(x, g->inv(x)) == 0);
            CHECK(g->inv(g->inv(x)) == x);
            std::vector<bool> row(n), col(n);
            for (std::size_t y = 0; y < n; ++y) {
                row[g->mul(x, y)] = true;
                col[g->mul(y, x)] = true;
            }
            CHECK(std::count(row.begin(), row.end(), true) == static_cast<long>(n));
            CHECK(std::count(col.begin(), col.end(), true) == static_cast<long>(n));
        }
        for (int t = 0; t < 200; ++t) {
            const std::size_t x = rng() % n, y = rng() % n, z = rng() % n;
            CHECK(g->mul(g->mul(x, y), z) == g->mul(x, g->mul(y, z)));
        }
    }
}

TEST_CASE("large groups are computed without a table") {
    const auto g = make_group(GroupSpec::cyclic(5000));
    CHECK_FALSE(g->tabulated());
    CHECK(g->mul(4999, 2) == 1);
    const auto d = make_group(GroupSpec::dihedral(3000));
    CHECK_FALSE(d->tabulated());
    CHECK(d->mul(3000, 3000) == 0);
    CHECK_THROWS(make_group(GroupSpec::cyclic(70000)));
}
