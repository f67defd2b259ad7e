#include <doctest.h>

#include <random>

#include "grcodes/error.hpp"
#include "grcodes/groupring.hpp"
#include "grcodes/poly.hpp"
#include "oracles.hpp"

using namespace grcodes;

TEST_CASE("addition") {
    const auto c2 = make_group(GroupSpec::cyclic(2));
    const auto z = Ring::integers();
    CHECK(parse_element("1+g", c2, z) + parse_element("2+3*g", c2, z) == parse_element("3+4*g", c2, z));
    const auto c7 = make_group(GroupSpec::cyclic(7));
    const Element u = parse_element("1 + g^2 + g^5", c7, Ring::gf2());
    CHECK((u + u).is_zero());
    CHECK(u + Element::zero(c7, Ring::gf2()) == u);
    CHECK_THROWS_AS(u + parse_element("1", c2, Ring::gf2()), PreconditionError);
    CHECK_THROWS_AS(u + parse_element("1", c7, Ring::prime_field(3)), PreconditionError);
}

TEST_CASE("multiplication") {
    const auto c5 = make_group(GroupSpec::cyclic(5));
    const Element all = parse_element("1 + g + g^2 + g^3 + g^4", c5, Ring::gf2());
    CHECK((parse_element("1 + g", c5, Ring::gf2()) * all).is_zero());
    const Element u = parse_element("1 + g^3", c5, Ring::gf2());
    CHECK(u * Element::one(c5, Ring::gf2()) == u);

    const auto g = make_group(GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}));
    const Element s = parse_element("1 + h*a + h*a^2 + h*a^3", g, Ring::gf2());
    CHECK((s * s).is_zero());
}

TEST_CASE("transpose and symmetry") {
    const auto c7 = make_group(GroupSpec::cyclic(7));
    CHECK(transpose(parse_element("g", c7, Ring::gf2())) == parse_element("g^6", c7, Ring::gf2()));
    const auto c14 = make_group(GroupSpec::cyclic(14));
    const Element u = parse_element("1+g^2+g^5+g^9+g^12", c14, Ring::gf2());
    CHECK(transpose(u) == u);
    CHECK(is_symmetric(u));
    CHECK_FALSE(is_symmetric(parse_element("1 + g", c7, Ring::gf2())));
}

TEST_CASE("weight") {
    const auto c7 = make_group(GroupSpec::cyclic(7));
    CHECK(weight(Element::zero(c7, Ring::gf2())) == 0);
    CHECK(weight(parse_element("1 + g^2 + g^5", c7, Ring::gf2())) == 3);
    CHECK(weight(parse_element("2*g", c7, Ring::integers())) == 1);
}

TEST_CASE("element text") {
    const auto c7 = make_group(GroupSpec::cyclic(7));
    CHECK(parse_element("1 + g^2 + g^5", c7, Ring::gf2()).residues() ==
          std::vector<std::uint32_t>{1, 0, 1, 0, 0, 1, 0});
    const auto d6 = make_group(GroupSpec::dihedral(3));
    const Element e = parse_element("1 + a*b + a*b^2", d6, Ring::gf2());
    CHECK(e.residues() == std::vector<std::uint32_t>{1, 0, 0, 0, 1, 1});
    CHECK(parse_element("1 + ab + ab^2", d6, Ring::gf2()) == e);
    const auto c3 = make_group(GroupSpec::cyclic(3));
    const Element z = parse_element("2*g + 3*g^2", c3, Ring::integers());
    CHECK(z.coeff(0) == 0);
    CHECK(z.coeff(1) == 2);
    CHECK(z.coeff(2) == 3);
    CHECK(parse_element("g^8", c7, Ring::gf2()) == parse_element("g", c7, Ring::gf2()));
    CHECK(parse_element("g^-1", c7, Ring::gf2()) == parse_element("g^6", c7, Ring::gf2()));
    CHECK(parse_element("- g + 2", c3, Ring::integers()).coeff(1) == -1);
    CHECK(parse_element("g + g", c7, Ring::gf2()).is_zero());
    CHECK(print_element(Element::zero(c7, Ring::gf2())) == "0");
    CHECK(print_element(parse_element("3 - 2*g^2", c3, Ring::integers())) == "3 - 2*g^2");

    CHECK_THROWS_AS(parse_element("1 + q", c7, Ring::gf2()), ParseError);
    CHECK_THROWS_AS(parse_element("1 +", c7, Ring::gf2()), ParseError);
    CHECK_THROWS_AS(parse_element("g^", c7, Ring::gf2()), ParseError);
    CHECK_THROWS_AS(parse_element("", c7, Ring::gf2()), ParseError);
    try {
        parse_element("1 + g^2 + x", c7, Ring::gf2());
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 10);
    }
}

TEST_CASE("print and parse round trip") {
    std::mt19937_64 rng(7);
    const std::vector<GroupSpec> specs = {GroupSpec::cyclic(9), GroupSpec::dihedral(4), GroupSpec::elementary_abelian_2(3),
                                          GroupSpec::product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}),
                                          GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)}),
                                          GroupSpec::product({GroupSpec::cyclic(3), GroupSpec::cyclic(3)})};
    for (const auto& spec : specs) {
        const auto g = make_group(spec);
        for (const Ring ring : {Ring::gf2(), Ring::prime_field(5)}) {
            for (int t = 0; t < 20; ++t) {
                const Element u = oracle::random_element(g, ring, rng);
                CAPTURE(print_element(u));
                CHECK(parse_element(print_element(u), g, ring) == u);
            }
        }
        std::vector<long long> c(g->order());
        for (auto& x : c) x = static_cast<long long>(rng() % 11) - 5;
        const Element z = Element::from_coefficients(g, Ring::integers(), c);
        CHECK(parse_element(print_element(z), g, Ring::integers()) == z);
    }
}

TEST_CASE("ring axioms and transpose rules") {
    std::mt19937_64 rng(11);
    const std::vector<GroupSpec> specs = {GroupSpec::cyclic(6), GroupSpec::dihedral(4), GroupSpec::elementary_abelian_2(2),
                                          GroupSpec::product({GroupSpec::dihedral(3), GroupSpec::cyclic(2)})};
    for (const auto& spec : specs) {
        const auto g = make_group(spec);
        for (const Ring ring : {Ring::gf2(), Ring::prime_field(3)}) {
            for (int t = 0; t < 25; ++t) {
                const Element u = oracle::random_element(g, ring, rng);
                const Element v = oracle::random_element(g, ring, rng);
                const Element w = oracle::random_element(g, ring, rng);
                CHECK(u * v == oracle::convolution(u, v));
                CHECK((u * v) * w == u * (v * w));
                CHECK(u * (v + w) == u * v + u * w);
                CHECK((u + v) * w == u * w + v * w);
                CHECK(transpose(transpose(u)) == u);
                CHECK(transpose(u * v) == transpose(v) * transpose(u));
            }
        }
    }
}

TEST_CASE("cyclic multiplication is polynomial multiplication mod x^n - 1") {
    std::mt19937_64 rng(3);
    for (std::size_t n : {1, 2, 5, 8, 13}) {
        const auto g = make_group(GroupSpec::cyclic(n));
        for (const Ring ring : {Ring::gf2(), Ring::prime_field(7)}) {
            for (int t = 0; t < 10; ++t) {
                const Element u = oracle::random_element(g, ring, rng);
                const Element v = oracle::random_element(g, ring, rng);
                CHECK((u * v).residues() == oracle::cyclic_product(u.residues(), v.residues(), ring.modulus()));
                CHECK(from_poly(to_poly(u) * to_poly(v), g, ring) == u * v);
            }
        }
    }
}

TEST_CASE("integer coefficients") {
    const auto d6 = make_group(GroupSpec::dihedral(3));
    const Element u = parse_element("2 - 3*a*b + b^2", d6, Ring::integers());
    const Element v = parse_element("-1 + 5*a", d6, Ring::integers());
    CHECK(to_vector(u * v)[0] == -2);
    CHECK(transpose(transpose(u)) == u);
    CHECK(scale(u, 2) == u + u);
    CHECK(negate(u) + u == Element::zero(d6, Ring::integers()));
}
