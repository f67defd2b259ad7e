#include <doctest.h>

#include <random>

#include "grcodes/constructions.hpp"
#include "grcodes/error.hpp"
#include "grcodes/poly.hpp"
#include "grcodes/rgmatrix.hpp"
#include "oracles.hpp"

using namespace grcodes;

namespace {

Poly random_poly(std::size_t max_deg, std::uint32_t p, std::mt19937_64& rng) {
    std::vector<std::uint32_t> c(1 + rng() % (max_deg + 1));
    for (auto& x : c) x = static_cast<std::uint32_t>(rng() % p);
    return Poly(c, p);
}

}  // namespace

TEST_CASE("polynomial basics") {
    const Poly x1({1, 1}, 2);
    CHECK(x1.degree() == 1);
    CHECK(Poly({0, 0}, 2).is_zero());
    CHECK(Poly({}, 2).degree() == -1);
    CHECK(x1 * x1 == Poly({1, 0, 1}, 2));
    CHECK(Poly::cyclotomic_modulus(4, 3) == Poly({2, 0, 0, 0, 1}, 3));
    CHECK(Poly({1, 0, 1}, 2).to_string() == "1 + x^2");
    const auto qr = divmod(Poly::cyclotomic_modulus(4, 2), x1);
    CHECK(qr.quotient == Poly({1, 1, 1, 1}, 2));
    CHECK(qr.remainder.is_zero());
    CHECK_THROWS(divmod(x1, Poly({}, 2)));
}

TEST_CASE("gcd and Bezout against division") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 150; ++t) {
        const std::uint32_t p = (t % 3 == 0) ? 2 : (t % 3 == 1 ? 3 : 7);
        const Poly a = random_poly(10, p, rng), b = random_poly(10, p, rng);
        if (a.is_zero() && b.is_zero()) continue;
        const auto e = extended_gcd(a, b);
        CHECK(e.g == gcd(a, b));
        CHECK(e.g.leading() == 1);
        CHECK(e.s * a + e.t * b == e.g);
        if (!a.is_zero()) CHECK(divmod(a, e.g).remainder.is_zero());
        if (!b.is_zero()) CHECK(divmod(b, e.g).remainder.is_zero());
        if (!b.is_zero()) {
            const auto qr = divmod(a, b);
            CHECK(qr.quotient * b + qr.remainder == a);
            CHECK(qr.remainder.degree() < b.degree());
        }
    }
}

TEST_CASE("element and polynomial views agree") {
    const auto c7 = make_group(GroupSpec::cyclic(7));
    const Element u = parse_element("1 + g + g^3", c7, Ring::gf2());
    CHECK(to_poly(u) == Poly({1, 1, 0, 1}, 2));
    CHECK(from_poly(Poly::monomial(9, 1, 2), c7, Ring::gf2()) == parse_element("g^2", c7, Ring::gf2()));
    CHECK_THROWS_AS(to_poly(parse_element("1", make_group(GroupSpec::dihedral(3)), Ring::gf2())), PreconditionError);
}

TEST_CASE("euclid inverse") {
    const auto c14 = make_group(GroupSpec::cyclic(14));
    const Element u14 = parse_element("1+g^2+g^5+g^9+g^12", c14, Ring::gf2());
    CHECK(euclid_inverse(u14) == u14);
    CHECK(euclid_inverse(Element::one(c14, Ring::gf2())).is_one());
    const auto c7 = make_group(GroupSpec::cyclic(7));
    try {
        euclid_inverse(parse_element("1 + g + g^3", c7, Ring::gf2()));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(e.certificate().find("1 + g + g^3") != std::string::npos);
    }

    std::mt19937_64 rng(2);
    std::size_t units = 0;
    for (int t = 0; t < 300; ++t) {
        const std::size_t n = 2 + rng() % 20;
        const Ring ring = t % 2 ? Ring::gf2() : Ring::prime_field(5);
        const auto g = make_group(GroupSpec::cyclic(n));
        const Element u = oracle::random_element(g, ring, rng);
        const bool unit = classify(u).kind == Classification::Kind::unit;
        if (unit) {
            ++units;
            CHECK((u * euclid_inverse(u)).is_one());
        } else {
            CHECK_THROWS_AS(euclid_inverse(u), PreconditionError);
        }
    }
    CHECK(units > 30);
}
