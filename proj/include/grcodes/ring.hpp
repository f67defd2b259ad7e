#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace grcodes {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient ring: a prime field GF(p) with p < 2^16, or the integers.
class Ring {
public:
    enum class Kind { prime_field, integers };

    /// GF(p); throws PreconditionError unless p is a prime below 2^16.
    static Ring prime_field(std::uint32_t p);
    static Ring integers() { return Ring(Kind::integers, 0); }
    static Ring gf2() { return prime_field(2); }

    Kind kind() const noexcept { return kind_; }
    bool is_field() const noexcept { return kind_ == Kind::prime_field; }
    /// The characteristic p for a prime field; 0 for the integers.
    std::uint32_t modulus() const noexcept { return p_; }

    /// `gf2`, `gf<p>` or `z`.
    std::string to_string() const;

    friend bool operator==(const Ring&, const Ring&) = default;

private:
    Ring(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// Parses `gf2`, `gf<p>`, `gf(p)` or `z` (case-insensitive).
Ring parse_ring(std::string_view text);

bool is_prime(std::uint32_t p);

/// Arithmetic in GF(p) on reduced residues.
struct PrimeField {
    std::uint32_t p;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
        const std::uint32_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return a >= b ? a - b : a + p - b; }
    std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p - a; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
        return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
    }
    /// Multiplicative inverse of a nonzero residue (Fermat).
    std::uint32_t inv(std::uint32_t a) const noexcept {
        std::uint64_t result = 1, base = a, e = p - 2;
        while (e) {
            if (e & 1) result = result * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return static_cast<std::uint32_t>(result);
    }
    std::uint32_t reduce(long long v) const noexcept {
        long long r = v % static_cast<long long>(p);
        return static_cast<std::uint32_t>(r < 0 ? r + p : r);
    }
    std::uint32_t reduce(const Integer& v) const {
        Integer r = v % p;
        if (r < 0) r += p;
        return r.convert_to<std::uint32_t>();
    }
};

}  // namespace grcodes
