#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "grcodes/groupring.hpp"
#include "grcodes/ring.hpp"

namespace grcodes {

/// Dense univariate polynomial over GF(p); coeffs[i] multiplies x^i.
/// Always trimmed: the leading coefficient is nonzero unless the polynomial
/// is zero (empty coefficient list).
class Poly {
public:
    Poly() = default;
    Poly(std::vector<std::uint32_t> coeffs, std::uint32_t p);
    static Poly monomial(std::size_t degree, std::uint32_t c, std::uint32_t p);
    /// x^n - 1.
    static Poly cyclotomic_modulus(std::size_t n, std::uint32_t p);

    std::uint32_t modulus() const noexcept { return p_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
    std::uint32_t operator[](std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    std::uint32_t leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }

    Poly monic() const;
    std::string to_string(char var = 'x') const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<std::uint32_t> c_;
    std::uint32_t p_ = 2;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};
PolyDivision divmod(const Poly& a, const Poly& b);

/// Monic greatest common divisor.
Poly gcd(const Poly& a, const Poly& b);

/// s a + t b = g with g the monic gcd.
struct ExtendedGcd {
    Poly g;
    Poly s;
    Poly t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

/// The polynomial sum u_i x^i of an element of GF(p)C_n (RC_n = R[x]/(x^n - 1)).
Poly to_poly(const Element& u);
/// Reduces f modulo x^n - 1 into GF(p)C_n.
Element from_poly(const Poly& f, GroupPtr group, Ring ring);

}  // namespace grcodes
