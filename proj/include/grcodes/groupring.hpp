#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "grcodes/groups.hpp"
#include "grcodes/ring.hpp"

namespace grcodes {

/// An element sum_g alpha_g g of the group ring RG, stored as a coefficient
/// vector indexed by the group's canonical listing.
///
/// Prime-field coefficients are kept as reduced residues; integer
/// coefficients are arbitrary precision.
class Element {
public:
    /// The zero element.
    Element(GroupPtr group, Ring ring);

    static Element zero(GroupPtr group, Ring ring) { return Element(std::move(group), ring); }
    static Element one(GroupPtr group, Ring ring);
    /// c * g for a single group element g.
    static Element monomial(GroupPtr group, Ring ring, std::size_t g, long long c = 1);
    /// Builds from a coefficient list of length |G|; values are reduced for prime fields.
    static Element from_coefficients(GroupPtr group, Ring ring, const std::vector<long long>& coeffs);
    static Element from_integers(GroupPtr group, Ring ring, const std::vector<Integer>& coeffs);
    /// Prime field only; values must already be reduced.
    static Element from_residues(GroupPtr group, Ring ring, std::vector<std::uint32_t> residues);

    const GroupPtr& group_ptr() const noexcept { return group_; }
    const Group& group() const noexcept { return *group_; }
    const Ring& ring() const noexcept { return ring_; }
    std::size_t size() const noexcept { return group_->order(); }

    /// Coefficient of the listing element g.
    Integer coeff(std::size_t g) const;
    /// Prime-field residues (empty for the integers).
    const std::vector<std::uint32_t>& residues() const noexcept { return fp_; }
    /// Integer coefficients (empty for prime fields).
    const std::vector<Integer>& integers() const noexcept { return z_; }

    void set_coeff(std::size_t g, const Integer& value);

    bool is_zero() const;
    bool is_one() const;
    /// Same group (by spec) and ring.
    bool compatible(const Element& other) const;

    friend bool operator==(const Element& a, const Element& b);

private:
    GroupPtr group_;
    Ring ring_;
    std::vector<std::uint32_t> fp_;
    std::vector<Integer> z_;
};

Element add(const Element& u, const Element& v);
Element sub(const Element& u, const Element& v);
Element negate(const Element& u);
Element scale(const Element& u, const Integer& c);
/// Group-ring convolution: (uv)_g = sum_h u_h v_{h^-1 g}.
Element mul(const Element& u, const Element& v);
/// u^T = sum_g u_g g^-1.
Element transpose(const Element& u);
bool is_symmetric(const Element& u);
/// Number of nonzero coefficients.
std::size_t weight(const Element& u);

inline Element operator+(const Element& u, const Element& v) { return add(u, v); }
inline Element operator-(const Element& u, const Element& v) { return sub(u, v); }
inline Element operator-(const Element& u) { return negate(u); }
inline Element operator*(const Element& u, const Element& v) { return mul(u, v); }

/// Parses element text such as "1 + g^2 + g^5", "1 + a*b + a*b^2" or
/// "2*g - 3*g^2". Terms are `[coeff *] word`; a word is a `*`-product of
/// generator powers or `1`. Juxtaposed single-letter generators ("ab^2")
/// are accepted as a shorthand.
Element parse_element(std::string_view text, GroupPtr group, Ring ring);
/// Canonical text form; parse_element(print_element(u)) == u.
std::string print_element(const Element& u);

/// The vector of coefficients in listing order (zeta inverse).
std::vector<Integer> to_vector(const Element& u);

}  // namespace grcodes
