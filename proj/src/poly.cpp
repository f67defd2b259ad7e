#include "grcodes/poly.hpp"

#include <algorithm>

#include "grcodes/error.hpp"

namespace grcodes {

Poly::Poly(std::vector<std::uint32_t> coeffs, std::uint32_t p) : c_(std::move(coeffs)), p_(p) {
    for (auto& c : c_) c %= p_;
    trim();
}

Poly Poly::monomial(std::size_t degree, std::uint32_t c, std::uint32_t p) {
    std::vector<std::uint32_t> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(v), p);
}

Poly Poly::cyclotomic_modulus(std::size_t n, std::uint32_t p) {
    std::vector<std::uint32_t> v(n + 1, 0);
    v[n] = 1;
    v[0] = PrimeField{p}.neg(1);
    if (n == 0) v[0] = 0;  // x^0 - 1 = 0
    return Poly(std::move(v), p);
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    const PrimeField f{p_};
    const std::uint32_t s = f.inv(leading());
    std::vector<std::uint32_t> v(c_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.mul(c_[i], s);
    return Poly(std::move(v), p_);
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!out.empty()) out += " + ";
        if (c_[i] != 1 || i == 0) out += std::to_string(c_[i]);
        if (i > 0) {
            if (c_[i] != 1) out += '*';
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

void require_same_field(const Poly& a, const Poly& b) {
    if (a.modulus() != b.modulus()) throw PreconditionError("polynomials over different fields");
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const PrimeField f{a.modulus()};
    std::vector<std::uint32_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.add(a[i], b[i]);
    return Poly(std::move(v), a.modulus());
}

Poly operator-(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const PrimeField f{a.modulus()};
    std::vector<std::uint32_t> v(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f.sub(a[i], b[i]);
    return Poly(std::move(v), a.modulus());
}

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return Poly({}, a.modulus());
    const std::uint32_t p = a.modulus();
    std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        const std::uint64_t x = a.coeffs()[i];
        if (!x) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            acc[i + j] += x * b.coeffs()[j];
            if (acc[i + j] >= (std::uint64_t{1} << 62)) acc[i + j] %= p;
        }
    }
    std::vector<std::uint32_t> v(acc.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<std::uint32_t>(acc[i] % p);
    return Poly(std::move(v), p);
}

PolyDivision divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw PreconditionError("polynomial division by zero");
    const PrimeField f{a.modulus()};
    std::vector<std::uint32_t> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    if (a.degree() < b.degree()) return {Poly({}, a.modulus()), a};
    std::vector<std::uint32_t> q(r.size() - db, 0);
    const std::uint32_t lead_inv = f.inv(b.leading());
    for (std::size_t k = r.size(); k-- > db;) {
        const std::uint32_t c = f.mul(r[k], lead_inv);
        if (!c) continue;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) r[k - db + j] = f.sub(r[k - db + j], f.mul(c, b.coeffs()[j]));
    }
    return {Poly(std::move(q), a.modulus()), Poly(std::move(r), a.modulus())};
}

Poly gcd(const Poly& a, const Poly& b) { return extended_gcd(a, b).g; }

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const std::uint32_t p = a.modulus();
    const Poly zero({}, p), one({1}, p);
    Poly r0 = a, r1 = b, s0 = one, s1 = zero, t0 = zero, t1 = one;
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {zero, zero, zero};
    const PrimeField f{p};
    const Poly norm({f.inv(r0.leading())}, p);
    return {r0 * norm, s0 * norm, t0 * norm};
}

Poly to_poly(const Element& u) {
    if (!u.group().is_cyclic()) throw PreconditionError("polynomial form requires a cyclic group");
    if (!u.ring().is_field()) throw PreconditionError("polynomial form requires a prime field");
    return Poly(u.residues(), u.ring().modulus());
}

Element from_poly(const Poly& f, GroupPtr group, Ring ring) {
    if (!group->is_cyclic()) throw PreconditionError("polynomial form requires a cyclic group");
    if (!ring.is_field() || ring.modulus() != f.modulus()) throw PreconditionError("polynomial field mismatch");
    const std::size_t n = group->order();
    const PrimeField fld{ring.modulus()};
    std::vector<std::uint32_t> c(n, 0);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) c[i % n] = fld.add(c[i % n], f.coeffs()[i]);
    return Element::from_residues(std::move(group), ring, std::move(c));
}

}  // namespace grcodes
