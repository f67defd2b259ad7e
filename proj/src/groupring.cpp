#include "grcodes/groupring.hpp"

#include <algorithm>
#include <cctype>

#include "grcodes/error.hpp"

namespace grcodes {

Element::Element(GroupPtr group, Ring ring) : group_(std::move(group)), ring_(ring) {
    if (!group_) throw PreconditionError("element requires a group");
    if (ring_.is_field()) {
        fp_.assign(group_->order(), 0);
    } else {
        z_.assign(group_->order(), Integer(0));
    }
}

Element Element::one(GroupPtr group, Ring ring) { return monomial(std::move(group), ring, Group::identity(), 1); }

Element Element::monomial(GroupPtr group, Ring ring, std::size_t g, long long c) {
    Element e(std::move(group), ring);
    if (g >= e.size()) throw PreconditionError("group element index out of range");
    e.set_coeff(g, Integer(c));
    return e;
}

Element Element::from_coefficients(GroupPtr group, Ring ring, const std::vector<long long>& coeffs) {
    Element e(std::move(group), ring);
    if (coeffs.size() != e.size()) throw PreconditionError("coefficient vector length does not match group order");
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.set_coeff(i, Integer(coeffs[i]));
    return e;
}

Element Element::from_integers(GroupPtr group, Ring ring, const std::vector<Integer>& coeffs) {
    Element e(std::move(group), ring);
    if (coeffs.size() != e.size()) throw PreconditionError("coefficient vector length does not match group order");
    for (std::size_t i = 0; i < coeffs.size(); ++i) e.set_coeff(i, coeffs[i]);
    return e;
}

Element Element::from_residues(GroupPtr group, Ring ring, std::vector<std::uint32_t> residues) {
    if (!ring.is_field()) throw PreconditionError("residue vectors require a prime field");
    Element e(std::move(group), ring);
    if (residues.size() != e.size()) throw PreconditionError("coefficient vector length does not match group order");
    for (auto r : residues) {
        if (r >= ring.modulus()) throw PreconditionError("residue not reduced");
    }
    e.fp_ = std::move(residues);
    return e;
}

Integer Element::coeff(std::size_t g) const {
    if (g >= size()) throw PreconditionError("group element index out of range");
    return ring_.is_field() ? Integer(fp_[g]) : z_[g];
}

void Element::set_coeff(std::size_t g, const Integer& value) {
    if (g >= size()) throw PreconditionError("group element index out of range");
    if (ring_.is_field()) {
        fp_[g] = PrimeField{ring_.modulus()}.reduce(value);
    } else {
        z_[g] = value;
    }
}

bool Element::is_zero() const {
    if (ring_.is_field()) return std::all_of(fp_.begin(), fp_.end(), [](auto c) { return c == 0; });
    return std::all_of(z_.begin(), z_.end(), [](const Integer& c) { return c == 0; });
}

bool Element::is_one() const { return *this == one(group_, ring_); }

bool Element::compatible(const Element& other) const {
    return ring_ == other.ring_ && (group_ == other.group_ || group_->spec() == other.group_->spec());
}

bool operator==(const Element& a, const Element& b) { return a.compatible(b) && a.fp_ == b.fp_ && a.z_ == b.z_; }

namespace {

void require_compatible(const Element& u, const Element& v) {
    if (!u.compatible(v)) throw PreconditionError("group ring elements belong to different group rings");
}

}  // namespace

Element add(const Element& u, const Element& v) {
    require_compatible(u, v);
    if (u.ring().is_field()) {
        const PrimeField f{u.ring().modulus()};
        std::vector<std::uint32_t> out(u.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(u.residues()[i], v.residues()[i]);
        return Element::from_residues(u.group_ptr(), u.ring(), std::move(out));
    }
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.integers()[i] + v.integers()[i];
    return Element::from_integers(u.group_ptr(), u.ring(), out);
}

Element negate(const Element& u) { return scale(u, Integer(-1)); }

Element sub(const Element& u, const Element& v) { return add(u, negate(v)); }

Element scale(const Element& u, const Integer& c) {
    if (u.ring().is_field()) {
        const PrimeField f{u.ring().modulus()};
        const std::uint32_t s = f.reduce(c);
        std::vector<std::uint32_t> out(u.size());
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.mul(u.residues()[i], s);
        return Element::from_residues(u.group_ptr(), u.ring(), std::move(out));
    }
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.integers()[i] * c;
    return Element::from_integers(u.group_ptr(), u.ring(), out);
}

Element mul(const Element& u, const Element& v) {
    require_compatible(u, v);
    const Group& g = u.group();
    const std::size_t n = u.size();
    if (u.ring().is_field()) {
        const std::uint32_t p = u.ring().modulus();
        std::vector<std::uint64_t> acc(n, 0);
        std::vector<std::size_t> support_v;
        for (std::size_t k = 0; k < n; ++k) {
            if (v.residues()[k]) support_v.push_back(k);
        }
        for (std::size_t h = 0; h < n; ++h) {
            const std::uint64_t a = u.residues()[h];
            if (!a) continue;
            for (std::size_t k : support_v) acc[g.mul(h, k)] += a * v.residues()[k];
        }
        std::vector<std::uint32_t> out(n);
        for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
        return Element::from_residues(u.group_ptr(), u.ring(), std::move(out));
    }
    std::vector<Integer> out(n, Integer(0));
    for (std::size_t h = 0; h < n; ++h) {
        if (u.integers()[h] == 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
            if (v.integers()[k] == 0) continue;
            out[g.mul(h, k)] += u.integers()[h] * v.integers()[k];
        }
    }
    return Element::from_integers(u.group_ptr(), u.ring(), out);
}

Element transpose(const Element& u) {
    Element out(u.group_ptr(), u.ring());
    for (std::size_t g = 0; g < u.size(); ++g) out.set_coeff(u.group().inv(g), u.coeff(g));
    return out;
}

bool is_symmetric(const Element& u) { return transpose(u) == u; }

std::size_t weight(const Element& u) {
    if (u.ring().is_field()) {
        return static_cast<std::size_t>(std::count_if(u.residues().begin(), u.residues().end(), [](auto c) { return c != 0; }));
    }
    return static_cast<std::size_t>(std::count_if(u.integers().begin(), u.integers().end(), [](const Integer& c) { return c != 0; }));
}

std::vector<Integer> to_vector(const Element& u) {
    std::vector<Integer> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = u.coeff(i);
    return out;
}

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text, GroupPtr group, Ring ring)
        : text_(text), group_(std::move(group)), ring_(ring), result_(group_, ring_) {}

    Element parse() {
        skip_ws();
        if (at_end()) fail("empty element");
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos_;
        }
        term(sign);
        for (;;) {
            skip_ws();
            if (at_end()) break;
            const char c = peek();
            if (c != '+' && c != '-') fail(std::string("expected '+' or '-', found '") + c + "'");
            ++pos_;
            term(c == '-' ? -1 : 1);
        }
        return result_;
    }

private:
    void term(int sign) {
        skip_ws();
        Integer coeff(1);
        std::size_t g = Group::identity();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = number();
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                g = atom();
            }
        } else {
            g = atom();
        }
        result_.set_coeff(g, result_.coeff(g) + coeff * sign);
    }

    std::size_t atom() {
        std::size_t g = factor();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            g = group_->mul(g, factor());
        }
        return g;
    }

    std::size_t factor() {
        skip_ws();
        const std::size_t start = pos_;
        if (peek() == '1' && !std::isdigit(static_cast<unsigned char>(peek(1)))) {
            ++pos_;
            return Group::identity();
        }
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a generator symbol or 1");
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') name += text_[pos_++];
        long long exponent = 1;
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
            const Integer e = number();
            if (e > Integer(1'000'000'000)) fail("exponent too large");
            exponent = e.convert_to<long long>();
            if (negative) exponent = -exponent;
        }
        if (auto sym = group_->find_symbol(name)) return group_->pow(sym->element, exponent);

        // Juxtaposed single-letter generators, e.g. "ab^2".
        std::vector<GeneratorSymbol> letters;
        for (char c : name) {
            auto sym = group_->find_symbol(std::string(1, c));
            if (!sym) {
                pos_ = start;
                fail("unknown generator symbol '" + name + "'");
            }
            letters.push_back(*sym);
        }
        std::size_t g = Group::identity();
        for (std::size_t i = 0; i < letters.size(); ++i) {
            const long long e = i + 1 == letters.size() ? exponent : 1;
            g = group_->mul(g, group_->pow(letters[i].element, e));
        }
        return g;
    }

    Integer number() {
        Integer v(0);
        bool any = false;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (text_[pos_++] - '0');
            any = true;
        }
        if (!any) fail("expected a number");
        return v;
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError("element: " + msg, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
    GroupPtr group_;
    Ring ring_;
    Element result_;
};

}  // namespace

Element parse_element(std::string_view text, GroupPtr group, Ring ring) {
    return ElementParser(text, std::move(group), ring).parse();
}

std::string print_element(const Element& u) {
    std::string out;
    for (std::size_t g = 0; g < u.size(); ++g) {
        Integer c = u.coeff(g);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (negative) c = -c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string w = u.group().word(g);
        if (w == "1") {
            out += c.str();
        } else {
            if (c != 1) out += c.str() + "*";
            out += w;
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace grcodes
