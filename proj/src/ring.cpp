#include "grcodes/ring.hpp"

#include <cctype>

#include "grcodes/error.hpp"

namespace grcodes {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

Ring Ring::prime_field(std::uint32_t p) {
    if (p >= (1u << 16)) throw PreconditionError("prime fields are limited to p < 65536", std::to_string(p));
    if (!is_prime(p)) throw PreconditionError("field characteristic is not prime", std::to_string(p));
    return Ring(Kind::prime_field, p);
}

std::string Ring::to_string() const {
    return kind_ == Kind::integers ? "z" : "gf" + std::to_string(p_);
}

Ring parse_ring(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (s == "z" || s == "zz" || s == "int" || s == "integers") return Ring::integers();
    if (s.rfind("gf", 0) == 0) {
        std::string digits = s.substr(2);
        if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')') digits = digits.substr(1, digits.size() - 2);
        if (digits.empty() || digits.size() > 6) throw ParseError("ring spec: expected gf<p>", 2);
        std::uint32_t p = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw ParseError("ring spec: expected digits", 2 + i);
            p = p * 10 + static_cast<std::uint32_t>(digits[i] - '0');
        }
        try {
            return Ring::prime_field(p);
        } catch (const PreconditionError& e) {
            throw ParseError(std::string("ring spec: ") + e.what());
        }
    }
    throw ParseError("ring spec: expected gf<p> or z", 0);
}

}  // namespace grcodes
