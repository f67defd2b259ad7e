#include "grcodes/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "grcodes/error.hpp"

namespace grcodes {

GroupSpec GroupSpec::cyclic(std::size_t n) {
    if (n == 0) throw PreconditionError("cyclic group order must be positive");
    return GroupSpec{Kind::cyclic, n, {}};
}

GroupSpec GroupSpec::dihedral(std::size_t half_order) {
    if (half_order == 0) throw PreconditionError("dihedral group requires n >= 1");
    return GroupSpec{Kind::dihedral, half_order, {}};
}

GroupSpec GroupSpec::elementary_abelian_2(std::size_t rank) {
    if (rank == 0) throw PreconditionError("elementary abelian 2-group requires rank >= 1");
    if (rank > 16) throw ResourceError("elementary abelian 2-group rank above 16 is not supported");
    return GroupSpec{Kind::elementary_abelian_2, rank, {}};
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors) {
    if (factors.empty()) throw PreconditionError("product of zero factors");
    if (factors.size() == 1) return std::move(factors.front());
    return GroupSpec{Kind::product, 0, std::move(factors)};
}

std::size_t GroupSpec::order() const {
    switch (kind) {
        case Kind::cyclic: return param;
        case Kind::dihedral: return 2 * param;
        case Kind::elementary_abelian_2: return std::size_t{1} << param;
        case Kind::product: {
            std::size_t n = 1;
            for (const auto& f : factors) {
                const std::size_t m = f.order();
                if (m != 0 && n > kMaxGroupOrder * 2 / m) return kMaxGroupOrder * 2;  // saturate
                n *= m;
            }
            return n;
        }
    }
    return 0;
}

std::string GroupSpec::to_string() const {
    switch (kind) {
        case Kind::cyclic: return "C" + std::to_string(param);
        case Kind::dihedral: return "D" + std::to_string(2 * param);
        case Kind::elementary_abelian_2: return "E2^" + std::to_string(param);
        case Kind::product: {
            std::string out;
            for (std::size_t i = 0; i < factors.size(); ++i) {
                if (i) out += 'x';
                const bool wrap = factors[i].kind == Kind::product;
                if (wrap) out += '(';
                out += factors[i].to_string();
                if (wrap) out += ')';
            }
            return out;
        }
    }
    return {};
}

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            const unsigned char c = static_cast<unsigned char>(text[i]);
            if (std::isspace(c)) continue;
            chars_.push_back(static_cast<char>(std::tolower(c)));
            positions_.push_back(i);
        }
    }

    GroupSpec parse() {
        if (chars_.empty()) throw ParseError("empty group spec", 0);
        GroupSpec g = expr();
        if (pos_ != chars_.size()) fail("unexpected character '" + std::string(1, chars_[pos_]) + "'");
        return g;
    }

private:
    GroupSpec expr() {
        std::vector<GroupSpec> parts;
        parts.push_back(term());
        while (peek() == 'x') {
            ++pos_;
            parts.push_back(term());
        }
        return GroupSpec::product(std::move(parts));
    }

    GroupSpec term() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            GroupSpec inner = expr();
            expect(')');
            return inner;
        }
        if (c == 'c') {
            ++pos_;
            const std::size_t n = number();
            if (n == 0) fail("cyclic group order must be positive");
            return GroupSpec::cyclic(n);
        }
        if (c == 'd') {
            ++pos_;
            const std::size_t n = number();
            if (n == 0 || n % 2 != 0) fail("dihedral order must be a positive even number");
            return GroupSpec::dihedral(n / 2);
        }
        if (c == 'e') {
            ++pos_;
            expect('2');
            expect('^');
            const std::size_t m = number();
            if (m == 0) fail("elementary abelian rank must be positive");
            return GroupSpec::elementary_abelian_2(m);
        }
        fail(c == '\0' ? "unexpected end of group spec" : "expected C, D, E2^ or '('");
    }

    std::size_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        std::size_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::size_t>(chars_[pos_] - '0');
            if (v > kMaxGroupOrder * 2) fail("group order too large");
            ++pos_;
        }
        return v;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& msg) const {
        const std::size_t at = pos_ < positions_.size() ? positions_[pos_]
                               : positions_.empty() ? 0
                                                    : positions_.back() + 1;
        throw ParseError("group spec: " + msg, at);
    }

    std::vector<char> chars_;
    std::vector<std::size_t> positions_;
    std::size_t pos_ = 0;
};

void flatten(const GroupSpec& spec, std::vector<GroupSpec>& out) {
    if (spec.kind == GroupSpec::Kind::product) {
        for (const auto& f : spec.factors) flatten(f, out);
    } else {
        out.push_back(spec);
    }
}

std::string power_word(const std::string& name, std::size_t e) {
    if (e == 0) return {};
    return e == 1 ? name : name + "^" + std::to_string(e);
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

Group::Group(GroupSpec spec) : spec_(std::move(spec)), order_(spec_.order()) {
    if (order_ == 0) throw PreconditionError("group order must be positive");
    if (order_ > kMaxGroupOrder) {
        throw ResourceError("group order " + std::to_string(order_) + " exceeds the supported maximum " +
                            std::to_string(kMaxGroupOrder));
    }
    std::vector<GroupSpec> flat;
    flatten(spec_, flat);
    for (const auto& f : flat) leaves_.push_back(Leaf{f.kind, f.param, f.order()});

    inverse_.resize(order_);
    for (std::size_t g = 0; g < order_; ++g) inverse_[g] = static_cast<std::uint16_t>(inv_direct(g));
    if (order_ <= kMaxTabulatedOrder) {
        table_.resize(order_ * order_);
        for (std::size_t g = 0; g < order_; ++g) {
            for (std::size_t h = 0; h < order_; ++h) {
                table_[g * order_ + h] = static_cast<std::uint16_t>(mul_direct(g, h));
            }
        }
    }
    build_symbols();
}

bool Group::is_abelian() const noexcept {
    return std::none_of(leaves_.begin(), leaves_.end(),
                        [](const Leaf& l) { return l.kind == GroupSpec::Kind::dihedral && l.param > 2; });
}

void Group::check_index(std::size_t g) const {
    if (g >= order_) {
        throw PreconditionError("group element index " + std::to_string(g) + " out of range for order " +
                                std::to_string(order_));
    }
}

void Group::decompose(std::size_t g, std::vector<std::size_t>& parts) const {
    parts.resize(leaves_.size());
    for (std::size_t i = leaves_.size(); i-- > 0;) {
        parts[i] = g % leaves_[i].order;
        g /= leaves_[i].order;
    }
}

std::size_t Group::compose(const std::vector<std::size_t>& parts) const {
    std::size_t g = 0;
    for (std::size_t i = 0; i < leaves_.size(); ++i) g = g * leaves_[i].order + parts[i];
    return g;
}

std::size_t Group::mul_direct(std::size_t g, std::size_t h) const {
    std::vector<std::size_t> x, y;
    decompose(g, x);
    decompose(h, y);
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        const Leaf& leaf = leaves_[i];
        switch (leaf.kind) {
            case GroupSpec::Kind::cyclic: x[i] = (x[i] + y[i]) % leaf.param; break;
            case GroupSpec::Kind::elementary_abelian_2: x[i] ^= y[i]; break;
            case GroupSpec::Kind::dihedral: {
                // a^s b^k * a^t b^l = a^(s+t) b^((t ? -k : k) + l)
                const std::size_t n = leaf.param;
                const std::size_t s = x[i] / n, k = x[i] % n;
                const std::size_t t = y[i] / n, l = y[i] % n;
                const std::size_t k2 = t ? (n - k) % n : k;
                x[i] = ((s ^ t) * n) + (k2 + l) % n;
                break;
            }
            case GroupSpec::Kind::product: break;
        }
    }
    return compose(x);
}

std::size_t Group::inv_direct(std::size_t g) const {
    std::vector<std::size_t> x;
    decompose(g, x);
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        const Leaf& leaf = leaves_[i];
        switch (leaf.kind) {
            case GroupSpec::Kind::cyclic: x[i] = (leaf.param - x[i]) % leaf.param; break;
            case GroupSpec::Kind::dihedral:
                if (x[i] < leaf.param) x[i] = (leaf.param - x[i]) % leaf.param;  // reflections are involutions
                break;
            default: break;
        }
    }
    return compose(x);
}

std::size_t Group::mul(std::size_t g, std::size_t h) const {
    check_index(g);
    check_index(h);
    if (!table_.empty()) return table_[g * order_ + h];
    return mul_direct(g, h);
}

std::size_t Group::inv(std::size_t g) const {
    check_index(g);
    return inverse_[g];
}

std::size_t Group::pow(std::size_t g, long long e) const {
    check_index(g);
    const std::size_t ord = element_order(g);
    long long r = e % static_cast<long long>(ord);
    if (r < 0) r += static_cast<long long>(ord);
    std::size_t out = identity();
    for (long long i = 0; i < r; ++i) out = mul(out, g);
    return out;
}

std::size_t Group::element_order(std::size_t g) const {
    check_index(g);
    std::size_t k = 1;
    for (std::size_t x = g; x != identity(); x = mul(x, g)) ++k;
    return k;
}

void Group::build_symbols() {
    using Kind = GroupSpec::Kind;
    const bool single = leaves_.size() == 1;
    std::size_t stride = order_;
    std::vector<std::size_t> zero(leaves_.size(), 0);

    // Per-leaf generator elements and positional/default names.
    struct LeafGens {
        std::vector<std::size_t> elements;
        std::vector<std::size_t> orders;
        std::vector<std::string> names;
    };
    std::vector<LeafGens> gens(leaves_.size());
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        const Leaf& leaf = leaves_[i];
        stride /= leaf.order;
        const std::string suffix = single ? "" : std::to_string(i + 1);
        auto element_at = [&](std::size_t local) { return local * stride; };
        switch (leaf.kind) {
            case Kind::cyclic:
                gens[i] = {{element_at(1 % leaf.order)}, {leaf.order}, {"g" + suffix}};
                break;
            case Kind::dihedral:
                gens[i] = {{element_at(leaf.param), element_at(1 % leaf.param)},
                           {2, leaf.param},
                           {"a" + suffix, "b" + suffix}};
                break;
            case Kind::elementary_abelian_2:
                for (std::size_t j = 0; j < leaf.param; ++j) {
                    gens[i].elements.push_back(element_at(std::size_t{1} << (leaf.param - 1 - j)));
                    gens[i].orders.push_back(2);
                    gens[i].names.push_back(single ? "e" + std::to_string(j + 1)
                                                   : "e" + suffix + "_" + std::to_string(j + 1));
                }
                break;
            case Kind::product: break;
        }
    }

    leaf_names_.assign(leaves_.size(), {});
    for (std::size_t i = 0; i < leaves_.size(); ++i) leaf_names_[i] = gens[i].names;

    std::map<std::string, GeneratorSymbol> table;
    auto add = [&](const std::string& name, std::size_t element, std::size_t ord) {
        table.emplace(name, GeneratorSymbol{name, element, ord});
    };
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        for (std::size_t j = 0; j < gens[i].names.size(); ++j) add(gens[i].names[j], gens[i].elements[j], gens[i].orders[j]);
    }

    if (!single) {
        // Unambiguous aliases so that products can be typed the way they are
        // usually written: h for the C2 factor, g or a for the other cyclic
        // factor, a/b for a dihedral factor.
        std::vector<std::size_t> c2, other_cyclic, dihedral;
        for (std::size_t i = 0; i < leaves_.size(); ++i) {
            if (leaves_[i].kind == Kind::cyclic) (leaves_[i].order == 2 ? c2 : other_cyclic).push_back(i);
            if (leaves_[i].kind == Kind::dihedral) dihedral.push_back(i);
        }
        if (c2.size() == 1) {
            add("h", gens[c2[0]].elements[0], 2);
            leaf_names_[c2[0]] = {"h"};
        }
        if (other_cyclic.size() == 1 && dihedral.empty()) {
            const std::size_t i = other_cyclic[0];
            add("a", gens[i].elements[0], gens[i].orders[0]);
            add("g", gens[i].elements[0], gens[i].orders[0]);
            leaf_names_[i] = {"a"};
        }
        if (dihedral.size() == 1) {
            const std::size_t i = dihedral[0];
            add("a", gens[i].elements[0], 2);
            add("b", gens[i].elements[1], gens[i].orders[1]);
            leaf_names_[i] = {"a", "b"};
        }
    }
    for (auto& [name, sym] : table) symbols_.push_back(sym);
}

std::optional<GeneratorSymbol> Group::find_symbol(std::string_view name) const {
    for (const auto& s : symbols_) {
        if (s.name == name) return s;
    }
    return std::nullopt;
}

std::string Group::word(std::size_t g) const {
    check_index(g);
    std::vector<std::size_t> parts;
    decompose(g, parts);
    std::string out;
    auto append = [&out](const std::string& w) {
        if (w.empty()) return;
        if (!out.empty()) out += '*';
        out += w;
    };
    for (std::size_t i = 0; i < leaves_.size(); ++i) {
        const Leaf& leaf = leaves_[i];
        const auto& names = leaf_names_[i];
        switch (leaf.kind) {
            case GroupSpec::Kind::cyclic: append(power_word(names[0], parts[i])); break;
            case GroupSpec::Kind::dihedral: {
                const std::size_t n = leaf.param;
                if (parts[i] >= n) append(names[0]);
                append(power_word(names[1], parts[i] % n));
                break;
            }
            case GroupSpec::Kind::elementary_abelian_2:
                for (std::size_t j = 0; j < leaf.param; ++j) {
                    if (parts[i] & (std::size_t{1} << (leaf.param - 1 - j))) append(names[j]);
                }
                break;
            case GroupSpec::Kind::product: break;
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace grcodes
