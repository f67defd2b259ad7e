#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grcodes {

/// Description of a supported finite group.
///
/// Canonical listings (index 0 is always the identity):
///   cyclic(n)                 1, g, g^2, ..., g^(n-1)
///   dihedral(n), order 2n     1, b, ..., b^(n-1), a, ab, ..., ab^(n-1)   with ab = b^-1 a
///   elementary_abelian_2(m)   bit vectors in lexicographic order (first coordinate is the MSB)
///   product(F1, ..., Fk)      lexicographic over factor listings, F1 varying slowest
///
/// Nested products list exactly like their flattened form.
struct GroupSpec {
    enum class Kind { cyclic, dihedral, elementary_abelian_2, product };

    Kind kind = Kind::cyclic;
    std::size_t param = 1;  // n, half-order n, or rank m; unused for products
    std::vector<GroupSpec> factors;

    static GroupSpec cyclic(std::size_t n);
    static GroupSpec dihedral(std::size_t half_order);
    static GroupSpec elementary_abelian_2(std::size_t rank);
    static GroupSpec product(std::vector<GroupSpec> factors);

    std::size_t order() const;
    /// Round-trips through parse_group_spec, e.g. "C4xC2", "D6", "C5x(C3xC2)".
    std::string to_string() const;

    friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Parses `C<n>`, `D<2n>` (total order), `E2^<m>` and `x`-products with
/// parentheses. Case-insensitive; whitespace ignored.
GroupSpec parse_group_spec(std::string_view text);

/// Largest supported group order.
inline constexpr std::size_t kMaxGroupOrder = std::size_t{1} << 16;
/// Groups up to this order keep a full multiplication table.
inline constexpr std::size_t kMaxTabulatedOrder = 4096;

/// A generator symbol usable in element text, bound to a group element.
struct GeneratorSymbol {
    std::string name;
    std::size_t element = 0;
    std::size_t order = 1;  // order of the generated cyclic subgroup
};

/// A finite group with a fixed canonical listing. Immutable after
/// construction.
class Group {
public:
    explicit Group(GroupSpec spec);

    static std::shared_ptr<const Group> make(GroupSpec spec) {
        return std::make_shared<const Group>(std::move(spec));
    }

    const GroupSpec& spec() const noexcept { return spec_; }
    std::size_t order() const noexcept { return order_; }
    static constexpr std::size_t identity() noexcept { return 0; }

    std::size_t mul(std::size_t g, std::size_t h) const;
    std::size_t inv(std::size_t g) const;
    /// g^e for any integer e.
    std::size_t pow(std::size_t g, long long e) const;
    std::size_t element_order(std::size_t g) const;

    bool is_cyclic() const noexcept { return spec_.kind == GroupSpec::Kind::cyclic; }
    bool is_dihedral() const noexcept { return spec_.kind == GroupSpec::Kind::dihedral; }
    bool is_abelian() const noexcept;

    /// All generator symbols accepted in element text (aliases included).
    const std::vector<GeneratorSymbol>& symbols() const noexcept { return symbols_; }
    std::optional<GeneratorSymbol> find_symbol(std::string_view name) const;
    /// Printable word for an element, e.g. "1", "g^3", "a*b^2", "h*a^3".
    std::string word(std::size_t g) const;

    /// True when the multiplication table is materialized.
    bool tabulated() const noexcept { return !table_.empty(); }

private:
    struct Leaf {
        GroupSpec::Kind kind;
        std::size_t param;
        std::size_t order;
    };

    std::size_t mul_direct(std::size_t g, std::size_t h) const;
    std::size_t inv_direct(std::size_t g) const;
    void decompose(std::size_t g, std::vector<std::size_t>& parts) const;
    std::size_t compose(const std::vector<std::size_t>& parts) const;
    void check_index(std::size_t g) const;
    void build_symbols();

    GroupSpec spec_;
    std::size_t order_;
    std::vector<Leaf> leaves_;
    std::vector<std::uint16_t> table_;
    std::vector<std::uint16_t> inverse_;
    std::vector<GeneratorSymbol> symbols_;
    std::vector<std::vector<std::string>> leaf_names_;  // display names per leaf
};

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr make_group(GroupSpec spec) { return Group::make(std::move(spec)); }

}  // namespace grcodes
