#include "grcodes/codes.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>

#include "grcodes/error.hpp"
#include "grcodes/poly.hpp"
#include "grcodes/rgmatrix.hpp"

namespace grcodes {

SubmoduleBasis::SubmoduleBasis(std::vector<std::size_t> indices, std::size_t group_order)
    : indices_(std::move(indices)), order_(group_order) {
    if (indices_.empty()) throw PreconditionError("submodule basis must be nonempty");
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (indices_[i] >= order_)
            throw PreconditionError("basis index " + std::to_string(indices_[i]) + " out of range for group of order " +
                                    std::to_string(order_));
        if (i > 0 && indices_[i] <= indices_[i - 1])
            throw PreconditionError("basis indices must be strictly increasing");
    }
}

SubmoduleBasis SubmoduleBasis::first(std::size_t r, std::size_t group_order) {
    std::vector<std::size_t> idx(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = i;
    return SubmoduleBasis(std::move(idx), group_order);
}

bool SubmoduleBasis::contains(std::size_t g) const {
    return std::binary_search(indices_.begin(), indices_.end(), g);
}

SubmoduleBasis SubmoduleBasis::complement() const {
    std::vector<std::size_t> out;
    out.reserve(order_ - indices_.size());
    for (std::size_t g = 0; g < order_; ++g)
        if (!contains(g)) out.push_back(g);
    return SubmoduleBasis(std::move(out), order_);
}

std::string SubmoduleBasis::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < indices_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(indices_[i]);
    }
    return out;
}

const char* to_string(CodeKind kind) {
    switch (kind) {
        case CodeKind::zero_divisor: return "zero-divisor";
        case CodeKind::unit_derived: return "unit-derived";
        case CodeKind::check_code: return "check";
        case CodeKind::dual: return "dual";
        case CodeKind::cyclic: return "cyclic";
        case CodeKind::ldpc: return "ldpc";
        case CodeKind::generic: return "generic";
    }
    return "?";
}

namespace {

void require_field(const Element& u, const char* what) {
    if (!u.ring().is_field()) throw PreconditionError(std::string(what) + " requires a prime-field coefficient ring");
}

void require_basis_fits(const Element& u, const SubmoduleBasis& basis) {
    if (basis.group_order() != u.size())
        throw PreconditionError("basis is for a group of order " + std::to_string(basis.group_order()) +
                                ", element has order " + std::to_string(u.size()));
}

// Indices (from `candidates`, in order) whose rows of m are kept by a greedy
// independence scan.
std::vector<std::size_t> greedy_rows(const FpMatrix& m, std::span<const std::size_t> candidates) {
    IncrementalBasis basis(m.cols(), m.modulus());
    std::vector<std::size_t> kept;
    for (std::size_t i : candidates)
        if (basis.add(m.row(i))) kept.push_back(i);
    return kept;
}

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = i;
    return v;
}

std::string set_string(std::span<const std::size_t> idx) {
    std::string out = "{";
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(idx[i]);
    }
    return out + "}";
}

void require_independent(const FpMatrix& e, const SubmoduleBasis& basis) {
    const auto kept = greedy_rows(e, basis.indices());
    if (kept.size() != basis.size())
        throw PreconditionError("rows of S u are linearly dependent (" + std::to_string(kept.size()) + " of " +
                                    std::to_string(basis.size()) + " independent)",
                                "S' = " + set_string(kept));
}

// Check matrix of the code spanned by rows S of the encoding matrix e, given
// the rows of a basis of {x : e x = 0}.
FpMatrix check_from(const FpMatrix& e, const SubmoduleBasis& basis, const FpMatrix& kernel) {
    const std::size_t n = e.cols();
    const std::size_t r = n - kernel.rows();
    const std::size_t s = basis.size();
    if (s == r) return kernel;
    if (s > r) throw PreconditionError("basis larger than the rank of the encoding matrix");

    // Extend S to r independent rows: S first, then rows added in listing order.
    IncrementalBasis ib(n, e.modulus());
    std::vector<std::size_t> rows;
    for (std::size_t i : basis.indices()) {
        if (!ib.add(e.row(i))) throw PreconditionError("rows of S u are linearly dependent");
        rows.push_back(i);
    }
    for (std::size_t i = 0; i < n && rows.size() < r; ++i)
        if (!basis.contains(i) && ib.add(e.row(i))) rows.push_back(i);
    if (rows.size() != r) throw Error("internal: could not extend basis to full rank");

    const FpMatrix c = right_inverse(e.select_rows(rows));
    std::vector<std::size_t> extra(r - s);
    for (std::size_t i = 0; i < extra.size(); ++i) extra[i] = s + i;
    // Columns of C for the added rows are orthogonal to every row of S.
    return kernel.vstack(c.select_cols(extra).transpose());
}

}  // namespace

bool is_consistent(const LinearCode& code) {
    if (code.generator.rows() != code.k || code.generator.cols() != code.n) return false;
    if (code.check.rows() != code.n - code.k || code.check.cols() != code.n) return false;
    if (code.k > 0 && code.check.rows() > 0 && !(code.generator * code.check.transpose()).is_zero()) return false;
    return rank(code.generator) == code.k && rank(code.check) == code.n - code.k;
}

std::size_t code_distance(LinearCode& code, const DistanceOptions& options) {
    if (code.distance) return *code.distance;
    const DistanceResult res = min_distance(code.generator, options);
    if (res.exact) code.distance = res.distance;
    return res.distance;
}

FpMatrix encoding_matrix(const Element& u, Side side) {
    return side == Side::right ? rg_matrix(u) : left_rg_matrix(u);
}

SubmoduleBasis greedy_basis(const Element& u, Side side) {
    require_field(u, "greedy_basis");
    if (u.is_zero()) throw PreconditionError("the zero element spans no code");
    const FpMatrix e = encoding_matrix(u, side);
    return SubmoduleBasis(greedy_rows(e, all_indices(e.rows())), u.size());
}

LinearCode zero_divisor_code(const Element& u, const SubmoduleBasis& basis, Side side) {
    require_field(u, "zero_divisor_code");
    require_basis_fits(u, basis);
    const FpMatrix e = encoding_matrix(u, side);
    require_independent(e, basis);

    LinearCode code;
    code.n = u.size();
    code.k = basis.size();
    code.generator = e.select_rows(basis.indices());
    const FpMatrix kernel = null_space_matrix(e);
    code.check = check_from(e, basis, kernel);
    code.provenance = {CodeKind::zero_divisor, u, basis, side, ""};
    if (code.check.rows() > kernel.rows()) code.provenance.note = "shortened";
    return code;
}

CheckElements check_elements(const Element& u, std::uint64_t seed) {
    require_field(u, "check_elements");
    const FpMatrix e = rg_matrix(u);
    const auto kernel = null_space(e);
    if (kernel.empty()) throw PreconditionError("u is a unit and has no check elements");

    CheckElements out;
    const std::size_t n = u.size();
    out.rank = n - kernel.size();
    const std::size_t target = kernel.size();
    for (const auto& x : kernel) out.general.push_back(element_from_first_column(u.group_ptr(), u.ring(), x));

    const std::size_t tries = std::min<std::size_t>(out.general.size(), 8);
    for (std::size_t i = 0; i < tries; ++i) {
        if (rg_rank(out.general[i]) == target) {
            out.principal = out.general[i];
            out.principal_source = "general v" + std::to_string(i + 1);
            return out;
        }
    }

    if (u.group().is_cyclic()) {
        const std::uint32_t p = u.ring().modulus();
        const Poly xn1 = Poly::cyclotomic_modulus(n, p);
        const Poly d = gcd(to_poly(u), xn1);
        const Element v = from_poly(divmod(xn1, d).quotient, u.group_ptr(), u.ring());
        if ((u * v).is_zero() && rg_rank(v) == target) {
            out.principal = v;
            out.principal_source = "minimal annihilator (x^n - 1)/gcd(u, x^n - 1)";
            return out;
        }
    }

    std::mt19937_64 rng(seed);
    const std::uint32_t p = u.ring().modulus();
    const PrimeField f{p};
    for (int attempt = 0; attempt < 32; ++attempt) {
        std::vector<std::uint32_t> col(n, 0);
        for (const auto& x : kernel) {
            const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
            if (!c) continue;
            for (std::size_t i = 0; i < n; ++i) col[i] = f.add(col[i], f.mul(c, x[i]));
        }
        const Element v = element_from_first_column(u.group_ptr(), u.ring(), col);
        if (!v.is_zero() && rg_rank(v) == target) {
            out.principal = v;
            out.principal_source = "random combination (seed " + std::to_string(seed) + ")";
            return out;
        }
    }
    return out;
}

FpMatrix check_matrix(const Element& u, const SubmoduleBasis& basis, const CheckElements& elems) {
    require_field(u, "check_matrix");
    require_basis_fits(u, basis);
    const FpMatrix e = rg_matrix(u);
    std::vector<std::vector<std::uint32_t>> cols;
    cols.reserve(elems.general.size());
    for (const auto& v : elems.general) cols.push_back(first_column(v));
    const FpMatrix kernel = FpMatrix::from_rows(cols, u.size(), u.ring().modulus());
    if (kernel.rows() == 0) throw PreconditionError("no check elements given");
    if (!(e * kernel.transpose()).is_zero())
        throw PreconditionError("check elements do not annihilate u");
    return check_from(e, basis, kernel);
}

LinearCode check_code(const Element& v, const std::optional<SubmoduleBasis>& basis) {
    require_field(v, "check_code");
    const FpMatrix e = rg_matrix(v);
    const std::size_t n = v.size();

    LinearCode code;
    code.n = n;
    code.provenance = {CodeKind::check_code, v, basis, Side::right, ""};
    if (!basis) {
        code.generator = left_null_space_matrix(e);
        if (code.generator.rows() == 0) throw PreconditionError("v is a unit: its check code is empty");
        // y v = 0 iff y is orthogonal to every column of sigma(v).
        const FpMatrix et = e.transpose();
        code.check = independent_rows(et);
    } else {
        require_basis_fits(v, *basis);
        const FpMatrix z = left_null_space_matrix(e.select_rows(basis->indices()));
        if (z.rows() == 0) throw PreconditionError("the check code over T is empty");
        FpMatrix g(z.rows(), n, e.modulus());
        for (std::size_t i = 0; i < z.rows(); ++i)
            for (std::size_t t = 0; t < basis->size(); ++t) g(i, basis->indices()[t]) = z(i, t);
        code.generator = g;
        code.check = null_space_matrix(g);
    }
    code.k = code.generator.rows();
    return code;
}

LinearCode unit_code(const Element& u, const SubmoduleBasis& basis, Side side) {
    require_field(u, "unit_code");
    require_basis_fits(u, basis);
    const Classification cls = classify(u);
    if (cls.kind != Classification::Kind::unit)
        throw PreconditionError("u is not a unit", cls.witness ? "u * (" + print_element(*cls.witness) + ") = 0" : "");
    if (basis.size() >= u.size()) throw PreconditionError("unit-derived codes need |S| < n");

    const FpMatrix e = encoding_matrix(u, side);
    const FpMatrix einv = encoding_matrix(*cls.inverse, side);

    LinearCode code;
    code.n = u.size();
    code.k = basis.size();
    code.generator = e.select_rows(basis.indices());
    code.check = einv.delete_cols(basis.indices()).transpose();
    code.provenance = {CodeKind::unit_derived, u, basis, side, ""};
    return code;
}

LinearCode dual(const LinearCode& code) {
    LinearCode out;
    out.n = code.n;
    out.k = code.n - code.k;
    out.check = code.generator;
    out.provenance.kind = CodeKind::dual;
    out.provenance.side = code.provenance.side;

    const auto& prov = code.provenance;
    const bool right = prov.side == Side::right;
    std::optional<Element> elem;
    std::string route;
    if (right && prov.element && prov.basis && prov.basis->size() < code.n) {
        const Element& u = *prov.element;
        if (prov.kind == CodeKind::zero_divisor) {
            const CheckElements ce = check_elements(u);
            if (ce.principal) {
                elem = transpose(*ce.principal);
                route = "principal check transpose over G\\S";
            }
        } else if (prov.kind == CodeKind::unit_derived) {
            elem = transpose(*classify(u).inverse);
            route = "inverse transpose over G\\S";
        }
    }
    if (elem) {
        const SubmoduleBasis comp = prov.basis->complement();
        const FpMatrix cand = rg_matrix(*elem).select_rows(comp.indices());
        const bool orthogonal = code.k == 0 || (cand * code.generator.transpose()).is_zero();
        if (orthogonal && rank(cand) == out.k) {
            out.generator = independent_rows(cand);
            out.provenance.element = elem;
            out.provenance.basis = comp;
            out.provenance.note = route;
            return out;
        }
        route += " failed guard; ";
    }
    out.generator = null_space_matrix(code.generator);
    out.provenance.note = route + "orthogonal complement";
    return out;
}

SelfDualReport is_self_dual(const Element& u) {
    require_field(u, "is_self_dual");
    SelfDualReport rep;
    rep.u_transpose_zero = (u * transpose(u)).is_zero();
    rep.u_squared_zero = (u * u).is_zero();
    rep.rank = rg_rank(u);
    rep.half_rank = u.size() % 2 == 0 && 2 * rep.rank == u.size();
    rep.self_dual = rep.u_transpose_zero && rep.half_rank;
    return rep;
}

bool is_ideal(const Element& u, const SubmoduleBasis& basis) {
    require_field(u, "is_ideal");
    require_basis_fits(u, basis);
    const FpMatrix e = rg_matrix(u);
    require_independent(e, basis);
    return rank(e) == basis.size();
}

std::uint64_t binomial(std::size_t n, std::size_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > cap) return cap;
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

class BasisSearch {
public:
    BasisSearch(const FpMatrix& e, const DistanceOptions& opts) : e_(e), opts_(opts) {}

    // Exact distance of the basis if it exceeds `threshold`; nullopt when it
    // does not or when the rows are dependent.
    std::optional<std::size_t> improves(const std::vector<std::size_t>& idx, std::size_t threshold) {
        auto it = memo_.find(idx);
        if (it != memo_.end()) {
            const Entry& m = it->second;
            if (m.dependent) return std::nullopt;
            if (m.exact) return m.distance > threshold ? std::optional(m.distance) : std::nullopt;
            if (m.distance <= threshold) return std::nullopt;
        } else {
            ++evaluations_;
        }
        Entry entry;
        const FpMatrix g = e_.select_rows(idx);
        if (rank(g) != idx.size()) {
            entry.dependent = true;
            memo_[idx] = entry;
            return std::nullopt;
        }
        DistanceOptions o = opts_;
        if (threshold > 0) o.stop_at = threshold;
        const DistanceResult res = min_distance(g, o);
        entry.distance = res.distance;
        entry.exact = res.exact || res.distance > threshold;
        memo_[idx] = entry;
        return res.distance > threshold ? std::optional(res.distance) : std::nullopt;
    }

    std::uint64_t evaluations() const { return evaluations_; }

private:
    struct Entry {
        bool dependent = false;
        bool exact = false;
        std::size_t distance = 0;
    };
    const FpMatrix& e_;
    DistanceOptions opts_;
    std::map<std::vector<std::size_t>, Entry> memo_;
    std::uint64_t evaluations_ = 0;
};

}  // namespace

BestBasisResult best_basis(const Element& u, std::size_t r, const BestBasisOptions& options) {
    require_field(u, "best_basis");
    const std::size_t n = u.size();
    if (r == 0 || r >= n) throw PreconditionError("best_basis needs 1 <= r < n");
    const FpMatrix e = rg_matrix(u);
    BasisSearch search(e, options.distance);
    const std::size_t singleton = n - r + 1;

    BestBasisResult out;
    std::vector<std::size_t> best;
    std::size_t best_d = 0;

    if (!options.force_local && binomial(n, r) <= options.budget) {
        std::vector<std::size_t> idx = all_indices(r);
        while (true) {
            if (auto d = search.improves(idx, best_d)) {
                best_d = *d;
                best = idx;
                if (best_d >= singleton) break;
            }
            std::size_t i = r;
            while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (best.empty()) throw PreconditionError("no basis of size " + std::to_string(r) + " gives independent rows");
        out.basis = SubmoduleBasis(best, n);
        out.distance = best_d;
        out.exhaustive = true;
        out.evaluations = search.evaluations();
        return out;
    }

    const auto kept = greedy_rows(e, all_indices(n));
    if (kept.size() < r)
        throw PreconditionError("r = " + std::to_string(r) + " exceeds rank " + std::to_string(kept.size()));

    auto ascend = [&](std::vector<std::size_t> cur) {
        auto d0 = search.improves(cur, 0);
        if (!d0) return;
        std::size_t cur_d = *d0;
        if (cur_d > best_d) {
            best_d = cur_d;
            best = cur;
        }
        while (cur_d < singleton && search.evaluations() < options.budget) {
            std::vector<std::size_t> next;
            std::size_t next_d = cur_d;
            for (std::size_t a = 0; a < r && search.evaluations() < options.budget; ++a) {
                for (std::size_t b = 0; b < n && search.evaluations() < options.budget; ++b) {
                    if (std::binary_search(cur.begin(), cur.end(), b)) continue;
                    std::vector<std::size_t> cand = cur;
                    cand[a] = b;
                    std::sort(cand.begin(), cand.end());
                    if (auto d = search.improves(cand, next_d)) {
                        next_d = *d;
                        next = std::move(cand);
                    }
                }
            }
            if (next.empty()) break;
            cur = std::move(next);
            cur_d = next_d;
            if (cur_d > best_d) {
                best_d = cur_d;
                best = cur;
            }
        }
    };

    std::vector<std::size_t> start = all_indices(r);
    if (rank(e.select_rows(start)) != r) start.assign(kept.begin(), kept.begin() + static_cast<long>(r));
    ascend(start);

    std::mt19937_64 rng(options.seed);
    std::vector<std::size_t> pool = all_indices(n);
    for (std::uint64_t attempt = 0; best_d < singleton && search.evaluations() < options.budget &&
                                    attempt < 64 * options.budget + 64;
         ++attempt) {
        std::shuffle(pool.begin(), pool.end(), rng);
        std::vector<std::size_t> cand(pool.begin(), pool.begin() + static_cast<long>(r));
        std::sort(cand.begin(), cand.end());
        ascend(cand);
    }
    if (best.empty()) throw PreconditionError("no basis of size " + std::to_string(r) + " gives independent rows");
    out.basis = SubmoduleBasis(best, n);
    out.distance = best_d;
    out.exhaustive = false;
    out.evaluations = search.evaluations();
    return out;
}

}  // namespace grcodes
