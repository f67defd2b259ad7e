#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "grcodes/constructions.hpp"
#include "grcodes/error.hpp"
#include "grcodes/io.hpp"
#include "grcodes/rgmatrix.hpp"
#include "grcodes/verify.hpp"

using namespace grcodes;

namespace {

enum Exit { ok = 0, parse_failure = 1, precondition_failure = 2, resource_failure = 3, internal_failure = 4 };

struct Common {
    std::string group;
    std::string ring = "gf2";
    std::string elem;
    std::string side = "right";
    std::string basis = "auto";
    std::string kind = "zd";
    std::string format = "text";
    std::string out;
    std::uint64_t seed = 0;
    std::size_t threads = 1;
    bool distance = false;
};

void add_element_options(CLI::App* app, Common& c) {
    app->add_option("--group", c.group, "Group spec, e.g. C7, D14, E2^3, C4xC2")->required();
    app->add_option("--ring", c.ring, "Coefficient ring: gf2, gf<p> or z")->capture_default_str();
    app->add_option("--elem", c.elem, "Element text, e.g. \"1 + g^2 + g^5\"")->required();
}

void add_code_options(CLI::App* app, Common& c) {
    add_element_options(app, c);
    app->add_option("--kind", c.kind, "zd (zero-divisor) or unit")->check(CLI::IsMember({"zd", "unit"}))->capture_default_str();
    app->add_option("--basis", c.basis, "first:<r>, indices:<k1,k2,...>, auto or best:<r>[:budget]")->capture_default_str();
    app->add_option("--side", c.side, "right (x -> xu) or left (x -> ux)")->check(CLI::IsMember({"right", "left"}))->capture_default_str();
    app->add_option("--seed", c.seed, "Seed for randomized searches")->capture_default_str();
    app->add_option("--threads", c.threads, "Worker threads for distance enumeration")->capture_default_str();
}

void add_output_options(CLI::App* app, Common& c) {
    app->add_option("--format", c.format, "text, alist or json-summary")
        ->check(CLI::IsMember({"text", "alist", "json-summary"}))
        ->capture_default_str();
    app->add_option("--out", c.out, "Output file (default stdout)");
}

Element load_element(const Common& c) {
    const GroupPtr g = make_group(parse_group_spec(c.group));
    return parse_element(c.elem, g, parse_ring(c.ring));
}

Side side_of(const Common& c) { return c.side == "left" ? Side::left : Side::right; }

std::vector<std::size_t> parse_index_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw ParseError("bad index `" + item + "` in list `" + text + "`");
        }
    }
    if (out.empty()) throw ParseError("empty index list");
    return out;
}

std::size_t parse_count(const std::string& text, const char* what) {
    const auto v = parse_index_list(text);
    if (v.size() != 1) throw ParseError(std::string("bad ") + what + " `" + text + "`");
    return v[0];
}

SubmoduleBasis resolve_basis(const Common& c, const Element& u, bool unit, DistanceOptions dopt) {
    const std::string& spec = c.basis;
    const std::size_t n = u.size();
    if (spec == "auto") {
        if (unit) throw ParseError("--basis auto is only valid for zero-divisor codes");
        const auto cls = classify(u);
        if (cls.kind == Classification::Kind::unit)
            throw PreconditionError("u is a unit, so --basis auto has no zero-divisor code to build",
                                    u.group().is_cyclic() && u.ring().is_field()
                                        ? "gcd(u, g^n - 1) = " + gcd(to_poly(u), Poly::cyclotomic_modulus(n, u.ring().modulus())).to_string('g')
                                        : "rank sigma(u) = " + std::to_string(cls.rank));
        return greedy_basis(u, side_of(c));
    }
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw ParseError("unknown basis spec `" + spec + "`");
    const std::string head = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    if (head == "first") return SubmoduleBasis::first(parse_count(rest, "basis size"), n);
    if (head == "indices") return SubmoduleBasis(parse_index_list(rest), n);
    if (head == "best") {
        for (auto& ch : rest)
            if (ch == ':') ch = ',';
        const auto parts = parse_index_list(rest);
        if (parts.size() > 2) throw ParseError("best:<r>[:budget] takes at most two numbers");
        BestBasisOptions bo;
        bo.seed = c.seed;
        bo.distance = dopt;
        if (parts.size() == 2) bo.budget = parts[1];
        const auto res = best_basis(u, parts[0], bo);
        std::cerr << "best basis {" << res.basis.to_string() << "} d = " << res.distance
                  << (res.exhaustive ? " (exhaustive)" : " (local search, heuristic)") << ", " << res.evaluations
                  << " bases evaluated\n";
        return res.basis;
    }
    throw ParseError("unknown basis spec `" + spec + "`");
}

LinearCode build_code(const Common& c) {
    const Element u = load_element(c);
    DistanceOptions dopt;
    dopt.threads = c.threads;
    const bool unit = c.kind == "unit";
    const SubmoduleBasis basis = resolve_basis(c, u, unit, dopt);
    return unit ? unit_code(u, basis, side_of(c)) : zero_divisor_code(u, basis, side_of(c));
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error("cannot open `" + path + "` for writing");
        }
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

void emit_code(const Common& c, LinearCode& code, const std::map<std::string, bool>& flags = {}) {
    if (c.distance) {
        DistanceOptions dopt;
        dopt.threads = c.threads;
        code_distance(code, dopt);
    }
    Output out(c.out);
    if (c.format == "json-summary") {
        out.stream() << json_summary(code, flags) << '\n';
    } else if (c.format == "alist") {
        write_alist(out.stream(), code.check);
    } else {
        write_bundle(out.stream(), code);
    }
    std::cerr << "(" << code.n << "," << code.k;
    if (code.distance) std::cerr << "," << *code.distance;
    std::cerr << ") " << to_string(code.provenance.kind) << " code";
    if (!code.provenance.note.empty()) std::cerr << " [" << code.provenance.note << "]";
    std::cerr << '\n';
}

int cmd_classify(const Common& c) {
    const Element u = load_element(c);
    const Classification cls = classify(u);
    std::cout << to_string(cls.kind);
    if (cls.inverse) std::cout << "; inverse = " << (*cls.inverse == u ? "self" : print_element(*cls.inverse));
    if (cls.witness) std::cout << "; witness = " << print_element(*cls.witness);
    if (u.ring().is_field()) std::cout << "; rank = " << cls.rank;
    if (cls.determinant) std::cout << "; det = " << *cls.determinant;
    std::cout << '\n';
    return ok;
}

int cmd_matrix(const Common& c) {
    const Element u = load_element(c);
    Output out(c.out);
    if (u.ring().is_field()) {
        write_matrix(out.stream(), encoding_matrix(u, side_of(c)));
        return ok;
    }
    if (side_of(c) == Side::left && !u.group().is_abelian())
        throw PreconditionError("left matrices over the integers are not supported");
    const IntMatrix m = rg_matrix_integer(u);
    out.stream() << m.rows() << ' ' << m.cols() << " z\n";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) out.stream() << (j ? " " : "") << m(i, j);
        out.stream() << '\n';
    }
    return ok;
}

int cmd_distance(const Common& c, const std::string& bundle_path, std::uint64_t estimate) {
    FpMatrix generator;
    if (!bundle_path.empty()) {
        std::ifstream in(bundle_path);
        if (!in) throw ParseError("cannot read `" + bundle_path + "`");
        generator = read_bundle(in).generator;
    } else {
        generator = build_code(c).generator;
    }
    DistanceResult res;
    if (estimate) {
        res = estimate_distance(generator, estimate, c.seed);
    } else {
        DistanceOptions dopt;
        dopt.threads = c.threads;
        res = min_distance(generator, dopt);
    }
    std::cout << "d " << (res.exact ? "= " : "<= ") << res.distance << " (" << (res.exact ? "exact" : "upper bound")
              << ", " << res.codewords << " codewords)\n";
    return ok;
}

int cmd_selfdual(const Common& c) {
    const Element u = load_element(c);
    const auto rep = is_self_dual(u);
    std::cout << "u u^T = 0: " << std::boolalpha << rep.u_transpose_zero << '\n'
              << "u^2 = 0: " << rep.u_squared_zero << '\n'
              << "rank = n/2: " << rep.half_rank << " (rank " << rep.rank << ", n " << u.size() << ")\n"
              << "self-dual: " << rep.self_dual << '\n';
    return ok;
}

int cmd_cyclic(Common& c) {
    const Element h = load_element(c);
    auto cc = cyclic_code(h);
    std::cout << "d(g) = " << cc.pair.d.to_string('g') << '\n' << "p(g) = " << cc.pair.p.to_string('g') << '\n';
    if (!c.out.empty() || c.format != "text" || c.distance) emit_code(c, cc.code);
    else std::cout << "(" << cc.code.n << "," << cc.code.k << ")\n";
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Codes from group-ring encodings"};
    app.require_subcommand(1);
    Common c;

    auto* classify_cmd = app.add_subcommand("classify", "Unit / zero-divisor classification");
    add_element_options(classify_cmd, c);

    auto* matrix_cmd = app.add_subcommand("matrix", "Print the RG-matrix sigma(u)");
    add_element_options(matrix_cmd, c);
    matrix_cmd->add_option("--side", c.side, "right or left")->check(CLI::IsMember({"right", "left"}));
    matrix_cmd->add_option("--out", c.out, "Output file");

    auto* code_cmd = app.add_subcommand("code", "Build a zero-divisor or unit-derived code");
    add_code_options(code_cmd, c);
    add_output_options(code_cmd, c);
    code_cmd->add_flag("--distance", c.distance, "Compute the exact minimum distance");

    std::string bundle_path;
    std::uint64_t estimate = 0;
    auto* distance_cmd = app.add_subcommand("distance", "Minimum distance of a code");
    distance_cmd->add_option("--bundle", bundle_path, "Read the generator from a code bundle");
    distance_cmd->add_option("--group", c.group, "Group spec");
    distance_cmd->add_option("--ring", c.ring, "Coefficient ring");
    distance_cmd->add_option("--elem", c.elem, "Element text");
    distance_cmd->add_option("--kind", c.kind, "zd or unit")->check(CLI::IsMember({"zd", "unit"}));
    distance_cmd->add_option("--basis", c.basis, "Basis spec");
    distance_cmd->add_option("--side", c.side, "right or left")->check(CLI::IsMember({"right", "left"}));
    distance_cmd->add_option("--threads", c.threads, "Worker threads");
    distance_cmd->add_option("--seed", c.seed, "Seed for the estimator and basis search");
    distance_cmd->add_option("--estimate", estimate, "Sample this many messages for an upper bound instead");

    auto* dual_cmd = app.add_subcommand("dual", "Dual of a code");
    add_code_options(dual_cmd, c);
    add_output_options(dual_cmd, c);
    dual_cmd->add_flag("--distance", c.distance, "Compute the exact minimum distance of the dual");

    auto* selfdual_cmd = app.add_subcommand("selfdual", "Self-duality report for u");
    add_element_options(selfdual_cmd, c);

    auto* ideal_cmd = app.add_subcommand("ideal", "Is the code Wu an ideal?");
    add_code_options(ideal_cmd, c);

    auto* cyclic_cmd = app.add_subcommand("cyclic", "Cyclic code from a polynomial h in GF(p)C_n");
    add_element_options(cyclic_cmd, c);
    add_output_options(cyclic_cmd, c);
    cyclic_cmd->add_flag("--distance", c.distance, "Compute the exact minimum distance");

    std::string base = "C5", label = "C3xC2", f_text, rows_text;
    std::size_t j = 2, unit_n = 0;
    auto* ldpc_cmd = app.add_subcommand("ldpc", "Quasi-cyclic LDPC check from v = sum (h, f(h)) in GF(2)(H x G)");
    ldpc_cmd->add_option("--base", base, "Group G (order m)")->capture_default_str();
    ldpc_cmd->add_option("--label", label, "Group H (order k), listed slowest")->capture_default_str();
    ldpc_cmd->add_option("-j,--j", j, "Number of block rows")->capture_default_str();
    ldpc_cmd->add_option("--f", f_text, "f(h) for each h of H in listing order, as G words, e.g. \"1,g,g^3\"");
    ldpc_cmd->add_option("--rows", rows_text, "Block rows, e.g. 0,2 (default: random from the seed)");
    ldpc_cmd->add_option("--unit-n", unit_n, "Instead build the unit-derived LDPC code in GF(2)C_n");
    ldpc_cmd->add_option("--seed", c.seed, "Seed for f and the block rows")->capture_default_str();
    ldpc_cmd->add_option("--format", c.format, "alist, text or json-summary")
        ->check(CLI::IsMember({"text", "alist", "json-summary"}));
    ldpc_cmd->add_option("--out", c.out, "Output file");
    ldpc_cmd->add_flag("--distance", c.distance, "Compute the exact minimum distance");

    bool extended = false;
    auto* verify_cmd = app.add_subcommand("verify-paper", "Re-derive the published example codes");
    verify_cmd->add_flag("--extended", extended, "Include the exact (62,30,12) distance run");
    verify_cmd->add_option("--threads", c.threads, "Worker threads")->capture_default_str();
    verify_cmd->add_option("--seed", c.seed, "Seed for the randomized checks")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? ok : parse_failure;
    }

    try {
        if (*classify_cmd) return cmd_classify(c);
        if (*matrix_cmd) return cmd_matrix(c);
        if (*code_cmd) {
            LinearCode code = build_code(c);
            emit_code(c, code);
            return ok;
        }
        if (*distance_cmd) {
            if (bundle_path.empty() && (c.group.empty() || c.elem.empty()))
                throw ParseError("distance needs --bundle or --group and --elem");
            return cmd_distance(c, bundle_path, estimate);
        }
        if (*dual_cmd) {
            LinearCode d = dual(build_code(c));
            emit_code(c, d);
            return ok;
        }
        if (*selfdual_cmd) return cmd_selfdual(c);
        if (*ideal_cmd) {
            const Element u = load_element(c);
            DistanceOptions dopt;
            const SubmoduleBasis b = resolve_basis(c, u, c.kind == "unit", dopt);
            std::cout << std::boolalpha << is_ideal(u, b) << '\n';
            return ok;
        }
        if (*cyclic_cmd) return cmd_cyclic(c);
        if (*ldpc_cmd) {
            if (!ldpc_cmd->count("--format")) c.format = "alist";
            if (unit_n) {
                auto ex = ldpc_unit_example(unit_n);
                std::cerr << "v = " << print_element(ex.v) << "; weight(v^-1) = " << weight(ex.u) << '\n';
                emit_code(c, ex.code);
                return ok;
            }
            const GroupSpec g = parse_group_spec(base), h = parse_group_spec(label);
            LdpcPlan plan = random_ldpc_plan(g, h, j, c.seed);
            if (!f_text.empty()) {
                const GroupPtr gp = make_group(g);
                plan.f.clear();
                std::stringstream ss(f_text);
                std::string word;
                while (std::getline(ss, word, ',')) {
                    const Element e = parse_element(word, gp, Ring::gf2());
                    if (weight(e) != 1) throw ParseError("f entries must be single group elements: `" + word + "`");
                    for (std::size_t t = 0; t < e.size(); ++t)
                        if (e.coeff(t) != 0) plan.f.push_back(t);
                }
                plan.seed.reset();
            }
            if (!rows_text.empty()) {
                plan.rows = parse_index_list(rows_text);
                plan.seed.reset();
            }
            QcLdpc q = qc_ldpc(plan);
            std::cerr << "check " << q.check.rows() << " x " << q.check.cols() << ", (" << q.j << "," << q.k
                      << ")-regular, target rate " << q.target_rate << ", exact rate " << q.exact_rate << '\n';
            if (c.format == "alist") {
                if (c.distance) std::cerr << "d = " << code_distance(q.code) << '\n';
                Output out(c.out);
                write_alist(out.stream(), q.check);
            } else {
                emit_code(c, q.code, {{"regular", true}});
            }
            return ok;
        }
        if (*verify_cmd) {
            VerifyOptions vo;
            vo.extended = extended;
            vo.threads = c.threads;
            vo.seed = c.seed;
            const auto checks = verify_claims(vo);
            print_claims(std::cout, checks);
            for (const auto& ch : checks)
                if (!ch.pass && !ch.erratum) return internal_failure;
            return ok;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return parse_failure;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << '\n';
        return precondition_failure;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return resource_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return internal_failure;
    }
    return ok;
}
