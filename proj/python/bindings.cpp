#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "grcodes/codes.hpp"
#include "grcodes/constructions.hpp"
#include "grcodes/error.hpp"
#include "grcodes/io.hpp"
#include "grcodes/rgmatrix.hpp"
#include "grcodes/verify.hpp"

namespace py = pybind11;
using namespace grcodes;

namespace {

py::array_t<std::uint32_t> to_numpy(const FpMatrix& m) {
    py::array_t<std::uint32_t> out({m.rows(), m.cols()});
    auto w = out.mutable_unchecked<2>();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) w(i, j) = m(i, j);
    return out;
}

FpMatrix from_numpy(py::array_t<long long, py::array::c_style | py::array::forcecast> a, std::uint32_t p) {
    if (a.ndim() != 2) throw py::value_error("expected a 2-d array");
    auto r = a.unchecked<2>();
    FpMatrix m(r.shape(0), r.shape(1), p);
    const PrimeField f{p};
    for (py::ssize_t i = 0; i < r.shape(0); ++i)
        for (py::ssize_t j = 0; j < r.shape(1); ++j) m(i, j) = f.reduce(r(i, j));
    return m;
}

std::vector<long long> coefficients(const Element& u) {
    std::vector<long long> out;
    for (const auto& c : to_vector(u)) out.push_back(c.convert_to<long long>());
    return out;
}

Element make_element(const std::string& text, const std::string& group, const std::string& ring) {
    return parse_element(text, make_group(parse_group_spec(group)), parse_ring(ring));
}

}  // namespace

PYBIND11_MODULE(_grcodes, m) {
    m.doc() = "Codes from group-ring encodings";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());

    py::class_<Group, std::shared_ptr<Group>>(m, "Group")
        .def(py::init([](const std::string& spec) { return std::make_shared<Group>(parse_group_spec(spec)); }))
        .def_property_readonly("order", &Group::order)
        .def("mul", &Group::mul)
        .def("inv", &Group::inv)
        .def("word", &Group::word)
        .def("is_abelian", &Group::is_abelian)
        .def("__len__", &Group::order)
        .def("__repr__", [](const Group& g) { return "Group('" + g.spec().to_string() + "')"; });

    py::class_<Element>(m, "Element")
        .def(py::init(&make_element), py::arg("text"), py::arg("group"), py::arg("ring") = "gf2")
        .def_property_readonly("coefficients", &coefficients)
        .def_property_readonly("group", [](const Element& u) { return u.group().spec().to_string(); })
        .def_property_readonly("ring", [](const Element& u) { return u.ring().to_string(); })
        .def("transpose", [](const Element& u) { return transpose(u); })
        .def("weight", [](const Element& u) { return weight(u); })
        .def("is_zero", &Element::is_zero)
        .def("is_one", &Element::is_one)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__str__", &print_element)
        .def("__repr__", [](const Element& u) {
            return "Element('" + print_element(u) + "', '" + u.group().spec().to_string() + "', '" +
                   u.ring().to_string() + "')";
        });

    m.def("rg_matrix", [](const Element& u) { return to_numpy(rg_matrix(u)); });
    m.def("rank", [](const Element& u) { return rg_rank(u); });
    m.def(
        "classify",
        [](const Element& u) {
            const auto c = classify(u);
            py::dict d;
            d["kind"] = to_string(c.kind);
            d["inverse"] = c.inverse ? py::cast(*c.inverse) : py::none();
            d["witness"] = c.witness ? py::cast(*c.witness) : py::none();
            d["rank"] = c.rank;
            d["determinant"] = c.determinant ? py::cast(c.determinant->str()) : py::none();
            return d;
        },
        "Unit / zero-divisor classification as a dict");

    py::enum_<Side>(m, "Side").value("right", Side::right).value("left", Side::left);

    py::class_<LinearCode>(m, "LinearCode")
        .def_readonly("n", &LinearCode::n)
        .def_readonly("k", &LinearCode::k)
        .def_property_readonly("generator", [](const LinearCode& c) { return to_numpy(c.generator); })
        .def_property_readonly("check", [](const LinearCode& c) { return to_numpy(c.check); })
        .def_property_readonly("kind", [](const LinearCode& c) { return to_string(c.provenance.kind); })
        .def_property_readonly("note", [](const LinearCode& c) { return c.provenance.note; })
        .def_property_readonly("basis", [](const LinearCode& c) {
            return c.provenance.basis ? py::cast(c.provenance.basis->indices()) : py::none();
        })
        .def("distance", [](LinearCode& c, std::size_t threads) {
            DistanceOptions o;
            o.threads = threads;
            py::gil_scoped_release release;
            return code_distance(c, o);
        }, py::arg("threads") = 1)
        .def("is_consistent", &is_consistent)
        .def("bundle", [](const LinearCode& c) {
            std::ostringstream os;
            write_bundle(os, c);
            return os.str();
        })
        .def("json_summary", [](const LinearCode& c) { return json_summary(c); })
        .def("__repr__", [](const LinearCode& c) {
            return "LinearCode(n=" + std::to_string(c.n) + ", k=" + std::to_string(c.k) + ")";
        });

    auto basis_of = [](const Element& u, const std::vector<std::size_t>& idx) { return SubmoduleBasis(idx, u.size()); };
    m.def("greedy_basis", [](const Element& u, Side side) { return greedy_basis(u, side).indices(); },
          py::arg("u"), py::arg("side") = Side::right);
    m.def("zero_divisor_code", [basis_of](const Element& u, const std::vector<std::size_t>& basis, Side side) {
        return zero_divisor_code(u, basis_of(u, basis), side);
    }, py::arg("u"), py::arg("basis"), py::arg("side") = Side::right);
    m.def("unit_code", [basis_of](const Element& u, const std::vector<std::size_t>& basis, Side side) {
        return unit_code(u, basis_of(u, basis), side);
    }, py::arg("u"), py::arg("basis"), py::arg("side") = Side::right);
    m.def("check_code", [](const Element& v) { return check_code(v); });
    m.def("principal_check", [](const Element& u) {
        const auto ce = check_elements(u);
        return ce.principal ? py::cast(*ce.principal) : py::none();
    });
    m.def("dual", &dual);
    m.def("is_ideal", [basis_of](const Element& u, const std::vector<std::size_t>& basis) {
        return is_ideal(u, basis_of(u, basis));
    });
    m.def("is_self_dual", [](const Element& u) { return is_self_dual(u).self_dual; });
    m.def("best_basis", [](const Element& u, std::size_t r, std::uint64_t budget, std::uint64_t seed) {
        BestBasisOptions o;
        o.budget = budget;
        o.seed = seed;
        const auto res = best_basis(u, r, o);
        return py::make_tuple(res.basis.indices(), res.distance, res.exhaustive);
    }, py::arg("u"), py::arg("r"), py::arg("budget") = 5000, py::arg("seed") = 0);

    m.def("min_distance", [](py::array_t<long long> generator, std::uint32_t p, std::size_t threads) {
        const FpMatrix g = from_numpy(generator, p);
        DistanceOptions o;
        o.threads = threads;
        py::gil_scoped_release release;
        return min_distance(g, o).distance;
    }, py::arg("generator"), py::arg("p") = 2, py::arg("threads") = 1);

    m.def("cyclic_code", [](const Element& h) {
        auto cc = cyclic_code(h);
        return py::make_tuple(cc.pair.generator, cc.pair.check, cc.code);
    }, "Returns (d, p, code)");
    m.def("euclid_inverse", &euclid_inverse);
    m.def("dihedral_double", [](const Element& u) {
        auto dd = dihedral_double(u);
        return py::make_tuple(dd.element, dd.annihilator, dd.code);
    }, "Returns (u + a u, annihilator, code)");
    m.def("orthogonal_unit", &orthogonal_unit);
    m.def("selfdual_family", [] {
        auto f = selfdual_family();
        return py::make_tuple(f.u, f.code);
    });
    m.def("qc_ldpc", [](const std::string& base, const std::string& label, std::size_t j, std::uint64_t seed) {
        const auto q = qc_ldpc(random_ldpc_plan(parse_group_spec(base), parse_group_spec(label), j, seed));
        return py::make_tuple(to_numpy(q.check), q.code);
    }, py::arg("base"), py::arg("label"), py::arg("j"), py::arg("seed") = 0);
    m.def("ldpc_unit_example", [](std::size_t n) {
        auto ex = ldpc_unit_example(n);
        return py::make_tuple(ex.v, ex.u, ex.code);
    });

    m.def("verify_claims", [](bool extended) {
        VerifyOptions o;
        o.extended = extended;
        py::list out;
        for (const auto& c : verify_claims(o)) {
            py::dict d;
            d["id"] = c.id;
            d["claim"] = c.claim;
            d["pass"] = c.pass;
            d["erratum"] = c.erratum;
            d["detail"] = c.detail;
            out.append(d);
        }
        return out;
    }, py::arg("extended") = false);
}
