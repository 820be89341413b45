#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "jointslab/jointslab.hpp"

namespace py = pybind11;
using namespace jointslab;
using nlohmann::json;

namespace {

BigInt big(const py::object& v) { return BigInt(py::str(v).cast<std::string>()); }

py::object pyint(const BigInt& v) {
    return py::module_::import("builtins").attr("int")(v.str());
}

FieldSpec field_of(const py::object& characteristic) {
    BigInt c = big(characteristic);
    return c == 0 ? FieldSpec::rationals() : FieldSpec::prime(c);
}

Point point_of(const FieldSpec& f, const std::vector<std::string>& coords) {
    std::vector<FieldElement> v;
    v.reserve(coords.size());
    for (const auto& s : coords) v.push_back(f.parse(s));
    return Point(f, v);
}

std::set<Point> point_set_of(const FieldSpec& f,
                             const std::vector<std::vector<std::string>>& pts) {
    std::set<Point> out;
    for (const auto& p : pts) out.insert(point_of(f, p));
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact joints arithmetic: generators, joint detection, bounds, choosing";

    static py::exception<Error> err_exc(m, "Error");
    static py::exception<GenericityError> gen_exc(m, "GenericityError", err_exc.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const GenericityError& e) {
            json payload{{"message", e.what()},
                         {"witness", json::parse(genericity_witness_to_json(e.witness))}};
            PyErr_SetString(gen_exc.ptr(), payload.dump().c_str());
        } catch (const Error& e) {
            PyErr_SetString(err_exc.ptr(), e.what());
        }
    });

    py::class_<LineCollection>(m, "LineCollection")
        .def("__len__", &LineCollection::size)
        .def_property_readonly("dim", &LineCollection::dim)
        .def_property_readonly(
            "characteristic",
            [](const LineCollection& c) { return pyint(c.spec().characteristic()); })
        .def_property_readonly("merged_duplicates", &LineCollection::merged_duplicates)
        .def("line",
             [](const LineCollection& c, std::size_t i) {
                 if (i >= c.size()) throw py::index_error();
                 std::vector<std::string> base, dir;
                 for (const auto& e : c[i].base().coords()) base.push_back(e.str());
                 for (const auto& e : c[i].dir()) dir.push_back(e.str());
                 return py::make_tuple(base, dir);
             },
             py::arg("index"))
        .def("to_json", [](const LineCollection& c) { return line_collection_to_json(c); })
        .def_static("from_json",
                    [](const std::string& text) { return line_collection_from_json(text); });

    m.def(
        "grid",
        [](std::size_t n, std::size_t m_, const py::object& field) {
            return grid(n, m_, field_of(field));
        },
        py::arg("n"), py::arg("m"), py::arg("field"));
    m.def(
        "generic_star",
        [](std::size_t n, std::size_t lines, const py::object& field, std::uint64_t seed) {
            return generic_star(n, lines, field_of(field), seed);
        },
        py::arg("n"), py::arg("lines"), py::arg("field"), py::arg("seed"));
    m.def(
        "plane_with_verticals",
        [](const py::object& p) { return plane_with_verticals(big(p)); }, py::arg("p"));
    m.def(
        "axis_with_planar_pencil",
        [](std::size_t m_, const py::object& field) {
            return axis_with_planar_pencil(m_, field_of(field));
        },
        py::arg("m"), py::arg("field"));
    m.def(
        "random_lines",
        [](std::size_t n, std::size_t lines, const py::object& field, std::uint64_t seed) {
            return random_lines(n, lines, field_of(field), seed);
        },
        py::arg("n"), py::arg("lines"), py::arg("field"), py::arg("seed"));

    m.def(
        "joints_json",
        [](const LineCollection& c, std::size_t cap) { return joints_to_json(c, joints(c, cap)); },
        py::arg("collection"), py::arg("cap") = 24);
    m.def(
        "joint_count", [](const LineCollection& c) { return joint_points(c).size(); },
        py::arg("collection"));
    m.def(
        "is_generic", [](const LineCollection& c) { return is_generic(c); },
        py::arg("collection"));
    m.def(
        "genericity_witness_json",
        [](const LineCollection& c) -> std::optional<std::string> {
            auto w = genericity_witness(c);
            if (!w) return std::nullopt;
            return genericity_witness_to_json(*w);
        },
        py::arg("collection"));
    m.def(
        "multiplicity",
        [](const LineCollection& c, const std::vector<std::string>& point, std::size_t cap) {
            return pyint(multiplicity(point_of(c.spec(), point), c, cap));
        },
        py::arg("collection"), py::arg("point"), py::arg("cap") = 24);

    m.def(
        "dstar", [](std::size_t n, const py::object& m_) { return dstar(n, big(m_)); },
        py::arg("n"), py::arg("m"));
    m.def(
        "theorem1_bound",
        [](const py::object& L, std::size_t n) { return pyint(theorem1_bound(big(L), n)); },
        py::arg("lines"), py::arg("n"));
    m.def(
        "theorem2_bound",
        [](const py::object& L, std::size_t n, const py::object& lam) {
            return pyint(theorem2_bound(big(L), n, big(lam)));
        },
        py::arg("lines"), py::arg("n"), py::arg("lam"));

    m.def(
        "peel_json", [](const LineCollection& c) { return peeling_trace_to_json(peel(c)); },
        py::arg("collection"));
    m.def(
        "choose_json",
        [](const LineCollection& c, const py::object& lam, bool require_generic,
           std::size_t cap) {
            ChooseOptions options;
            options.require_generic = require_generic;
            options.cap = cap;
            return choice_assignment_to_json(choose(c, big(lam), options));
        },
        py::arg("collection"), py::arg("lam"), py::arg("require_generic") = true,
        py::arg("cap") = 24);
    m.def(
        "sample_survival_json",
        [](const LineCollection& c, const py::object& lam, std::uint64_t trials,
           std::uint64_t seed, std::size_t cap) {
            auto r = sample_survival(c, big(lam), trials, seed, cap);
            return py::make_tuple(sampling_report_to_json(r), sampling_report_to_csv(r));
        },
        py::arg("collection"), py::arg("lam"), py::arg("trials"), py::arg("seed"),
        py::arg("cap") = 24);
    m.def(
        "slope_partition_json",
        [](const py::object& p, std::size_t k) {
            return slope_partition_to_json(slope_partition_choice(big(p), k));
        },
        py::arg("p"), py::arg("k"));

    m.def(
        "minimal_vanishing_polynomial_json",
        [](const py::object& field, const std::vector<std::vector<std::string>>& pts) {
            auto f = field_of(field);
            auto [d, poly] = minimal_vanishing_polynomial(point_set_of(f, pts));
            return py::make_tuple(d, polynomial_to_json(poly));
        },
        py::arg("field"), py::arg("points"));
    m.def(
        "vanishing_polynomial_json",
        [](const py::object& field, const std::vector<std::vector<std::string>>& pts,
           long long degree) -> std::optional<std::string> {
            auto f = field_of(field);
            auto g = vanishing_polynomial(point_set_of(f, pts), degree);
            if (!g) return std::nullopt;
            return polynomial_to_json(*g);
        },
        py::arg("field"), py::arg("points"), py::arg("degree"));
    m.def(
        "gradient_json",
        [](const py::object& field, const std::string& poly) {
            auto f = field_of(field);
            std::vector<std::string> out;
            for (const auto& g : gradient(polynomial_from_json(f, poly)))
                out.push_back(polynomial_to_json(g));
            return out;
        },
        py::arg("field"), py::arg("poly"));
    m.def(
        "evaluate",
        [](const py::object& field, const std::string& poly,
           const std::vector<std::string>& point) {
            auto f = field_of(field);
            std::vector<FieldElement> coords;
            coords.reserve(point.size());
            for (const auto& s : point) coords.push_back(f.parse(s));
            return polynomial_from_json(f, poly).evaluate(coords).str();
        },
        py::arg("field"), py::arg("poly"), py::arg("point"));
}
