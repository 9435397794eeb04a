// pybind11 bindings exposing the toolkit's main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "icx/caps.hpp"
#include "icx/codes.hpp"
#include "icx/errors.hpp"
#include "icx/graphs.hpp"
#include "icx/instance.hpp"
#include "icx/schemes.hpp"
#include "icx/verify.hpp"

namespace py = pybind11;

namespace {

py::object json_to_py(const nlohmann::json& j) {
    switch (j.type()) {
        case nlohmann::json::value_t::null: return py::none();
        case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(j.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(j.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(j.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(j.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : j) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it) {
                out[py::str(it.key())] = json_to_py(it.value());
            }
            return out;
        }
        default: return py::none();
    }
}

icx::index_code code_from_object(const py::object& obj) {
    if (py::isinstance<py::str>(obj)) {
        return icx::load_code(obj.cast<std::string>());
    }
    py::object dumps = py::module_::import("json").attr("dumps");
    return icx::load_code(dumps(obj).cast<std::string>());
}

py::dict scheme_result_to_py(const icx::scheme_result& r) {
    py::dict out;
    out["scheme"] = r.scheme;
    out["length"] = r.length;
    out["code"] = json_to_py(nlohmann::json::parse(icx::serialize_code(r.code)));
    out["diagnostics"] = json_to_py(r.diagnostics);
    return out;
}

icx::scheme_result dispatch_scheme(const icx::instance& inst,
                                   const std::string& name, const icx::caps& cp) {
    if (name == "cycle") return icx::cycle_cover(inst, cp);
    if (name == "clique") return icx::clique_cover(inst, cp);
    if (name == "local") return icx::local_chromatic_code(inst, cp);
    if (name == "plocal") return icx::partitioned_local_chromatic(inst, cp);
    if (name.rfind("trivial:", 0) == 0) {
        return icx::trivial_partition_scheme(
            inst, icx::parse_base_scheme(name.substr(8)), cp);
    }
    throw icx::parse_error("unknown scheme '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_icx, m) {
    m.doc() = "two-sender unicast index coding toolkit";

    py::register_exception<icx::parse_error>(m, "ParseError", PyExc_ValueError);
    py::register_exception<icx::validation_error>(m, "ValidationError",
                                                  PyExc_ValueError);
    py::register_exception<icx::cap_exceeded>(m, "CapExceeded", PyExc_RuntimeError);

    py::class_<icx::caps>(m, "Caps")
        .def(py::init<>())
        .def_readwrite("mais_cap", &icx::caps::mais_cap)
        .def_readwrite("coloring_cap", &icx::caps::coloring_cap)
        .def_readwrite("partition_cap", &icx::caps::partition_cap)
        .def_readwrite("cycle_budget", &icx::caps::cycle_budget)
        .def_readwrite("oracle_cap", &icx::caps::oracle_cap);

    py::class_<icx::instance>(m, "Instance")
        .def_static("from_json", &icx::load_instance, py::arg("text"))
        .def("to_json", &icx::serialize_instance)
        .def_readonly("n", &icx::instance::n)
        .def_readonly("side_info", &icx::instance::side_info)
        .def_readonly("sender1", &icx::instance::sender1)
        .def_readonly("sender2", &icx::instance::sender2)
        .def("private1", &icx::instance::private1)
        .def("private2", &icx::instance::private2)
        .def("common", &icx::instance::common)
        .def("__eq__",
             [](const icx::instance& a, const icx::instance& b) { return a == b; })
        .def("__repr__", [](const icx::instance& inst) {
            return "<icx.Instance n=" + std::to_string(inst.n) + ">";
        });

    m.def(
        "generate",
        [](int n, double density, const std::string& split, unsigned seed,
           int common) {
            return icx::generate_random_instance(n, density,
                                                 icx::parse_split(split), seed,
                                                 common);
        },
        py::arg("n"), py::arg("density"), py::arg("split"), py::arg("seed"),
        py::arg("common") = 0);

    m.def(
        "analyze",
        [](const icx::instance& inst, bool include_oracle, const icx::caps& cp) {
            return json_to_py(
                icx::to_json(icx::make_bounds_report(inst, include_oracle, cp)));
        },
        py::arg("instance"), py::arg("include_oracle") = false,
        py::arg("caps") = icx::caps{});

    m.def(
        "encode",
        [](const icx::instance& inst, const std::string& scheme,
           const icx::caps& cp) {
            return scheme_result_to_py(dispatch_scheme(inst, scheme, cp));
        },
        py::arg("instance"), py::arg("scheme"), py::arg("caps") = icx::caps{});

    m.def(
        "verify",
        [](const icx::instance& inst, const py::object& code) {
            return json_to_py(
                icx::to_json(icx::verify_code(inst, code_from_object(code))));
        },
        py::arg("instance"), py::arg("code"));

    m.def(
        "oracle",
        [](const icx::instance& inst, int max_length,
           const icx::caps& cp) -> py::object {
            auto value = icx::oracle_beta1_linear(inst, max_length, cp);
            if (!value) return py::none();
            return py::int_(*value);
        },
        py::arg("instance"), py::arg("max_length") = -1,
        py::arg("caps") = icx::caps{});

    m.def(
        "reduce",
        [](const icx::instance& inst) {
            return json_to_py(icx::to_json(icx::reduce_instance(inst)));
        },
        py::arg("instance"));

    m.def(
        "mais",
        [](const icx::instance& inst, const icx::caps& cp) {
            return icx::mais(icx::side_info_digraph(inst), cp.mais_cap);
        },
        py::arg("instance"), py::arg("caps") = icx::caps{});

    m.def(
        "local_chromatic_number",
        [](const icx::instance& inst, const icx::caps& cp) {
            return icx::two_sender_local_chromatic_number(inst, cp);
        },
        py::arg("instance"), py::arg("caps") = icx::caps{});
}
