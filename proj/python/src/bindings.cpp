#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weakunits/drivers.hpp"
#include "weakunits/generators.hpp"
#include "weakunits/units.hpp"

namespace py = pybind11;
using namespace weakunits;

namespace {

struct Model {
    ModelPtr m;
};

DriverOptions opts(std::uint64_t seed, bool all_choices, std::size_t budget, bool allow_invalid,
                   std::optional<std::size_t> unit = std::nullopt) {
    DriverOptions o;
    o.seed = seed;
    o.all_choices = all_choices;
    o.budget = budget;
    o.allow_invalid = allow_invalid;
    o.unit = unit;
    return o;
}

std::string dump(const Certificate& c) { return c.to_json().dump(); }

}  // namespace

PYBIND11_MODULE(_weakunits, mod) {
    py::register_exception<StructuralError>(mod, "StructuralError", PyExc_ValueError);
    py::register_exception<BoundaryError>(mod, "BoundaryError", PyExc_ValueError);
    py::register_exception<UniquenessError>(mod, "UniquenessError", PyExc_ArithmeticError);
    py::register_exception<CertificationError>(mod, "CertificationError", PyExc_ArithmeticError);

    py::class_<Model>(mod, "Model")
        .def_property_readonly("name", [](const Model& x) { return x.m->name(); })
        .def_property_readonly("objects", [](const Model& x) { return x.m->object_count(); })
        .def_property_readonly("one_cells", [](const Model& x) { return x.m->one_cell_count(); })
        .def_property_readonly("two_cells", [](const Model& x) { return x.m->two_cell_count(); })
        .def("to_json", [](const Model& x) { return tables_to_json(x.m->tables()).dump(1); })
        .def("hash", [](const Model& x) { return model_hash(x.m->tables()); })
        .def("__repr__", [](const Model& x) {
            return "<Model " + x.m->name() + " " + std::to_string(x.m->object_count()) + "/" +
                   std::to_string(x.m->one_cell_count()) + "/" + std::to_string(x.m->two_cell_count()) + ">";
        });

    mod.def("builtin_names", &builtin_model_names);
    mod.def("builtin", [](const std::string& kind) {
        return Model{std::make_shared<const TwoCategoryModel>(make_builtin(kind))};
    });
    mod.def("monoid", [](const std::vector<std::vector<int>>& table, const std::string& name) {
        return Model{std::make_shared<const TwoCategoryModel>(make_semigroup_model(table, name))};
    }, py::arg("table"), py::arg("name") = "monoid");
    mod.def("model_from_json", [](const std::string& text) {
        return Model{std::make_shared<const TwoCategoryModel>(model_from_json(json::parse(text)))};
    });

    mod.def("validate", [](const Model& x) { return dump(run_validate(x.m->tables())); });
    mod.def("find_units", [](const Model& x, bool allow_invalid) {
        return dump(run_find_units(x.m, opts(0, false, 1u << 16, allow_invalid)));
    }, py::arg("model"), py::arg("allow_invalid") = false);
    mod.def("synth", [](const Model& x, std::uint64_t seed, bool all_choices, std::size_t budget,
                        std::optional<std::size_t> unit, bool allow_invalid) {
        return dump(run_synth(x.m, opts(seed, all_choices, budget, allow_invalid, unit)));
    }, py::arg("model"), py::arg("seed") = 0, py::arg("all_choices") = false, py::arg("budget") = 1u << 16,
       py::arg("unit") = py::none(), py::arg("allow_invalid") = false);
    mod.def("verify", [](const Model& x, const std::string& theorem, std::uint64_t seed, bool all_choices,
                         std::size_t budget, bool allow_invalid) {
        py::gil_scoped_release nogil;
        return dump(run_verify(x.m, theorem, opts(seed, all_choices, budget, allow_invalid)));
    }, py::arg("model"), py::arg("theorem"), py::arg("seed") = 0, py::arg("all_choices") = false,
       py::arg("budget") = 1u << 16, py::arg("allow_invalid") = false);
    mod.def("recheck", [](const std::string& cert) {
        auto r = recheck_certificate(json::parse(cert));
        return py::make_tuple(r.ok, r.equations, r.mismatches);
    });
}
