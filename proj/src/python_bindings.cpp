#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diagsemi/bipartition.hpp"
#include "diagsemi/counting.hpp"
#include "diagsemi/enumerate.hpp"
#include "diagsemi/families.hpp"
#include "diagsemi/tables.hpp"
#include "diagsemi/words.hpp"

namespace py = pybind11;
using namespace diagsemi;

namespace {

py::int_ big(const BigNat& v) {
    PyObject* obj = PyLong_FromString(to_string(v).c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

}  // namespace

PYBIND11_MODULE(_diagsemi, mod) {
    mod.doc() = "exact bipartition algebra for diagram monoids";

    py::class_<Bipartition>(mod, "Bipartition")
        .def(py::init([](const std::string& text) { return from_text(text); }))
        .def_property_readonly("k", &Bipartition::degree)
        .def_property_readonly("num_blocks", &Bipartition::num_blocks)
        .def("blocks", &Bipartition::blocks)
        .def("rank", [](const Bipartition& a) { return rank(a); })
        .def("star", [](const Bipartition& a) { return star(a); })
        .def("is_planar", [](const Bipartition& a) { return is_planar(a); })
        .def("is_modular",
             [](const Bipartition& a, int m) { return is_modular(a, m); })
        .def("to_json", [](const Bipartition& a) { return to_json(a); })
        .def("__mul__", [](const Bipartition& a,
                           const Bipartition& b) { return product(a, b); })
        .def("__add__", [](const Bipartition& a,
                           const Bipartition& b) { return hsum(a, b); })
        .def("__eq__", [](const Bipartition& a,
                          const Bipartition& b) { return a == b; })
        .def("__hash__",
             [](const Bipartition& a) { return std::hash<Bipartition>{}(a); })
        .def("__str__", [](const Bipartition& a) { return to_text(a); })
        .def("__repr__", [](const Bipartition& a) {
            return "Bipartition(\"" + to_text(a) + "\")";
        });

    mod.def("identity", &identity);
    mod.def("from_blocks", &make_bipartition);
    mod.def("from_json", &from_json);
    mod.def("member", [](const std::string& family, const Bipartition& a) {
        return member(family_from_string(family), a);
    });
    mod.def("generating_set", [](const std::string& family, int k) {
        return generating_set(family_from_string(family), k);
    });
    mod.def("close", [](const std::string& family, int k) {
        return close(k, generating_set(family_from_string(family), k)).elements;
    });
    mod.def("close_count", [](const std::string& family, int k) {
        return close(k, generating_set(family_from_string(family), k))
            .elements.size();
    });
    mod.def("family_cardinality", [](const std::string& family, int k) {
        return big(family_cardinality(family_from_string(family), k));
    });

    mod.def("pm_card", [](int m, int k) { return big(pm_card(m, k)); });
    mod.def("mod_card", [](int m, int k) { return big(mod_card(m, k)); });
    mod.def("apsis_card", [](int m, int k) { return big(apsis_card(m, k)); });
    mod.def("xapsis_card",
            [](int m, int k) { return big(xapsis_card(m, k)); });
    mod.def("bell", [](int n) { return big(bell(n)); });
    mod.def("catalan", [](int n) { return big(catalan(n)); });
    mod.def("fibonacci", [](int n) { return big(fibonacci(n)); });

    mod.def("table_names", &table_names);
    mod.def("render_table", &render_table);

    mod.def("eval_word", [](int k, const std::string& word) {
        return eval(k, parse_word(word));
    });
}
