#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "slab/commands.hpp"

namespace py = pybind11;
using namespace slab;

namespace {

Document load(const std::string& text) { return parse_document(text); }

}  // namespace

PYBIND11_MODULE(_slab, m) {
    m.doc() = "Block algebras, block spaces and the checks between them";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            PyObject* type = parse_error.ptr();
            py::object exc = py::reinterpret_steal<py::object>(PyObject_CallFunction(type, "s", e.what()));
            exc.attr("line") = e.line;
            exc.attr("column") = e.column;
            PyErr_SetObject(type, exc.ptr());
        } catch (const ReportError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    py::class_<ReportVerdict>(m, "Verdict")
        .def_readonly("theorem", &ReportVerdict::theorem)
        .def_readonly("geo", &ReportVerdict::geo)
        .def_readonly("alg", &ReportVerdict::alg)
        .def_readonly("asserted", &ReportVerdict::asserted)
        .def_readonly("witness", &ReportVerdict::witness)
        .def_readonly("note", &ReportVerdict::note)
        .def_property_readonly("agree", &ReportVerdict::agree);

    py::class_<ReportCondition>(m, "Condition")
        .def_readonly("name", &ReportCondition::name)
        .def_readonly("passed", &ReportCondition::pass)
        .def_readonly("witness", &ReportCondition::witness)
        .def_readonly("note", &ReportCondition::note);

    py::class_<ReportCase>(m, "Case")
        .def_readonly("id", &ReportCase::id)
        .def_readonly("dsl", &ReportCase::dsl)
        .def_readonly("verdicts", &ReportCase::verdicts)
        .def_readonly("conditions", &ReportCase::conditions);

    py::class_<ReportTally>(m, "Tally")
        .def_readonly("check", &ReportTally::check)
        .def_readonly("cases", &ReportTally::cases)
        .def_readonly("failures", &ReportTally::failures)
        .def_readonly("witness", &ReportTally::witness);

    py::class_<Report>(m, "Report")
        .def_readonly("meta", &Report::meta)
        .def_readonly("cases", &Report::cases)
        .def_readonly("tallies", &Report::tallies)
        .def_property_readonly("disagreements", &Report::disagreements)
        .def_property_readonly("ok", &Report::ok)
        .def("machine", [](const Report& r) { return render_machine(r); })
        .def("text", [](const Report& r) { return render_text(r); })
        .def("dsl_text", &Report::dsl_text)
        .def("__eq__", [](const Report& a, const Report& b) { return a == b; });

    m.def("normalize", [](const std::string& text) { return print_document(normalize(load(text))); },
          "Parse a .slab document and print it in normal form.");
    m.def("names", [](const std::string& text) {
        std::vector<std::string> out;
        for (const Decl& d : load(text).decls) out.push_back(d.name);
        return out;
    });
    m.def("dualize", [](const std::string& text, const std::string& name) { return cmd_dualize(load(text), name); },
          py::arg("text"), py::arg("name"));
    m.def("check", [](const std::string& text, const std::string& name, const std::string& condition) {
        return cmd_check(load(text), name, condition);
    }, py::arg("text"), py::arg("name"), py::arg("condition") = "all");
    m.def("verify", [](const std::string& text, const std::string& theorem, const std::string& map) {
        return cmd_verify(load(text), theorem, map);
    }, py::arg("text"), py::arg("theorem"), py::arg("map"));
    m.def("fuzz", [](std::uint64_t seed, std::size_t count, std::size_t max_blocks) {
        FuzzOptions o;
        o.seed = seed;
        o.count = count;
        o.max_blocks = max_blocks;
        py::gil_scoped_release release;
        return cmd_fuzz(o);
    }, py::arg("seed") = 42, py::arg("count") = 500, py::arg("max_blocks") = 4);
    m.def("contact_sweep", [](unsigned n_max, unsigned lemma_n_max) {
        py::gil_scoped_release release;
        return cmd_contact_sweep(n_max, lemma_n_max);
    }, py::arg("n_max") = 4, py::arg("lemma_n_max") = 5);
    m.def("parse_report", &parse_report);
    m.def("theorem_ids", &theorem_ids);
}
