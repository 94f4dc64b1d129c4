#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "adqec/analysis.hpp"
#include "adqec/channel.hpp"
#include "adqec/codeset.hpp"
#include "adqec/recovery.hpp"
#include "adqec/search.hpp"

namespace py = pybind11;
using namespace adqec;

namespace {

CodeSet code_from_words(int n, const std::string& mode_s, const std::vector<std::string>& words) {
    auto mode = conflict_mode_from_string(mode_s);
    if (!mode) throw py::value_error("mode must be 'strict' or 'literal'");
    CodeSet s;
    s.n = n;
    s.mode = *mode;
    for (const auto& ws : words) {
        CodeWord w = CodeWord::from_string(ws);
        if (w.n != n) throw py::value_error("word length does not match n");
        s.words.push_back(w.bits);
    }
    std::sort(s.words.begin(), s.words.end());
    return s;
}

std::vector<std::string> code_words(const CodeSet& s) {
    std::vector<std::string> out;
    for (uint32_t w : s.words) out.push_back(CodeWord(w, s.n).to_string());
    return out;
}

}  // namespace

PYBIND11_MODULE(_adqec, m) {
    m.doc() = "Self-complementary amplitude-damping code toolkit";

    py::class_<CodeSet>(m, "CodeSet")
        .def(py::init(&code_from_words), py::arg("n"), py::arg("mode"), py::arg("words"))
        .def_static("from_json", &CodeSet::from_json)
        .def("to_json", &CodeSet::to_json)
        .def_property_readonly("n", [](const CodeSet& s) { return s.n; })
        .def_property_readonly("mode", [](const CodeSet& s) { return to_string(s.mode); })
        .def_property_readonly("words", &code_words);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_property_readonly("valid", &ValidationReport::valid)
        .def_readonly("k", &ValidationReport::k)
        .def("summary", &ValidationReport::summary);

    py::class_<SearchResult>(m, "SearchResult")
        .def_readonly("code", &SearchResult::code)
        .def_readonly("k", &SearchResult::k)
        .def_readonly("optimal", &SearchResult::optimal)
        .def_readonly("elapsed_seconds", &SearchResult::elapsed_seconds);

    py::class_<RecoveryReport>(m, "RecoveryReport")
        .def_property_readonly("ok", &RecoveryReport::pass)
        .def_readonly("max_gram_deviation", &RecoveryReport::max_gram_deviation)
        .def_readonly("max_tp_deviation", &RecoveryReport::max_tp_deviation);

    m.def(
        "conflicts",
        [](const std::string& u, const std::string& v, const std::string& mode_s) {
            auto mode = conflict_mode_from_string(mode_s);
            if (!mode) throw py::value_error("mode must be 'strict' or 'literal'");
            return conflicts(CodeWord::from_string(u), CodeWord::from_string(v), *mode);
        },
        py::arg("u"), py::arg("v"), py::arg("mode") = "strict");
    m.def("validate_code_set", &validate_code_set);
    m.def("quantum_hamming_bound", &quantum_hamming_bound, py::arg("n"), py::arg("k_qubits"),
          py::arg("t"), py::arg("a"));
    m.def(
        "search",
        [](int n, const std::string& mode_s, const std::string& strategy_s, double budget) {
            SearchConfig config;
            config.n = n;
            auto mode = conflict_mode_from_string(mode_s);
            auto strategy = search_strategy_from_string(strategy_s);
            if (!mode || !strategy) throw py::value_error("bad mode or strategy");
            config.mode = *mode;
            config.strategy = *strategy;
            config.time_budget_seconds = budget;
            return run_search(config);
        },
        py::arg("n"), py::arg("mode") = "strict", py::arg("strategy") = "greedy-lex",
        py::arg("budget") = 60.0);
    m.def("code_fidelity", &code_fidelity, py::arg("code"), py::arg("gamma"));
    m.def("bare_fidelity", &bare_fidelity, py::arg("m"), py::arg("gamma"));
    m.def(
        "verify_recovery",
        [](const CodeSet& code, double gamma) { return verify_recovery(build_recovery(code, gamma)); },
        py::arg("code"), py::arg("gamma"));
    m.def(
        "max_first_order_residual",
        [](const CodeSet& code) { return first_order_residuals(code).max_abs_a1(); },
        py::arg("code"));
}
