#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bnscope/andnet.hpp"
#include "bnscope/andnet_analysis.hpp"
#include "bnscope/constructions.hpp"
#include "bnscope/dynamics.hpp"
#include "bnscope/expr.hpp"
#include "bnscope/interaction.hpp"
#include "bnscope/report.hpp"
#include "bnscope/transform.hpp"
#include "bnscope/verify.hpp"

namespace py = pybind11;
using namespace bnscope;

namespace {

// Edges as (from, to, sign) with sign in {+1, -1}.
std::vector<std::tuple<int, int, int>> edge_tuples(const SignedDigraph& g) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.from, e.to, to_int(e.sign));
  return out;
}

SignFilter parse_filter(const std::string& s) {
  if (s == "all") return SignFilter::All;
  if (s == "pos") return SignFilter::Positive;
  if (s == "neg") return SignFilter::Negative;
  throw py::value_error("sign filter must be 'all', 'pos' or 'neg'");
}

py::dict report_dict(const VerifyReport& r) {
  py::list checks;
  for (const auto& c : r.checks) {
    py::dict d;
    d["claim"] = c.claim;
    d["passed"] = c.passed;
    d["detail"] = c.detail;
    checks.append(d);
  }
  py::dict d;
  d["name"] = r.name;
  d["passed"] = r.passed();
  d["checks"] = checks;
  return d;
}

}  // namespace

PYBIND11_MODULE(_bnscope, m) {
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DimensionError>(m, "DimensionError", PyExc_ValueError);
  py::register_exception<NotAnAndNet>(m, "NotAnAndNet", PyExc_ValueError);
  py::register_exception<LoopError>(m, "LoopError", PyExc_ValueError);

  py::class_<BooleanNetwork>(m, "BooleanNetwork")
      .def(py::init<int, std::vector<Word>, bool>(), py::arg("n"), py::arg("images"), py::arg("force") = false)
      .def_property_readonly("n", &BooleanNetwork::dimension)
      .def_property_readonly("images", &BooleanNetwork::images)
      .def("__call__", &BooleanNetwork::image)
      .def("__len__", &BooleanNetwork::size)
      .def("__eq__", [](const BooleanNetwork& a, const BooleanNetwork& b) { return a == b; })
      .def("__repr__", [](const BooleanNetwork& f) { return "<BooleanNetwork n=" + std::to_string(f.dimension()) + ">"; })
      .def("__str__", &render_network);

  py::class_<AndNet>(m, "AndNet")
      .def_readonly("n", &AndNet::n)
      .def("edges", [](const AndNet& a) { return edge_tuples(a.graph()); })
      .def("network", [](const AndNet& a) { return andnet_to_network(a); })
      .def("__eq__", [](const AndNet& a, const AndNet& b) { return a == b; })
      .def("__str__", &render_andnet);

  py::class_<Attractor>(m, "Attractor")
      .def_readonly("states", &Attractor::states)
      .def_readonly("is_fixed_point", &Attractor::is_fixed_point)
      .def_readonly("is_cyclic", &Attractor::is_cyclic)
      .def_readonly("is_attractive_cycle", &Attractor::is_attractive_cycle)
      .def_readonly("is_antipodal", &Attractor::is_antipodal);

  m.def("parse_network", [](const std::string& text, bool force) { return parse_network(text, force); },
        py::arg("text"), py::arg("force") = false);
  m.def("render_network", &render_network);
  m.def("parse_andnet", [](const std::string& text) { return parse_andnet(text); });
  m.def("render_andnet", &render_andnet);
  m.def("network_to_andnet", &network_to_andnet);
  m.def("random_andnet", &random_andnet, py::arg("n"), py::arg("seed"), py::arg("density") = 0.5);
  m.def("to_bitstring", py::overload_cast<Word, int>(&to_bitstring));

  m.def("fixed_points", &fixed_points);
  m.def("attractors", &attractors);
  m.def("attractive_cycles", [](const BooleanNetwork& f) {
    std::vector<std::vector<Word>> out;
    for (const auto& c : attractive_cycles(f)) out.push_back(c.states);
    return out;
  });
  m.def("is_nonexpansive", &is_nonexpansive);

  m.def("jacobian", [](const BooleanNetwork& f, Word x) {
    const JacobianMatrix j = jacobian(f, x);
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(j.n), std::vector<int>(static_cast<std::size_t>(j.n)));
    for (int i = 0; i < j.n; ++i) {
      for (int k = 0; k < j.n; ++k) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = j.entry(i, k);
    }
    return rows;
  });
  m.def("local_graph_edges", [](const BooleanNetwork& f, Word x) { return edge_tuples(local_graph(f, x)); });
  m.def("global_graph_edges", [](const BooleanNetwork& f) { return edge_tuples(global_graph(f)); });
  m.def(
      "local_cycles",
      [](const BooleanNetwork& f, const std::string& filter) {
        py::list out;
        for (const auto& lc : local_cycles(f, parse_filter(filter))) {
          py::dict d;
          d["vertices"] = lc.cycle.vertices;
          std::vector<int> signs;
          for (Sign s : lc.cycle.signs) signs.push_back(to_int(s));
          d["signs"] = signs;
          d["sign"] = to_int(lc.cycle.sign);
          d["witness"] = lc.witness;
          out.append(d);
        }
        return out;
      },
      py::arg("f"), py::arg("filter") = "all");

  m.def("reduce", [](const BooleanNetwork& f, int k) {
    const Reduction r = reduce(f, k);
    return py::make_tuple(r.network, r.renumber);
  });
  m.def("analyze_json", [](const BooleanNetwork& f) { return analyze(f, AnalysisOptions{}).to_json(false); });

  m.def("cyclic_example_network", &cyclic_example_network);
  m.def("negative_seed_andnet", &negative_seed_andnet);
  m.def("fixed_point_free_andnet", &fixed_point_free_andnet);
  m.def("padded_cycle_network", &padded_cycle_network);
  m.def("pure_antipodal_network", &pure_antipodal_network);

  m.def("verify_fixed_point_free_construction", [] { return report_dict(verify_fixed_point_free_construction()); });
  m.def("verify_kernel_free_digraph", [] { return report_dict(verify_kernel_free_digraph()); });
  m.def("verify_padded_cycle", [](const std::vector<int>& ns) { return report_dict(verify_padded_cycle(ns)); });
  m.def("verify_sign_parity", [](int samples, std::uint64_t seed) {
    return report_dict(verify_sign_parity(samples, seed));
  });
  m.def("verify_isometries", [] { return report_dict(verify_isometries()); });
}
