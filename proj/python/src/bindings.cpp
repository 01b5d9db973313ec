#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "reachsym/errors.hpp"
#include "reachsym/hierarchy.hpp"
#include "reachsym/io.hpp"
#include "reachsym/reachability.hpp"
#include "reachsym/symmetrize.hpp"

namespace py = pybind11;
using namespace reachsym;

namespace {

using DepthArg = std::variant<unsigned, std::string>;
using HierarchyArg = std::variant<std::monostate, std::string, std::map<std::string, double>>;

Depth to_depth(const DepthArg& d) {
  if (const auto* hops = std::get_if<unsigned>(&d)) return Depth::bounded(*hops);
  return Depth::parse(std::get<std::string>(d));
}

DirectedGraph from_edges(const std::vector<py::tuple>& rows, bool weighted) {
  NodeInterner names;
  std::vector<DirectedEdge> edges;
  edges.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != 2 && row.size() != 3) {
      throw ValidationError("edges must be (src, dst) or (src, dst, weight) tuples");
    }
    const NodeIndex src = names.intern(row[0].cast<std::string>());
    const NodeIndex dst = names.intern(row[1].cast<std::string>());
    double w = 1.0;
    if (weighted) {
      if (row.size() != 3) throw ValidationError("weighted graph needs a weight on every edge");
      w = row[2].cast<double>();
    }
    edges.push_back({src, dst, w});
  }
  return DirectedGraph(std::move(names).release(), std::move(edges), weighted);
}

DirectedGraph parse_edge_list(const std::string& text, bool weighted) {
  std::istringstream in(text);
  return load_edge_list(in, weighted);
}

HierarchyScores scores_from_map(const DirectedGraph& g, const std::map<std::string, double>& raw) {
  std::ostringstream text;
  char buf[32];
  for (const auto& [label, score] : raw) {
    std::snprintf(buf, sizeof buf, "%.17g", score);
    text << label << '\t' << buf << '\n';
  }
  std::istringstream in(text.str());
  return load_hierarchy(in, g);
}

std::vector<std::tuple<std::string, std::string, double>> labeled(const UndirectedWeightedGraph& u) {
  std::vector<std::tuple<std::string, std::string, double>> out;
  out.reserve(u.edges.size());
  for (const auto& e : u.edges) out.emplace_back(u.labels[e.u], u.labels[e.v], e.weight);
  return out;
}

std::map<std::string, double> scores_by_label(const HierarchyScores& h, const DirectedGraph& g) {
  std::map<std::string, double> out;
  for (NodeIndex u = 0; u < g.num_nodes(); ++u) out[g.label(u)] = h[u];
  return out;
}

}  // namespace

PYBIND11_MODULE(_reachsym, m) {
  m.doc() = "Reachability-based symmetrization of directed graphs";

  auto base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  py::class_<DirectedGraph>(m, "DirectedGraph")
      .def_static("from_edges", &from_edges, py::arg("edges"), py::arg("weighted") = false,
                  "Build from (src, dst) or (src, dst, weight) label tuples.")
      .def_static("parse", &parse_edge_list, py::arg("text"), py::arg("weighted") = false,
                  "Parse a TSV edge list held in a string.")
      .def_static("read", &load_edge_list_file, py::arg("path"), py::arg("weighted") = false)
      .def_property_readonly("num_nodes", &DirectedGraph::num_nodes)
      .def_property_readonly("num_edges", &DirectedGraph::num_edges)
      .def_property_readonly("weighted", &DirectedGraph::weighted)
      .def_property_readonly("self_loops_dropped", &DirectedGraph::self_loops_dropped)
      .def_property_readonly("labels", &DirectedGraph::labels)
      .def("edges",
           [](const DirectedGraph& g) {
             std::vector<std::tuple<std::string, std::string, double>> out;
             for (const auto& e : g.edges()) out.emplace_back(g.label(e.src), g.label(e.dst), e.weight);
             return out;
           })
      .def("__repr__", [](const DirectedGraph& g) {
        return "<DirectedGraph nodes=" + std::to_string(g.num_nodes()) +
               " edges=" + std::to_string(g.num_edges()) + ">";
      });

  py::class_<UndirectedWeightedGraph>(m, "UndirectedGraph")
      .def_property_readonly("num_nodes", &UndirectedWeightedGraph::num_nodes)
      .def_property_readonly("num_edges", [](const UndirectedWeightedGraph& u) { return u.edges.size(); })
      .def_readonly("labels", &UndirectedWeightedGraph::labels)
      .def("edges", &labeled, "(label_u, label_v, weight) per edge, sorted by node index.")
      .def("weight",
           [](const UndirectedWeightedGraph& u, const std::string& a, const std::string& b) {
             NodeInterner names;
             for (const auto& l : u.labels) names.intern(l);
             const auto ia = names.find(a), ib = names.find(b);
             if (!ia || !ib) throw ValidationError("unknown label");
             return u.weight(*ia, *ib);
           })
      .def("to_tsv",
           [](const UndirectedWeightedGraph& u, int precision) {
             std::ostringstream out;
             write_undirected(u, out, precision);
             return out.str();
           },
           py::arg("precision") = kDefaultPrecision)
      .def("__repr__", [](const UndirectedWeightedGraph& u) {
        return "<UndirectedGraph nodes=" + std::to_string(u.num_nodes()) +
               " edges=" + std::to_string(u.edges.size()) + ">";
      });

  m.def(
      "symmetrize",
      [](const DirectedGraph& g, const std::string& method, const DepthArg& depth, double alpha,
         double beta, double gamma, double delta, const HierarchyArg& hierarchy, double epsilon,
         std::optional<std::size_t> top_t, std::optional<std::size_t> hub_cap, unsigned threads) {
        SymmetrizationConfig cfg;
        cfg.method = parse_method(method);
        cfg.depth = to_depth(depth);
        cfg.alpha = alpha;
        cfg.beta = beta;
        cfg.gamma = gamma;
        cfg.delta = delta;
        cfg.epsilon = epsilon;
        cfg.top_t = top_t;
        cfg.hub_cap = hub_cap;
        cfg.threads = threads;
        std::optional<HierarchyScores> h;
        if (const auto* mode = std::get_if<std::string>(&hierarchy)) {
          if (*mode == "auto") {
            cfg.hierarchy = HierarchyMode::kAuto;
            h = auto_hierarchy(g);
          } else if (*mode != "none") {
            throw ValidationError("hierarchy must be None, 'none', 'auto' or a dict of scores");
          }
        } else if (const auto* raw = std::get_if<std::map<std::string, double>>(&hierarchy)) {
          cfg.hierarchy = HierarchyMode::kFile;
          h = scores_from_map(g, *raw);
        }
        py::gil_scoped_release release;
        return symmetrize(g, cfg, h ? &*h : nullptr);
      },
      py::arg("graph"), py::arg("method") = "reach", py::arg("depth") = DepthArg(2u),
      py::arg("alpha") = 0.5, py::arg("beta") = 0.5, py::arg("gamma") = 1.0,
      py::arg("delta") = 1.0, py::arg("hierarchy") = HierarchyArg{}, py::arg("epsilon") = 0.0,
      py::arg("top_t") = std::nullopt, py::arg("hub_cap") = std::nullopt,
      py::arg("threads") = 1u,
      "Symmetrize a directed graph. `depth` is a hop count or 'inf'; `hierarchy` is None, "
      "'auto' or a {label: raw score} dict.");

  m.def(
      "degree_discounted",
      [](const DirectedGraph& g, double alpha, double beta, unsigned threads) {
        py::gil_scoped_release release;
        return degree_discounted(g, alpha, beta, threads);
      },
      py::arg("graph"), py::arg("alpha") = 0.5, py::arg("beta") = 0.5, py::arg("threads") = 1u);

  m.def(
      "bibliometric",
      [](const DirectedGraph& g, unsigned threads) {
        py::gil_scoped_release release;
        return bibliometric(g, threads);
      },
      py::arg("graph"), py::arg("threads") = 1u);

  m.def("sparsify_top_t", &sparsify_top_t, py::arg("graph"), py::arg("t"));

  m.def(
      "local_closure",
      [](const DirectedGraph& g, const DepthArg& depth, unsigned threads) {
        const auto closure = local_closure(g, to_depth(depth), threads);
        std::map<std::string, std::vector<std::string>> out;
        for (NodeIndex u = 0; u < g.num_nodes(); ++u) {
          auto& row = out[g.label(u)];
          for (NodeIndex v : closure.out_reach(u)) row.push_back(g.label(v));
        }
        return out;
      },
      py::arg("graph"), py::arg("depth") = DepthArg(2u), py::arg("threads") = 1u,
      "{label: [labels reachable within depth hops]}.");

  m.def(
      "auto_hierarchy",
      [](const DirectedGraph& g) { return scores_by_label(auto_hierarchy(g), g); },
      py::arg("graph"), "{label: score in [0, 1]} from longest-path depth in the condensation.");
}
