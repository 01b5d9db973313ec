#include "reachsym/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "reachsym/errors.hpp"

namespace reachsym {
namespace {

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool is_blank(std::string_view s) {
  return s.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

DirectedGraph load_edge_list(std::istream& in, bool weighted) {
  NodeInterner interner;
  std::vector<DirectedEdge> edges;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (is_blank(line) || line.front() == '#') continue;

    auto fields = split_tabs(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw ParseError(line_no, "expected src<TAB>dst[<TAB>weight], got " +
                                    std::to_string(fields.size()) + " field(s)");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw ParseError(line_no, "empty node label");
    }
    double w = 1.0;
    if (weighted) {
      if (fields.size() < 3) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": weighted input but weight column missing");
      }
      std::string_view text = fields[2];
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw ParseError(line_no, "weight is not a number: '" + std::string(text) + "'");
      }
      if (!std::isfinite(w) || w <= 0.0) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": weight must be finite and > 0");
      }
    }
    NodeIndex u = interner.intern(fields[0]);
    NodeIndex v = interner.intern(fields[1]);
    edges.push_back({u, v, w});
  }
  if (in.bad()) throw IoError("read failure on edge list");
  return DirectedGraph(std::move(interner).release(), std::move(edges), weighted);
}

DirectedGraph load_edge_list_file(const std::string& path, bool weighted) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_edge_list(in, weighted);
}

std::string format_weight(double w, int precision) {
  char buf[64];
  int len = std::snprintf(buf, sizeof buf, "%.*f", precision, w);
  if (len < 0 || static_cast<std::size_t>(len) >= sizeof buf) {
    std::string big(static_cast<std::size_t>(len > 0 ? len : 512) + 1, '\0');
    len = std::snprintf(big.data(), big.size(), "%.*f", precision, w);
    big.resize(static_cast<std::size_t>(len));
    return big;
  }
  return std::string(buf, static_cast<std::size_t>(len));
}

void write_undirected(const UndirectedWeightedGraph& g, std::ostream& out, int precision) {
  if (precision < 0) throw ValidationError("precision must be >= 0");
  std::vector<const UndirectedEdge*> order;
  order.reserve(g.edges.size());
  for (const auto& e : g.edges) order.push_back(&e);
  auto by_pair = [](const UndirectedEdge* a, const UndirectedEdge* b) {
    return a->u != b->u ? a->u < b->u : a->v < b->v;
  };
  if (!std::is_sorted(order.begin(), order.end(), by_pair)) {
    std::sort(order.begin(), order.end(), by_pair);
  }
  std::string line;
  for (const UndirectedEdge* ep : order) {
    const UndirectedEdge& e = *ep;
    line.clear();
    line += g.labels[e.u];
    line += '\t';
    line += g.labels[e.v];
    line += '\t';
    line += format_weight(e.weight, precision);
    line += '\n';
    out.write(line.data(), static_cast<std::streamsize>(line.size()));
  }
  out.flush();
  if (!out) throw IoError("write failure on undirected edge list");
}

}  // namespace reachsym
