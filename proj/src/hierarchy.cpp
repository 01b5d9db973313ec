#include "reachsym/hierarchy.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "reachsym/condensation.hpp"
#include "reachsym/errors.hpp"
#include "reachsym/io.hpp"

namespace reachsym {

HierarchyScores::HierarchyScores(std::vector<double> scores) : scores_(std::move(scores)) {
  for (double s : scores_) {
    if (!std::isfinite(s) || s < 0.0 || s > 1.0) {
      throw ValidationError("hierarchy score outside [0, 1]");
    }
  }
}

HierarchyScores auto_hierarchy(const DirectedGraph& g) {
  Condensation c = condensation(g);
  // Ids are topologically ordered, so one forward sweep relaxes every edge
  // after its source is final.
  std::vector<std::uint32_t> depth(c.num_components(), 0);
  for (std::uint32_t s = 0; s < c.num_components(); ++s) {
    for (std::uint32_t t : c.dag_successors[s]) depth[t] = std::max(depth[t], depth[s] + 1);
  }
  std::uint32_t max_depth = 0;
  for (auto d : depth) max_depth = std::max(max_depth, d);

  std::vector<double> scores(g.num_nodes(), 0.0);
  if (max_depth > 0) {
    for (std::size_t v = 0; v < scores.size(); ++v) {
      scores[v] = static_cast<double>(depth[c.component[v]]) / max_depth;
    }
  }
  return HierarchyScores(std::move(scores));
}

HierarchyScores load_hierarchy(std::istream& in, const DirectedGraph& g,
                               std::vector<std::string>* unknown_labels) {
  std::unordered_map<std::string_view, NodeIndex> index;
  index.reserve(g.num_nodes());
  for (NodeIndex u = 0; u < g.num_nodes(); ++u) index.emplace(g.label(u), u);

  std::vector<double> raw(g.num_nodes(), 0.0);
  std::vector<bool> seen(g.num_nodes(), false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw ParseError(line_no, "expected label<TAB>score");
    }
    std::string_view label(line.data(), tab);
    std::string_view text(line.data() + tab + 1, line.size() - tab - 1);
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
      throw ParseError(line_no, "score is not a finite number: '" + std::string(text) + "'");
    }
    auto it = index.find(label);
    if (it == index.end()) {
      if (unknown_labels) unknown_labels->emplace_back(label);
      continue;
    }
    if (seen[it->second]) {
      throw ValidationError("hierarchy score given twice for '" + std::string(label) + "'");
    }
    seen[it->second] = true;
    raw[it->second] = value;
  }
  if (in.bad()) throw IoError("read failure on hierarchy file");

  std::string missing;
  std::size_t num_missing = 0;
  for (NodeIndex u = 0; u < g.num_nodes(); ++u) {
    if (seen[u]) continue;
    if (num_missing < 20) missing += (num_missing ? ", " : "") + g.label(u);
    ++num_missing;
  }
  if (num_missing > 0) {
    if (num_missing > 20) missing += ", ...";
    throw ValidationError("missing hierarchy score for " + std::to_string(num_missing) +
                          " node(s): " + missing);
  }

  if (raw.empty()) return HierarchyScores{};
  auto [lo, hi] = std::minmax_element(raw.begin(), raw.end());
  const double min = *lo;
  const double span = *hi - *lo;
  std::vector<double> scores(raw.size(), 0.0);
  if (span > 0.0) {
    for (std::size_t i = 0; i < raw.size(); ++i) {
      scores[i] = std::clamp((raw[i] - min) / span, 0.0, 1.0);
    }
  }
  return HierarchyScores(std::move(scores));
}

void write_hierarchy(const HierarchyScores& h, const std::vector<std::string>& labels,
                     std::ostream& out, int precision) {
  for (NodeIndex u = 0; u < h.size(); ++u) {
    out << labels[u] << '\t' << format_weight(h[u], precision) << '\n';
  }
  out.flush();
  if (!out) throw IoError("write failure on hierarchy scores");
}

}  // namespace reachsym
