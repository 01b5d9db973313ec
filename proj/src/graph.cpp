#include "reachsym/graph.hpp"

#include <algorithm>
#include <cmath>

#include "reachsym/errors.hpp"

namespace reachsym {

NodeIndex NodeInterner::intern(std::string_view label) {
  auto [it, inserted] =
      index_.try_emplace(std::string(label), static_cast<NodeIndex>(labels_.size()));
  if (inserted) labels_.emplace_back(label);
  return it->second;
}

std::optional<NodeIndex> NodeInterner::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

namespace {

// Builds one CSR direction from edges already sorted by (key, other).
void build_csr(std::size_t n, const std::vector<DirectedEdge>& sorted, bool by_src,
               std::vector<std::size_t>& offsets, std::vector<NodeIndex>& targets,
               std::vector<double>& weights) {
  offsets.assign(n + 1, 0);
  for (const auto& e : sorted) ++offsets[(by_src ? e.src : e.dst) + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  targets.resize(sorted.size());
  weights.resize(sorted.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const auto& e : sorted) {
    std::size_t& pos = cursor[by_src ? e.src : e.dst];
    targets[pos] = by_src ? e.dst : e.src;
    weights[pos] = e.weight;
    ++pos;
  }
}

}  // namespace

DirectedGraph::DirectedGraph(std::vector<std::string> labels,
                             std::vector<DirectedEdge> edges, bool weighted)
    : labels_(std::move(labels)), weighted_(weighted) {
  const std::size_t n = labels_.size();
  std::vector<DirectedEdge> kept;
  kept.reserve(edges.size());
  for (const auto& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw ValidationError("edge endpoint out of range");
    }
    if (weighted_ && !(std::isfinite(e.weight) && e.weight > 0.0)) {
      throw ValidationError("edge weight must be finite and > 0");
    }
    if (e.src == e.dst) {
      ++self_loops_dropped_;
      continue;
    }
    kept.push_back({e.src, e.dst, weighted_ ? e.weight : 1.0});
  }

  // Stable so duplicate weights are summed in input order.
  std::stable_sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  std::vector<DirectedEdge> unique;
  unique.reserve(kept.size());
  for (const auto& e : kept) {
    if (!unique.empty() && unique.back().src == e.src && unique.back().dst == e.dst) {
      if (weighted_) unique.back().weight += e.weight;
      continue;
    }
    unique.push_back(e);
  }

  build_csr(n, unique, true, out_offsets_, out_targets_, out_weights_);
  std::stable_sort(unique.begin(), unique.end(), [](const auto& a, const auto& b) {
    return a.dst != b.dst ? a.dst < b.dst : a.src < b.src;
  });
  build_csr(n, unique, false, in_offsets_, in_sources_, in_weights_);
}

double DirectedGraph::edge_weight(NodeIndex u, NodeIndex v) const {
  auto succ = successors(u);
  auto it = std::lower_bound(succ.begin(), succ.end(), v);
  if (it == succ.end() || *it != v) return 0.0;
  return successor_weights(u)[static_cast<std::size_t>(it - succ.begin())];
}

std::optional<NodeIndex> DirectedGraph::find(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return static_cast<NodeIndex>(i);
  }
  return std::nullopt;
}

std::vector<DirectedEdge> DirectedGraph::edges() const {
  std::vector<DirectedEdge> out;
  out.reserve(num_edges());
  for (NodeIndex u = 0; u < num_nodes(); ++u) {
    auto succ = successors(u);
    auto w = successor_weights(u);
    for (std::size_t k = 0; k < succ.size(); ++k) out.push_back({u, succ[k], w[k]});
  }
  return out;
}

DirectedGraph DirectedGraph::reversed() const {
  auto es = edges();
  for (auto& e : es) std::swap(e.src, e.dst);
  return DirectedGraph(labels_, std::move(es), weighted_);
}

double UndirectedWeightedGraph::weight(NodeIndex a, NodeIndex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::pair{a, b},
                             [](const UndirectedEdge& e, const std::pair<NodeIndex, NodeIndex>& k) {
                               return e.u != k.first ? e.u < k.first : e.v < k.second;
                             });
  if (it == edges.end() || it->u != a || it->v != b) return 0.0;
  return it->weight;
}

void UndirectedWeightedGraph::canonicalize() {
  std::sort(edges.begin(), edges.end(), [](const auto& x, const auto& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  });
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u >= e.v || e.v >= labels.size()) {
      throw ValidationError("undirected edge is not canonical (u < v < n)");
    }
    if (!(e.weight > 0.0) || !std::isfinite(e.weight)) {
      throw ValidationError("undirected edge weight must be finite and > 0");
    }
    if (i > 0 && edges[i - 1].u == e.u && edges[i - 1].v == e.v) {
      throw ValidationError("duplicate undirected pair");
    }
  }
}

}  // namespace reachsym
