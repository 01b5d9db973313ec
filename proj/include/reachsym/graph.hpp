#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reachsym {

/// Dense node index, contiguous in 0..n-1.
using NodeIndex = std::uint32_t;

struct DirectedEdge {
  NodeIndex src;
  NodeIndex dst;
  double weight = 1.0;
};

/// Bijection between string labels and dense indices. Indices are handed out
/// in first-appearance order.
class NodeInterner {
 public:
  NodeIndex intern(std::string_view label);
  std::optional<NodeIndex> find(std::string_view label) const;

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::vector<std::string> release() && { return std::move(labels_); }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeIndex> index_;
};

/// Immutable sparse directed graph with sorted forward and reverse adjacency
/// (CSR). Self-loops are dropped and duplicate edges collapsed on
/// construction: weights are summed for weighted graphs, and unweighted
/// graphs keep unit multiplicity.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  DirectedGraph(std::vector<std::string> labels, std::vector<DirectedEdge> edges,
                bool weighted);

  std::size_t num_nodes() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return out_targets_.size(); }
  bool weighted() const noexcept { return weighted_; }
  std::size_t self_loops_dropped() const noexcept { return self_loops_dropped_; }

  std::span<const NodeIndex> successors(NodeIndex u) const {
    return {out_targets_.data() + out_offsets_[u],
            out_targets_.data() + out_offsets_[u + 1]};
  }
  std::span<const NodeIndex> predecessors(NodeIndex v) const {
    return {in_sources_.data() + in_offsets_[v],
            in_sources_.data() + in_offsets_[v + 1]};
  }
  /// Weights parallel to successors(u); all 1.0 for unweighted graphs.
  std::span<const double> successor_weights(NodeIndex u) const {
    return {out_weights_.data() + out_offsets_[u],
            out_weights_.data() + out_offsets_[u + 1]};
  }
  std::span<const double> predecessor_weights(NodeIndex v) const {
    return {in_weights_.data() + in_offsets_[v],
            in_weights_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(NodeIndex u) const {
    return out_offsets_[u + 1] - out_offsets_[u];
  }
  std::size_t in_degree(NodeIndex v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }
  /// Weight of (u, v), or 0 when the edge is absent.
  double edge_weight(NodeIndex u, NodeIndex v) const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(NodeIndex u) const { return labels_[u]; }
  /// Linear scan; build a map for bulk lookups.
  std::optional<NodeIndex> find(std::string_view label) const;

  std::vector<DirectedEdge> edges() const;
  /// Same nodes and labels with every edge flipped.
  DirectedGraph reversed() const;

 private:
  std::vector<std::string> labels_;
  bool weighted_ = false;
  std::size_t self_loops_dropped_ = 0;

  std::vector<std::size_t> out_offsets_{0};
  std::vector<NodeIndex> out_targets_;
  std::vector<double> out_weights_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<NodeIndex> in_sources_;
  std::vector<double> in_weights_;
};

/// Undirected edge in canonical order (u < v) with positive weight.
struct UndirectedEdge {
  NodeIndex u;
  NodeIndex v;
  double weight;

  friend bool operator==(const UndirectedEdge&, const UndirectedEdge&) = default;
};

/// Weighted undirected graph, edges sorted by (u, v), at most one edge per
/// unordered pair.
struct UndirectedWeightedGraph {
  std::vector<std::string> labels;
  std::vector<UndirectedEdge> edges;

  std::size_t num_nodes() const noexcept { return labels.size(); }
  /// Weight of the unordered pair, 0 when absent. O(log m).
  double weight(NodeIndex a, NodeIndex b) const;
  /// Sort by (u, v); throws ValidationError on a non-canonical, duplicate,
  /// or non-positive edge.
  void canonicalize();
};

}  // namespace reachsym
