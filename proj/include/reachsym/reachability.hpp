#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "reachsym/graph.hpp"

namespace reachsym {

/// BFS depth bound: a positive hop count or unbounded (exact transitive
/// closure).
class Depth {
 public:
  /// Throws ValidationError when `hops` is 0.
  static Depth bounded(std::uint32_t hops);
  static constexpr Depth unbounded() { return Depth(kUnbounded); }
  /// Accepts a positive integer or "inf".
  static Depth parse(const std::string& text);

  bool is_unbounded() const noexcept { return hops_ == kUnbounded; }
  std::uint32_t hops() const noexcept { return hops_; }
  std::string to_string() const;

  friend bool operator==(Depth, Depth) = default;

 private:
  static constexpr std::uint32_t kUnbounded = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit Depth(std::uint32_t hops) : hops_(hops) {}
  std::uint32_t hops_;
};

enum class Direction { kOut, kIn };

/// Nodes joined to `source` by a directed path of length 1..depth (following
/// edges forward for kOut, backward for kIn), sorted ascending. `source`
/// itself is included only when it lies on a cycle of length <= depth.
std::vector<NodeIndex> bfs_bounded(const DirectedGraph& g, NodeIndex source, Depth depth,
                                   Direction direction);

/// Sorted per-node sets stored in CSR form.
class ReachTable {
 public:
  ReachTable() = default;
  ReachTable(std::vector<std::size_t> offsets, std::vector<NodeIndex> members)
      : offsets_(std::move(offsets)), members_(std::move(members)) {}

  std::size_t num_nodes() const noexcept { return offsets_.size() - 1; }
  std::size_t total() const noexcept { return members_.size(); }
  std::span<const NodeIndex> operator[](NodeIndex u) const {
    return {members_.data() + offsets_[u], members_.data() + offsets_[u + 1]};
  }
  std::size_t degree(NodeIndex u) const { return offsets_[u + 1] - offsets_[u]; }
  /// Position of row u in the flat member array.
  std::size_t offset(NodeIndex u) const { return offsets_[u]; }
  bool contains(NodeIndex u, NodeIndex v) const;
  /// Table of the reverse relation; sets remain sorted.
  ReachTable transposed() const;

  friend bool operator==(const ReachTable&, const ReachTable&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeIndex> members_;
};

/// Depth-bounded transitive closure G+: out_reach(i) holds every node
/// reachable from i within `depth` hops, in_reach(j) every node reaching j.
/// Closure degrees are the set sizes. Edge weights are ignored.
class LocalClosure {
 public:
  LocalClosure(Depth depth, ReachTable out_reach);

  Depth depth() const noexcept { return depth_; }
  std::size_t num_nodes() const noexcept { return out_.num_nodes(); }
  std::span<const NodeIndex> out_reach(NodeIndex i) const { return out_[i]; }
  std::span<const NodeIndex> in_reach(NodeIndex j) const { return in_[j]; }
  std::size_t out_degree(NodeIndex i) const { return out_.degree(i); }
  std::size_t in_degree(NodeIndex j) const { return in_.degree(j); }
  const ReachTable& out_table() const noexcept { return out_; }
  const ReachTable& in_table() const noexcept { return in_; }
  /// Number of (i, k) pairs in G+.
  std::size_t size() const noexcept { return out_.total(); }

 private:
  Depth depth_;
  ReachTable out_;
  ReachTable in_;
};

/// Runs one bounded BFS per source over `threads` workers. The result does
/// not depend on the worker count.
///
/// With an unbounded depth this is the exact transitive closure and costs
/// O(n * m); on large graphs with big strongly connected components the
/// closure can approach n^2 entries.
LocalClosure local_closure(const DirectedGraph& g, Depth depth, unsigned threads = 1);

}  // namespace reachsym
