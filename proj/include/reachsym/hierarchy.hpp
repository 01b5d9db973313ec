#pragma once

#include <cmath>
#include <iosfwd>
#include <string>
#include <vector>

#include "reachsym/graph.hpp"

namespace reachsym {

/// One score in [0, 1] per node, indexed like the graph it was built for.
class HierarchyScores {
 public:
  HierarchyScores() = default;
  /// Throws ValidationError if any score is non-finite or outside [0, 1].
  explicit HierarchyScores(std::vector<double> scores);

  std::size_t size() const noexcept { return scores_.size(); }
  double operator[](NodeIndex u) const { return scores_[u]; }
  const std::vector<double>& values() const noexcept { return scores_; }

  /// Absolute score difference between two nodes.
  double difference(NodeIndex a, NodeIndex b) const {
    return std::abs(scores_[a] - scores_[b]);
  }

 private:
  std::vector<double> scores_;
};

/// Longest-path depth of each node's SCC in the condensation DAG, divided by
/// the maximum depth. All zero when the DAG has no edges.
HierarchyScores auto_hierarchy(const DirectedGraph& g);

/// Reads `label<TAB>raw_score` lines (`#` comments allowed) and min-max
/// normalizes them to [0, 1]; equal raw scores all map to 0.
///
/// Labels absent from the graph are skipped and appended to `unknown_labels`
/// when given. Throws ParseError on a malformed line or non-numeric score,
/// and ValidationError naming the nodes left without a score or a label
/// scored twice.
HierarchyScores load_hierarchy(std::istream& in, const DirectedGraph& g,
                               std::vector<std::string>* unknown_labels = nullptr);

/// Writes `label<TAB>score` per node in index order.
void write_hierarchy(const HierarchyScores& h, const std::vector<std::string>& labels,
                     std::ostream& out, int precision);

/// 1 / (1 + |h(a) - h(b)|)^gamma: the penalty for a pair sitting at
/// different levels.
inline double pair_discount_factor(const HierarchyScores& h, NodeIndex a, NodeIndex b,
                                   double gamma) {
  return 1.0 / std::pow(1.0 + h.difference(a, b), gamma);
}

/// 1 / ((1 + |h(i) - h(k)|) (1 + |h(j) - h(k)|))^delta, in (0, 1]. Scales the
/// contribution of a common neighbor k to the pair (i, j).
inline double distance_discount(NodeIndex i, NodeIndex j, NodeIndex k,
                                const HierarchyScores& h, double delta) {
  return 1.0 / std::pow((1.0 + h.difference(i, k)) * (1.0 + h.difference(j, k)), delta);
}

}  // namespace reachsym
