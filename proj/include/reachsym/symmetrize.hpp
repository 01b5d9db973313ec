#pragma once

#include <cstddef>

#include "reachsym/graph.hpp"
#include "reachsym/hierarchy.hpp"
#include "reachsym/similarity.hpp"

namespace reachsym {

/// What happened during one symmetrize() call.
struct SymmetrizeReport {
  std::size_t closure_size = 0;        // (i, k) pairs in G+ (reach only)
  std::size_t pairs_out_reach = 0;
  std::size_t pairs_in_reach = 0;
  std::size_t pairs_summed = 0;
  std::size_t dropped_by_epsilon = 0;
  std::size_t dropped_by_top_t = 0;
  std::size_t hubs_skipped = 0;
};

/// Directed graph -> weighted undirected graph.
///
/// Computes B_o + C_i for the configured method (reach over the depth-bounded
/// closure, or one of the first-order baselines), then applies the pair
/// hierarchy discount (reach with hierarchy), drops weights <= epsilon and
/// finally sparsifies to top_t when set.
///
/// Edge weights take part only when the closure equals the adjacency (the
/// baselines and reach at depth 1); deeper closures are boolean.
///
/// Throws ValidationError on an invalid config or when the hierarchy scores
/// are missing or do not cover every node.
UndirectedWeightedGraph symmetrize(const DirectedGraph& g, const SymmetrizationConfig& cfg,
                                   const HierarchyScores* h = nullptr,
                                   SymmetrizeReport* report = nullptr);

/// First-order degree-discounted symmetrization: B_o + C_i with the reach
/// sets replaced by direct successors and predecessors, using weighted
/// degrees on weighted graphs.
UndirectedWeightedGraph degree_discounted(const DirectedGraph& g, double alpha, double beta,
                                          unsigned threads = 1);

/// Common successors plus common predecessors (A A^T + A^T A, off-diagonal).
UndirectedWeightedGraph bibliometric(const DirectedGraph& g, unsigned threads = 1);

/// Keeps an edge iff it ranks in the top `t` of u's or of v's incident edges,
/// ranked by weight descending then partner index ascending. Throws
/// ValidationError when t is 0.
UndirectedWeightedGraph sparsify_top_t(const UndirectedWeightedGraph& g, std::size_t t);

}  // namespace reachsym
