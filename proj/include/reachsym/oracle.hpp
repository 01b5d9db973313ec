#pragma once

#include <Eigen/Dense>

#include "reachsym/graph.hpp"
#include "reachsym/hierarchy.hpp"
#include "reachsym/reachability.hpp"

// Dense reference evaluation of the symmetrization in literal matrix form.
// Slow and small-graph only; used to validate the sparse pipeline.
namespace reachsym::oracle {

using DenseMatrix = Eigen::MatrixXd;

inline constexpr std::size_t kMaxNodes = 512;

/// A(i, j) = edge weight (or 1 when `use_weights` is false). Throws
/// ValidationError above kMaxNodes.
DenseMatrix dense_adjacency(const DirectedGraph& g, bool use_weights = false);

/// 0/1 matrix with (i, j) = 1 iff a path of length 1..depth joins i to j:
/// entrywise OR of the boolean powers A^1 .. A^depth, iterated to a fixed
/// point for an unbounded depth.
DenseMatrix dense_closure(const DirectedGraph& g, Depth depth);

struct DenseSimilarity {
  DenseMatrix out_reach;  // B_o
  DenseMatrix in_reach;   // C_i
  DenseMatrix total;      // B_o + C_i with a zero diagonal
};

/// B_o = Do^-a A Di^-b A^T Do^-a and C_i = Di^-b A^T Do^-a A Di^-b, with
/// degrees taken as row/column sums of `closure` and 0^-x defined as 0.
/// With `h`, every k term is scaled by the common-neighbor distance factor.
DenseSimilarity dense_similarity(const DenseMatrix& closure, double alpha, double beta,
                                 const HierarchyScores* h = nullptr, double delta = 0.0);

/// W(i, j) / (1 + |h(i) - h(j)|)^gamma.
DenseMatrix dense_pair_discount(const DenseMatrix& w, const HierarchyScores& h, double gamma);

/// Symmetric dense matrix of an undirected graph.
DenseMatrix to_dense(const UndirectedWeightedGraph& g);

}  // namespace reachsym::oracle
