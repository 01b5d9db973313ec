#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "reachsym/graph.hpp"
#include "reachsym/hierarchy.hpp"
#include "reachsym/reachability.hpp"

namespace reachsym {

enum class Method { kBibliometric, kDegreeDiscounted, kReach };
enum class HierarchyMode { kNone, kFile, kAuto };

/// Accepts "bibliometric", "degree-discounted", "reach".
Method parse_method(const std::string& name);
std::string to_string(Method m);

struct SymmetrizationConfig {
  Method method = Method::kReach;
  /// Closure depth; only meaningful for Method::kReach.
  Depth depth = Depth::bounded(2);
  /// Exponent on out-degrees (pair normalizer in B_o, neighbor discount in C_i).
  double alpha = 0.5;
  /// Exponent on in-degrees (neighbor discount in B_o, pair normalizer in C_i).
  double beta = 0.5;
  /// Pair-level hierarchy exponent.
  double gamma = 1.0;
  /// Common-neighbor hierarchy exponent.
  double delta = 1.0;
  HierarchyMode hierarchy = HierarchyMode::kNone;
  /// Pairs with weight <= epsilon are dropped after summation.
  double epsilon = 0.0;
  std::optional<std::size_t> top_t;
  /// Common neighbors whose co-reach set is larger than this are skipped.
  std::optional<std::size_t> hub_cap;
  unsigned threads = 1;

  bool hierarchy_enabled() const noexcept { return hierarchy != HierarchyMode::kNone; }
  /// Throws ValidationError on negative or non-finite exponents, top_t or
  /// hub_cap of 0, zero threads, or hierarchy with a non-reach method.
  void validate() const;
};

/// Sparse symmetric similarity: one entry per canonical pair (u < v),
/// sorted by (u, v), all weights > 0.
class SimilarityAccumulator {
 public:
  explicit SimilarityAccumulator(std::size_t num_nodes = 0) : num_nodes_(num_nodes) {}
  /// `entries` must already be canonical, sorted and positive.
  SimilarityAccumulator(std::size_t num_nodes, std::vector<UndirectedEdge> entries)
      : num_nodes_(num_nodes), entries_(std::move(entries)) {}

  std::size_t num_nodes() const noexcept { return num_nodes_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::vector<UndirectedEdge>& entries() const noexcept { return entries_; }
  std::vector<UndirectedEdge> release() && { return std::move(entries_); }
  double weight(NodeIndex a, NodeIndex b) const;

  /// Entrywise sum; a pair present in both is added as this + other.
  SimilarityAccumulator operator+(const SimilarityAccumulator& other) const;

 private:
  std::size_t num_nodes_;
  std::vector<UndirectedEdge> entries_;
};

/// Counters filled in by the similarity kernels.
struct SimilarityStats {
  std::size_t hubs_skipped = 0;
  std::size_t contributions = 0;
};

/// Out-reach similarity over the closure:
///
///   B_o(i, j) = d_out(i)^-alpha d_out(j)^-alpha
///               * sum over k in out_reach(i) ∩ out_reach(j) of d_in(k)^-beta * f(i, j, k)
///
/// where f is distance_discount(i, j, k, h, delta) when the hierarchy is
/// enabled and 1 otherwise. Per pair the sum runs in ascending k.
///
/// Throws ValidationError when the closure depth differs from cfg.depth or
/// the hierarchy scores do not match cfg.hierarchy.
SimilarityAccumulator out_reach_similarity(const LocalClosure& closure,
                                           const SymmetrizationConfig& cfg,
                                           const HierarchyScores* h = nullptr,
                                           SimilarityStats* stats = nullptr);

/// In-reach similarity: common predecessors k discounted by d_out(k)^-alpha,
/// pairs normalized by d_in(i)^-beta d_in(j)^-beta.
SimilarityAccumulator in_reach_similarity(const LocalClosure& closure,
                                          const SymmetrizationConfig& cfg,
                                          const HierarchyScores* h = nullptr,
                                          SimilarityStats* stats = nullptr);

/// One common neighbor's share of B_o(i, j) + C_i(i, j), pair normalization
/// included.
struct NeighborContribution {
  NodeIndex k;
  bool common_successor;  // true: B_o term; false: C_i term
  double weight;
};

/// Per-neighbor breakdown of the pair (i, j) before the pair hierarchy
/// discount, in ascending k with B_o terms first. The weights add up to
/// (B_o + C_i)(i, j).
std::vector<NeighborContribution> pair_contributions(const LocalClosure& closure,
                                                     const SymmetrizationConfig& cfg,
                                                     const HierarchyScores* h, NodeIndex i,
                                                     NodeIndex j);

/// weight(i, j) / (1 + |h(i) - h(j)|)^gamma for every entry.
SimilarityAccumulator pair_hierarchy_discount(const SimilarityAccumulator& acc,
                                              const HierarchyScores& h, double gamma);

namespace detail {

/// One side of the co-reach product. `rows[i]` is the neighbor list of i and
/// `cols` its transpose; optional weights run parallel to each table's
/// member array.
struct CoReachInput {
  const ReachTable* rows = nullptr;
  const ReachTable* cols = nullptr;
  const std::vector<double>* row_weights = nullptr;
  const std::vector<double>* col_weights = nullptr;
  double row_exponent = 0.0;
  double col_exponent = 0.0;
  const HierarchyScores* hierarchy = nullptr;
  double delta = 0.0;
  std::optional<std::size_t> hub_cap;
  unsigned threads = 1;
};

/// r(i) r(j) sum_k a(i,k) c(k) a(j,k) [f(i,j,k)] with r = deg^-row_exponent,
/// c = deg^-col_exponent over (weighted) table degrees and the zero-degree
/// factor defined as 0.
SimilarityAccumulator co_reach(const CoReachInput& in, SimilarityStats* stats);

/// (Weighted) degree per row: the sum of row weights, or the row length.
std::vector<double> table_degrees(const ReachTable& t, const std::vector<double>* weights);

/// d^-exponent, with 0 for d == 0.
std::vector<double> degree_scales(const std::vector<double>& degrees, double exponent);

}  // namespace detail

}  // namespace reachsym
