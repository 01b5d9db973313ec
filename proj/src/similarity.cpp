#include "reachsym/similarity.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "parallel.hpp"
#include "reachsym/errors.hpp"

namespace reachsym {

Method parse_method(const std::string& name) {
  if (name == "bibliometric") return Method::kBibliometric;
  if (name == "degree-discounted") return Method::kDegreeDiscounted;
  if (name == "reach") return Method::kReach;
  throw ValidationError("unknown method '" + name +
                        "' (expected bibliometric, degree-discounted or reach)");
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kBibliometric:
      return "bibliometric";
    case Method::kDegreeDiscounted:
      return "degree-discounted";
    case Method::kReach:
      return "reach";
  }
  return "?";
}

void SymmetrizationConfig::validate() const {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw ValidationError(std::string(name) + " must be finite and ≥ 0");
    }
  };
  check(alpha, "alpha");
  check(beta, "beta");
  check(gamma, "gamma");
  check(delta, "delta");
  check(epsilon, "epsilon");
  if (top_t && *top_t < 1) throw ValidationError("top-t must be ≥ 1");
  if (hub_cap && *hub_cap < 1) throw ValidationError("hub-cap must be ≥ 1");
  if (threads < 1) throw ValidationError("threads must be ≥ 1");
  if (hierarchy_enabled() && method != Method::kReach) {
    throw ValidationError("hierarchy refinements require method reach");
  }
}

double SimilarityAccumulator::weight(NodeIndex a, NodeIndex b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{a, b},
                             [](const UndirectedEdge& e, const std::pair<NodeIndex, NodeIndex>& k) {
                               return e.u != k.first ? e.u < k.first : e.v < k.second;
                             });
  if (it == entries_.end() || it->u != a || it->v != b) return 0.0;
  return it->weight;
}

SimilarityAccumulator SimilarityAccumulator::operator+(const SimilarityAccumulator& other) const {
  std::vector<UndirectedEdge> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto less = [](const UndirectedEdge& x, const UndirectedEdge& y) {
    return x.u != y.u ? x.u < y.u : x.v < y.v;
  };
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && less(*a, *b))) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || less(*b, *a)) {
      merged.push_back(*b++);
    } else {
      merged.push_back({a->u, a->v, a->weight + b->weight});
      ++a;
      ++b;
    }
  }
  return SimilarityAccumulator(std::max(num_nodes_, other.num_nodes_), std::move(merged));
}

namespace detail {

std::vector<double> table_degrees(const ReachTable& t, const std::vector<double>* weights) {
  std::vector<double> deg(t.num_nodes(), 0.0);
  for (NodeIndex u = 0; u < t.num_nodes(); ++u) {
    if (!weights) {
      deg[u] = static_cast<double>(t.degree(u));
      continue;
    }
    double sum = 0.0;
    for (std::size_t p = t.offset(u); p < t.offset(u) + t.degree(u); ++p) sum += (*weights)[p];
    deg[u] = sum;
  }
  return deg;
}

std::vector<double> degree_scales(const std::vector<double>& degrees, double exponent) {
  std::vector<double> out(degrees.size(), 0.0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] > 0.0) out[i] = std::pow(degrees[i], -exponent);
  }
  return out;
}

namespace {

// Dense sparse-accumulator scratch for one worker.
struct RowScratch {
  std::vector<double> sum;
  std::vector<char> touched;
  std::vector<NodeIndex> touched_list;

  explicit RowScratch(std::size_t n) : sum(n, 0.0), touched(n, 0) {}
};

}  // namespace

SimilarityAccumulator co_reach(const CoReachInput& in, SimilarityStats* stats) {
  const ReachTable& rows = *in.rows;
  const ReachTable& cols = *in.cols;
  const std::size_t n = rows.num_nodes();
  const std::vector<double> row_scale =
      degree_scales(table_degrees(rows, in.row_weights), in.row_exponent);
  const std::vector<double> col_scale =
      degree_scales(table_degrees(cols, in.col_weights), in.col_exponent);

  auto is_hub = [&](NodeIndex k) { return in.hub_cap && cols.degree(k) > *in.hub_cap; };

  std::vector<std::vector<UndirectedEdge>> row_out(n);
  std::vector<std::size_t> row_contributions(n, 0);
  const unsigned threads = std::max(1u, in.threads);
  std::vector<RowScratch> scratch;
  scratch.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) scratch.emplace_back(n);

  detail::parallel_chunks(n, threads, 64, [&](unsigned worker, std::size_t begin,
                                              std::size_t end) {
    RowScratch& s = scratch[worker];
    for (std::size_t ii = begin; ii < end; ++ii) {
      const auto i = static_cast<NodeIndex>(ii);
      if (row_scale[i] == 0.0) continue;
      auto row = rows[i];
      std::size_t count = 0;
      for (std::size_t p = 0; p < row.size(); ++p) {
        const NodeIndex k = row[p];
        if (is_hub(k)) continue;
        const double a_ik = in.row_weights ? (*in.row_weights)[rows.offset(i) + p] : 1.0;
        const double base = a_ik * col_scale[k];
        auto col = cols[k];
        auto first = std::upper_bound(col.begin(), col.end(), i);
        for (auto it = first; it != col.end(); ++it) {
          const NodeIndex j = *it;
          double c = base;
          if (in.col_weights) {
            c *= (*in.col_weights)[cols.offset(k) + static_cast<std::size_t>(it - col.begin())];
          }
          if (in.hierarchy) c *= distance_discount(i, j, k, *in.hierarchy, in.delta);
          if (!s.touched[j]) {
            s.touched[j] = 1;
            s.touched_list.push_back(j);
          }
          s.sum[j] += c;
          ++count;
        }
      }
      row_contributions[i] = count;
      std::sort(s.touched_list.begin(), s.touched_list.end());
      auto& out = row_out[i];
      out.reserve(s.touched_list.size());
      for (NodeIndex j : s.touched_list) {
        const double w = row_scale[i] * row_scale[j] * s.sum[j];
        if (w > 0.0) out.push_back({i, j, w});
        s.sum[j] = 0.0;
        s.touched[j] = 0;
      }
      s.touched_list.clear();
    }
  });

  std::size_t total = 0;
  for (const auto& r : row_out) total += r.size();
  std::vector<UndirectedEdge> entries;
  entries.reserve(total);
  for (auto& r : row_out) {
    entries.insert(entries.end(), r.begin(), r.end());
    std::vector<UndirectedEdge>().swap(r);
  }
  if (stats) {
    for (NodeIndex k = 0; k < cols.num_nodes(); ++k) stats->hubs_skipped += is_hub(k);
    for (auto c : row_contributions) stats->contributions += c;
  }
  return SimilarityAccumulator(n, std::move(entries));
}

}  // namespace detail

namespace {

const HierarchyScores* checked_hierarchy(const LocalClosure& closure,
                                         const SymmetrizationConfig& cfg,
                                         const HierarchyScores* h) {
  cfg.validate();
  if (closure.depth() != cfg.depth) {
    throw ValidationError("closure depth " + closure.depth().to_string() +
                          " does not match configured depth " + cfg.depth.to_string());
  }
  if (!cfg.hierarchy_enabled()) return nullptr;
  if (!h) throw ValidationError("hierarchy enabled but no scores supplied");
  if (h->size() != closure.num_nodes()) {
    throw ValidationError("hierarchy scores do not cover every node");
  }
  return h;
}

}  // namespace

SimilarityAccumulator out_reach_similarity(const LocalClosure& closure,
                                           const SymmetrizationConfig& cfg,
                                           const HierarchyScores* h, SimilarityStats* stats) {
  detail::CoReachInput in;
  in.rows = &closure.out_table();
  in.cols = &closure.in_table();
  in.row_exponent = cfg.alpha;
  in.col_exponent = cfg.beta;
  in.hierarchy = checked_hierarchy(closure, cfg, h);
  in.delta = cfg.delta;
  in.hub_cap = cfg.hub_cap;
  in.threads = cfg.threads;
  return detail::co_reach(in, stats);
}

SimilarityAccumulator in_reach_similarity(const LocalClosure& closure,
                                          const SymmetrizationConfig& cfg,
                                          const HierarchyScores* h, SimilarityStats* stats) {
  detail::CoReachInput in;
  in.rows = &closure.in_table();
  in.cols = &closure.out_table();
  in.row_exponent = cfg.beta;
  in.col_exponent = cfg.alpha;
  in.hierarchy = checked_hierarchy(closure, cfg, h);
  in.delta = cfg.delta;
  in.hub_cap = cfg.hub_cap;
  in.threads = cfg.threads;
  return detail::co_reach(in, stats);
}

std::vector<NeighborContribution> pair_contributions(const LocalClosure& closure,
                                                     const SymmetrizationConfig& cfg,
                                                     const HierarchyScores* h, NodeIndex i,
                                                     NodeIndex j) {
  const HierarchyScores* hs = checked_hierarchy(closure, cfg, h);
  if (i >= closure.num_nodes() || j >= closure.num_nodes()) {
    throw ValidationError("node out of range");
  }
  std::vector<NeighborContribution> out;
  if (i == j) return out;
  auto scale = [](std::size_t degree, double exponent) {
    return degree > 0 ? std::pow(static_cast<double>(degree), -exponent) : 0.0;
  };
  auto side = [&](const ReachTable& rows, const ReachTable& cols, double row_exp,
                  double col_exp, bool successor) {
    const double norm = scale(rows.degree(i), row_exp) * scale(rows.degree(j), row_exp);
    std::vector<NodeIndex> common;
    std::set_intersection(rows[i].begin(), rows[i].end(), rows[j].begin(), rows[j].end(),
                          std::back_inserter(common));
    for (NodeIndex k : common) {
      if (cfg.hub_cap && cols.degree(k) > *cfg.hub_cap) continue;
      double w = norm * scale(cols.degree(k), col_exp);
      if (hs) w *= distance_discount(i, j, k, *hs, cfg.delta);
      out.push_back({k, successor, w});
    }
  };
  side(closure.out_table(), closure.in_table(), cfg.alpha, cfg.beta, true);
  side(closure.in_table(), closure.out_table(), cfg.beta, cfg.alpha, false);
  return out;
}

SimilarityAccumulator pair_hierarchy_discount(const SimilarityAccumulator& acc,
                                              const HierarchyScores& h, double gamma) {
  if (!std::isfinite(gamma) || gamma < 0.0) throw ValidationError("gamma must be finite and ≥ 0");
  std::vector<UndirectedEdge> out;
  out.reserve(acc.size());
  for (const auto& e : acc.entries()) {
    const double w = e.weight / std::pow(1.0 + h.difference(e.u, e.v), gamma);
    if (w > 0.0) out.push_back({e.u, e.v, w});
  }
  return SimilarityAccumulator(acc.num_nodes(), std::move(out));
}

}  // namespace reachsym
