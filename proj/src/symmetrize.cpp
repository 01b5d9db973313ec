#include "reachsym/symmetrize.hpp"

#include <algorithm>
#include <numeric>

#include "reachsym/errors.hpp"

namespace reachsym {
namespace {

struct Adjacency {
  ReachTable out;
  ReachTable in;
  std::vector<double> out_weights;
  std::vector<double> in_weights;
};

Adjacency adjacency_tables(const DirectedGraph& g) {
  const std::size_t n = g.num_nodes();
  Adjacency a;
  std::vector<std::size_t> out_off(n + 1, 0), in_off(n + 1, 0);
  std::vector<NodeIndex> out_members, in_members;
  out_members.reserve(g.num_edges());
  in_members.reserve(g.num_edges());
  for (NodeIndex u = 0; u < n; ++u) {
    auto s = g.successors(u);
    auto sw = g.successor_weights(u);
    out_members.insert(out_members.end(), s.begin(), s.end());
    a.out_weights.insert(a.out_weights.end(), sw.begin(), sw.end());
    out_off[u + 1] = out_members.size();
    auto p = g.predecessors(u);
    auto pw = g.predecessor_weights(u);
    in_members.insert(in_members.end(), p.begin(), p.end());
    a.in_weights.insert(a.in_weights.end(), pw.begin(), pw.end());
    in_off[u + 1] = in_members.size();
  }
  a.out = ReachTable(std::move(out_off), std::move(out_members));
  a.in = ReachTable(std::move(in_off), std::move(in_members));
  return a;
}

// B_o + C_i over a pair of mutually transposed tables.
SimilarityAccumulator two_sided(const ReachTable& out, const ReachTable& in,
                                const std::vector<double>* out_w,
                                const std::vector<double>* in_w, double alpha, double beta,
                                const HierarchyScores* h, double delta,
                                std::optional<std::size_t> hub_cap, unsigned threads,
                                SymmetrizeReport* report) {
  SimilarityStats stats;
  detail::CoReachInput b;
  b.rows = &out;
  b.cols = &in;
  b.row_weights = out_w;
  b.col_weights = in_w;
  b.row_exponent = alpha;
  b.col_exponent = beta;
  b.hierarchy = h;
  b.delta = delta;
  b.hub_cap = hub_cap;
  b.threads = threads;
  SimilarityAccumulator bo = detail::co_reach(b, &stats);

  detail::CoReachInput c = b;
  c.rows = &in;
  c.cols = &out;
  c.row_weights = in_w;
  c.col_weights = out_w;
  c.row_exponent = beta;
  c.col_exponent = alpha;
  SimilarityAccumulator ci = detail::co_reach(c, &stats);

  if (report) {
    report->pairs_out_reach = bo.size();
    report->pairs_in_reach = ci.size();
    report->hubs_skipped = stats.hubs_skipped;
  }
  return bo + ci;
}

UndirectedWeightedGraph first_order(const DirectedGraph& g, double alpha, double beta,
                                    std::optional<std::size_t> hub_cap, unsigned threads,
                                    SymmetrizeReport* report) {
  Adjacency a = adjacency_tables(g);
  const bool w = g.weighted();
  SimilarityAccumulator sum =
      two_sided(a.out, a.in, w ? &a.out_weights : nullptr, w ? &a.in_weights : nullptr, alpha,
                beta, nullptr, 0.0, hub_cap, threads, report);
  return {g.labels(), std::move(sum).release()};
}

}  // namespace

UndirectedWeightedGraph symmetrize(const DirectedGraph& g, const SymmetrizationConfig& cfg,
                                   const HierarchyScores* h, SymmetrizeReport* report) {
  cfg.validate();
  if (report) *report = {};
  if (cfg.hierarchy_enabled()) {
    if (!h) throw ValidationError("hierarchy enabled but no scores supplied");
    if (h->size() < g.num_nodes()) {
      std::string missing;
      for (std::size_t u = h->size(); u < g.num_nodes() && u < h->size() + 20; ++u) {
        missing += (missing.empty() ? "" : ", ") + g.label(static_cast<NodeIndex>(u));
      }
      throw ValidationError("missing hierarchy score for: " + missing);
    }
    if (h->size() > g.num_nodes()) {
      throw ValidationError("hierarchy scores cover more nodes than the graph");
    }
  }

  UndirectedWeightedGraph out;
  switch (cfg.method) {
    case Method::kBibliometric:
      out = first_order(g, 0.0, 0.0, cfg.hub_cap, cfg.threads, report);
      break;
    case Method::kDegreeDiscounted:
      out = first_order(g, cfg.alpha, cfg.beta, cfg.hub_cap, cfg.threads, report);
      break;
    case Method::kReach: {
      LocalClosure closure = local_closure(g, cfg.depth, cfg.threads);
      if (report) report->closure_size = closure.size();
      const HierarchyScores* hs = cfg.hierarchy_enabled() ? h : nullptr;
      // At depth 1 the closure is the adjacency, so edge weights carry over.
      std::vector<double> out_w, in_w;
      const bool use_weights = g.weighted() && cfg.depth == Depth::bounded(1);
      if (use_weights) {
        out_w.reserve(closure.size());
        in_w.reserve(closure.size());
        for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
          for (NodeIndex k : closure.out_reach(i)) out_w.push_back(g.edge_weight(i, k));
          for (NodeIndex k : closure.in_reach(i)) in_w.push_back(g.edge_weight(k, i));
        }
      }
      SimilarityAccumulator sum =
          two_sided(closure.out_table(), closure.in_table(), use_weights ? &out_w : nullptr,
                    use_weights ? &in_w : nullptr, cfg.alpha, cfg.beta, hs, cfg.delta,
                    cfg.hub_cap, cfg.threads, report);
      if (hs) sum = pair_hierarchy_discount(sum, *hs, cfg.gamma);
      out = {g.labels(), std::move(sum).release()};
      break;
    }
  }
  if (report) report->pairs_summed = out.edges.size();

  const std::size_t before = out.edges.size();
  std::erase_if(out.edges, [&](const UndirectedEdge& e) { return e.weight <= cfg.epsilon; });
  if (report) report->dropped_by_epsilon = before - out.edges.size();

  if (cfg.top_t) {
    const std::size_t kept = out.edges.size();
    out = sparsify_top_t(out, *cfg.top_t);
    if (report) report->dropped_by_top_t = kept - out.edges.size();
  }
  return out;
}

UndirectedWeightedGraph degree_discounted(const DirectedGraph& g, double alpha, double beta,
                                          unsigned threads) {
  SymmetrizationConfig cfg;
  cfg.alpha = alpha;
  cfg.beta = beta;
  cfg.threads = threads;
  cfg.validate();
  return first_order(g, alpha, beta, std::nullopt, threads, nullptr);
}

UndirectedWeightedGraph bibliometric(const DirectedGraph& g, unsigned threads) {
  return first_order(g, 0.0, 0.0, std::nullopt, threads, nullptr);
}

UndirectedWeightedGraph sparsify_top_t(const UndirectedWeightedGraph& g, std::size_t t) {
  if (t < 1) throw ValidationError("top-t must be ≥ 1");
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    incident[g.edges[e].u].push_back(e);
    incident[g.edges[e].v].push_back(e);
  }
  std::vector<char> keep(g.edges.size(), 0);
  for (NodeIndex u = 0; u < n; ++u) {
    auto& inc = incident[u];
    auto partner = [&](std::size_t e) {
      return g.edges[e].u == u ? g.edges[e].v : g.edges[e].u;
    };
    auto ranks_before = [&](std::size_t a, std::size_t b) {
      if (g.edges[a].weight != g.edges[b].weight) return g.edges[a].weight > g.edges[b].weight;
      return partner(a) < partner(b);
    };
    const std::size_t m = std::min(t, inc.size());
    std::partial_sort(inc.begin(), inc.begin() + static_cast<std::ptrdiff_t>(m), inc.end(),
                      ranks_before);
    for (std::size_t r = 0; r < m; ++r) keep[inc[r]] = 1;
  }
  UndirectedWeightedGraph out{g.labels, {}};
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    if (keep[e]) out.edges.push_back(g.edges[e]);
  }
  return out;
}

}  // namespace reachsym
