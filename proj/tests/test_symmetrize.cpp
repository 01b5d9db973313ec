#include <cmath>
#include <sstream>

#include "doctest.h"
#include "reachsym/errors.hpp"
#include "reachsym/io.hpp"
#include "reachsym/oracle.hpp"
#include "reachsym/symmetrize.hpp"
#include "support/graphs.hpp"

using namespace reachsym;
using reachsym::testing::parse;

namespace {

SymmetrizationConfig reach_cfg(Depth depth, double alpha = 0.5, double beta = 0.5) {
  SymmetrizationConfig cfg;
  cfg.method = Method::kReach;
  cfg.depth = depth;
  cfg.alpha = alpha;
  cfg.beta = beta;
  return cfg;
}

std::string tsv(const UndirectedWeightedGraph& g) {
  std::ostringstream out;
  write_undirected(g, out);
  return out.str();
}

void check_well_formed(const UndirectedWeightedGraph& g) {
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    CHECK(g.edges[e].u < g.edges[e].v);
    CHECK(g.edges[e].weight > 0.0);
    if (e > 0) {
      const auto& a = g.edges[e - 1];
      const auto& b = g.edges[e];
      CHECK((a.u < b.u || (a.u == b.u && a.v < b.v)));
    }
  }
}

double max_abs_diff(const oracle::DenseMatrix& a, const oracle::DenseMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("out_reach_similarity: two sources sharing a target") {
  auto g = parse("u\tw\nv\tw\n");
  auto cfg = reach_cfg(Depth::bounded(1));
  auto c = local_closure(g, cfg.depth);
  auto bo = out_reach_similarity(c, cfg);
  REQUIRE(bo.size() == 1);
  CHECK(bo.weight(0, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(oracle::dense_similarity(oracle::dense_closure(g, cfg.depth), 0.5, 0.5).out_reach(0, 2) ==
        doctest::Approx(0.707107).epsilon(1e-6));
  CHECK(in_reach_similarity(c, cfg).empty());
}

TEST_CASE("in_reach_similarity: one source feeding two sinks") {
  auto g = parse("w\tu\nw\tv\n");
  auto cfg = reach_cfg(Depth::bounded(1));
  auto ci = in_reach_similarity(local_closure(g, cfg.depth), cfg);
  REQUIRE(ci.size() == 1);
  CHECK(ci.weight(1, 2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(in_reach_similarity(local_closure(DirectedGraph{}, cfg.depth), cfg).empty());
}

TEST_CASE("in_reach on G equals out_reach on the reversed graph with alpha and beta swapped") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto g = reachsym::testing::random_digraph(18, 0.12, seed);
    auto cfg = reach_cfg(Depth::bounded(2), 0.3, 0.8);
    auto swapped = reach_cfg(Depth::bounded(2), 0.8, 0.3);
    auto ci = in_reach_similarity(local_closure(g, cfg.depth), cfg);
    auto bo_rev = out_reach_similarity(local_closure(g.reversed(), cfg.depth), swapped);
    CHECK(ci.entries() == bo_rev.entries());
  }
}

TEST_CASE("graph with no shared reach gives an empty accumulator") {
  auto g = parse("a\tb\nc\td\n");
  auto cfg = reach_cfg(Depth::bounded(3));
  auto c = local_closure(g, cfg.depth);
  CHECK(out_reach_similarity(c, cfg).empty());
  CHECK(in_reach_similarity(c, cfg).empty());
  CHECK(symmetrize(g, cfg).edges.empty());
}

TEST_CASE("closure depth must match the configured depth") {
  auto g = parse("a\tb\n");
  auto c = local_closure(g, Depth::bounded(1));
  CHECK_THROWS_AS(out_reach_similarity(c, reach_cfg(Depth::bounded(2))), ValidationError);
  CHECK_THROWS_AS(in_reach_similarity(c, reach_cfg(Depth::unbounded())), ValidationError);
}

TEST_CASE("symmetrize: single shared successor") {
  auto g = parse("u\tw\nv\tw\n");
  auto u = symmetrize(g, reach_cfg(Depth::bounded(1)));
  REQUIRE(u.edges.size() == 1);
  CHECK(tsv(u) == "u\tv\t0.707107\n");
}

TEST_CASE("symmetrize: motif connected only through depth-2 neighbors") {
  // f and g share predecessor p and successor q, each two hops away.
  auto g = parse("p\tx\nx\tf\np\ty\ny\tg\nf\ts\ns\tq\ng\tt\nt\tq\n");
  const NodeIndex f = *g.find("f"), gg = *g.find("g");
  CHECK(symmetrize(g, reach_cfg(Depth::bounded(1))).weight(f, gg) == 0.0);
  auto two = symmetrize(g, reach_cfg(Depth::bounded(2)));
  // Hand evaluation: B_o = 1/(sqrt2 sqrt2) * 1/sqrt4 = 0.25, and C_i the same.
  CHECK(two.weight(f, gg) == doctest::Approx(0.5).epsilon(1e-12));
  auto dense = oracle::dense_similarity(oracle::dense_closure(g, Depth::bounded(2)), 0.5, 0.5);
  CHECK(two.weight(f, gg) == doctest::Approx(dense.total(f, gg)).epsilon(1e-12));
}

TEST_CASE("reach at depth 1 reproduces the first-order baselines") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const bool weighted = seed % 3 == 0;
    auto g = reachsym::testing::random_digraph(25, 0.1, seed, weighted);
    for (double ab : {0.0, 0.5, 1.0}) {
      auto reach = symmetrize(g, reach_cfg(Depth::bounded(1), ab, ab));
      auto dd = degree_discounted(g, ab, ab);
      CHECK(reach.edges == dd.edges);
      CHECK(tsv(reach) == tsv(dd));
    }
    CHECK(symmetrize(g, reach_cfg(Depth::bounded(1), 0.0, 0.0)).edges == bibliometric(g).edges);
  }
}

TEST_CASE("degree_discounted examples") {
  SUBCASE("shared successor") {
    auto u = degree_discounted(parse("u\tw\nv\tw\n"), 0.5, 0.5);
    REQUIRE(u.edges.size() == 1);
    CHECK(u.edges[0].weight == doctest::Approx(0.707107).epsilon(1e-6));
  }
  SUBCASE("star without discounts is plain co-citation") {
    auto u = degree_discounted(parse("k\ta\nk\tb\nk\tc\n"), 0.0, 0.0);
    REQUIRE(u.edges.size() == 3);
    for (const auto& e : u.edges) CHECK(e.weight == 1.0);
  }
  SUBCASE("single edge") { CHECK(degree_discounted(parse("u\tv\n"), 0.5, 0.5).edges.empty()); }
  SUBCASE("weighted degrees") {
    // d_out(u) = 2, d_out(v) = 1, d_in(w) = 3: 2*1 / (sqrt2 * 1 * sqrt3).
    auto g = parse("u\tw\t2\nv\tw\t1\n", true);
    auto u = degree_discounted(g, 0.5, 0.5);
    REQUIRE(u.edges.size() == 1);
    CHECK(u.edges[0].weight == doctest::Approx(std::sqrt(2.0 / 3.0)).epsilon(1e-12));
    auto dense = oracle::dense_similarity(oracle::dense_adjacency(g, true), 0.5, 0.5);
    CHECK(u.edges[0].weight == doctest::Approx(dense.total(0, 2)).epsilon(1e-12));
  }
  SUBCASE("negative exponent rejected") {
    CHECK_THROWS_AS(degree_discounted(parse("u\tv\n"), -0.5, 0.5), ValidationError);
  }
}

TEST_CASE("bibliometric examples") {
  CHECK(bibliometric(parse("u\tw\nv\tw\n")).edges == std::vector<UndirectedEdge>{{0, 2, 1.0}});
  // u=0, w=1, v=2, x=3: one common successor plus one common predecessor.
  auto both = bibliometric(parse("u\tw\nv\tw\nx\tu\nx\tv\n"));
  CHECK(both.weight(0, 2) == 2.0);
  CHECK(bibliometric(parse("a\tb\nb\tc\n")).edges.empty());
}

TEST_CASE("sparse pipeline matches the dense oracle") {
  const Depth depths[] = {Depth::bounded(1), Depth::bounded(2), Depth::bounded(3),
                          Depth::unbounded()};
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 5 + reachsym::testing::below(rng, 30);
    auto g = reachsym::testing::random_digraph(n, 0.1, seed);
    for (Depth d : depths) {
      for (double a : {0.0, 0.5, 1.0}) {
        for (double b : {0.0, 0.5, 1.0}) {
          auto u = symmetrize(g, reach_cfg(d, a, b));
          check_well_formed(u);
          auto dense = oracle::dense_similarity(oracle::dense_closure(g, d), a, b);
          CHECK(max_abs_diff(oracle::to_dense(u), dense.total) <= 1e-9);
        }
      }
    }
  }
}

TEST_CASE("symmetrize is equivariant under node relabeling") {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto g = reachsym::testing::random_digraph(22, 0.1, seed);
    auto perm = reachsym::testing::random_permutation(g.num_nodes(), rng);
    auto h = reachsym::testing::relabeled(g, perm);
    auto cfg = reach_cfg(Depth::bounded(2));
    auto ug = symmetrize(g, cfg);
    auto uh = symmetrize(h, cfg);
    REQUIRE(ug.edges.size() == uh.edges.size());
    for (const auto& e : ug.edges) {
      CHECK(uh.weight(perm[e.u], perm[e.v]) == doctest::Approx(e.weight).epsilon(1e-12));
    }
  }
}

TEST_CASE("thresholding, thread count and hub cap") {
  auto g = reachsym::testing::power_law_digraph(2000, 6000, 3);
  auto cfg = reach_cfg(Depth::bounded(2));

  SUBCASE("huge epsilon empties the graph") {
    cfg.epsilon = 1e300;
    CHECK(symmetrize(g, cfg).edges.empty());
  }
  SUBCASE("epsilon drops exactly the small weights") {
    auto all = symmetrize(g, cfg);
    cfg.epsilon = 0.05;
    SymmetrizeReport report;
    auto kept = symmetrize(g, cfg, nullptr, &report);
    std::size_t expected = 0;
    for (const auto& e : all.edges) expected += e.weight > 0.05;
    CHECK(kept.edges.size() == expected);
    CHECK(report.dropped_by_epsilon == all.edges.size() - expected);
  }
  SUBCASE("worker count does not change a single bit") {
    auto one = symmetrize(g, cfg);
    cfg.threads = 7;
    CHECK(symmetrize(g, cfg).edges == one.edges);
  }
  SUBCASE("hub cap skips large common neighbors") {
    auto tiny = parse("u\tw\nv\tw\n");
    auto c1 = reach_cfg(Depth::bounded(1));
    c1.hub_cap = 1;
    SymmetrizeReport report;
    CHECK(symmetrize(tiny, c1, nullptr, &report).edges.empty());
    CHECK(report.hubs_skipped >= 1);
    c1.hub_cap = 2;
    CHECK(symmetrize(tiny, c1).edges.size() == 1);
  }
}

TEST_CASE("config validation") {
  auto g = parse("u\tw\nv\tw\n");
  auto cfg = reach_cfg(Depth::bounded(1));
  SUBCASE("negative alpha") {
    cfg.alpha = -1;
    CHECK_THROWS_AS(symmetrize(g, cfg), ValidationError);
  }
  SUBCASE("top_t of zero") {
    cfg.top_t = 0;
    CHECK_THROWS_AS(symmetrize(g, cfg), ValidationError);
  }
  SUBCASE("hierarchy without scores") {
    cfg.hierarchy = HierarchyMode::kAuto;
    CHECK_THROWS_AS(symmetrize(g, cfg), ValidationError);
  }
  SUBCASE("hierarchy scores missing nodes are named") {
    cfg.hierarchy = HierarchyMode::kFile;
    HierarchyScores partial(std::vector<double>{0.0, 1.0});
    CHECK_THROWS_WITH_AS(symmetrize(g, cfg, &partial), "missing hierarchy score for: v",
                         ValidationError);
  }
  SUBCASE("hierarchy with a baseline method") {
    cfg.method = Method::kBibliometric;
    cfg.hierarchy = HierarchyMode::kAuto;
    CHECK_THROWS_AS(cfg.validate(), ValidationError);
  }
  SUBCASE("method names") {
    CHECK(parse_method("degree-discounted") == Method::kDegreeDiscounted);
    CHECK_THROWS_AS(parse_method("pagerank"), ValidationError);
  }
}

TEST_CASE("sparsify_top_t") {
  SUBCASE("no-op when every node has at most t edges") {
    UndirectedWeightedGraph g{{"a", "b", "c"}, {{0, 1, 1.0}, {1, 2, 2.0}}};
    CHECK(sparsify_top_t(g, 2).edges == g.edges);
  }
  SUBCASE("star: leaves keep their only edge") {
    UndirectedWeightedGraph g{{"hub", "a", "b", "c", "d", "e"},
                              {{0, 1, 5.0}, {0, 2, 4.0}, {0, 3, 3.0}, {0, 4, 2.0}, {0, 5, 1.0}}};
    CHECK(sparsify_top_t(g, 2).edges.size() == 5);
  }
  SUBCASE("ties at the cutoff go to the smaller partner index") {
    // Node 0's edges all weigh 1, so with t = 1 it keeps (0,1).
    UndirectedWeightedGraph g{{"a", "b", "c", "d", "e"},
                              {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {2, 3, 5.0}, {3, 4, 9.0}}};
    auto s = sparsify_top_t(g, 1);
    // 0 keeps (0,1); 1 keeps (0,1); 2 keeps (2,3); 3 keeps (3,4); 4 keeps (3,4).
    CHECK(s.edges == std::vector<UndirectedEdge>{{0, 1, 1.0}, {2, 3, 5.0}, {3, 4, 9.0}});
  }
  SUBCASE("idempotent") {
    auto g = symmetrize(reachsym::testing::power_law_digraph(500, 1500, 11),
                        reach_cfg(Depth::bounded(2)));
    for (std::size_t t : {1u, 2u, 5u}) {
      auto once = sparsify_top_t(g, t);
      CHECK(sparsify_top_t(once, t).edges == once.edges);
      CHECK(once.edges.size() <= g.edges.size());
    }
  }
  SUBCASE("t must be positive") {
    CHECK_THROWS_AS(sparsify_top_t(UndirectedWeightedGraph{}, 0), ValidationError);
  }
}

TEST_CASE("pair_contributions add up to the pair weight") {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto g = reachsym::testing::random_digraph(25, 0.1, seed);
    auto h = auto_hierarchy(g);
    auto cfg = reach_cfg(seed % 2 ? Depth::bounded(2) : Depth::unbounded(), 0.5, 1.0);
    cfg.hierarchy = HierarchyMode::kAuto;
    cfg.gamma = 0.0;
    cfg.hub_cap = 6;
    const auto closure = local_closure(g, cfg.depth);
    const auto u = symmetrize(g, cfg, &h);
    for (const auto& e : u.edges) {
      double sum = 0.0;
      for (const auto& c : pair_contributions(closure, cfg, &h, e.u, e.v)) sum += c.weight;
      CHECK(sum == doctest::Approx(e.weight).epsilon(1e-12));
    }
  }
  auto motif = parse("u\tw\nv\tw\n");
  auto terms = pair_contributions(local_closure(motif, Depth::bounded(1)), reach_cfg(Depth::bounded(1)),
                                  nullptr, 0, 2);
  REQUIRE(terms.size() == 1);
  CHECK(terms[0].k == 1);
  CHECK(terms[0].common_successor);
  CHECK_THROWS_AS(pair_contributions(local_closure(motif, Depth::bounded(1)),
                                     reach_cfg(Depth::bounded(1)), nullptr, 0, 9),
                  ValidationError);
}
