#include "doctest.h"
#include "reachsym/errors.hpp"
#include "reachsym/oracle.hpp"
#include "reachsym/reachability.hpp"
#include "support/graphs.hpp"

using namespace reachsym;
using reachsym::testing::parse;

namespace {

std::vector<std::string> names(const DirectedGraph& g, const std::vector<NodeIndex>& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(g.label(id));
  std::sort(out.begin(), out.end());
  return out;
}

// Graph G+ as a DirectedGraph, self-pairs included as self-loops (dropped).
DirectedGraph closure_graph(const DirectedGraph& g, const LocalClosure& c) {
  std::vector<DirectedEdge> edges;
  for (NodeIndex i = 0; i < c.num_nodes(); ++i) {
    for (NodeIndex k : c.out_reach(i)) edges.push_back({i, k, 1.0});
  }
  return DirectedGraph(g.labels(), std::move(edges), false);
}

}  // namespace

TEST_CASE("Depth parsing and validation") {
  CHECK_THROWS_WITH_AS(Depth::bounded(0), "depth must be ≥ 1", ValidationError);
  CHECK_THROWS_AS(Depth::parse("0"), ValidationError);
  CHECK_THROWS_AS(Depth::parse("-3"), ValidationError);
  CHECK_THROWS_AS(Depth::parse("two"), ValidationError);
  CHECK(Depth::parse("inf").is_unbounded());
  CHECK(Depth::parse("3") == Depth::bounded(3));
  CHECK(Depth::bounded(4).to_string() == "4");
}

TEST_CASE("bfs_bounded: local closure example with two sources") {
  // i -> a -> b -> c -> k, i -> d, j -> e -> b
  auto g = parse("i\ta\na\tb\ni\td\nb\tc\nj\te\ne\tb\nc\tk\n");
  const NodeIndex i = *g.find("i"), j = *g.find("j");
  auto ri = bfs_bounded(g, i, Depth::bounded(2), Direction::kOut);
  auto rj = bfs_bounded(g, j, Depth::bounded(2), Direction::kOut);
  CHECK(names(g, ri) == std::vector<std::string>{"a", "b", "d"});
  CHECK(names(g, rj) == std::vector<std::string>{"b", "e"});
  std::vector<NodeIndex> common;
  std::set_intersection(ri.begin(), ri.end(), rj.begin(), rj.end(), std::back_inserter(common));
  CHECK(names(g, common) == std::vector<std::string>{"b"});
}

TEST_CASE("bfs_bounded: chain and cycle") {
  auto chain = parse("a\tb\nb\tc\n");
  CHECK(bfs_bounded(chain, 0, Depth::bounded(1), Direction::kOut) == std::vector<NodeIndex>{1});
  CHECK(bfs_bounded(chain, 0, Depth::bounded(2), Direction::kOut) ==
        std::vector<NodeIndex>{1, 2});
  CHECK(bfs_bounded(chain, 2, Depth::bounded(2), Direction::kIn) ==
        std::vector<NodeIndex>{0, 1});

  auto cycle = parse("a\tb\nb\tc\nc\ta\n");
  CHECK(bfs_bounded(cycle, 0, Depth::bounded(3), Direction::kOut) ==
        std::vector<NodeIndex>{0, 1, 2});
  CHECK(bfs_bounded(cycle, 0, Depth::bounded(2), Direction::kOut) ==
        std::vector<NodeIndex>{1, 2});
  CHECK(bfs_bounded(cycle, 0, Depth::unbounded(), Direction::kIn) ==
        std::vector<NodeIndex>{0, 1, 2});
  CHECK_THROWS_AS(bfs_bounded(cycle, 3, Depth::bounded(1), Direction::kOut), ValidationError);
}

TEST_CASE("local_closure: chain, empty graph, degrees") {
  auto chain = parse("a\tb\nb\tc\n");
  auto c = local_closure(chain, Depth::unbounded());
  CHECK(std::vector<NodeIndex>(c.out_reach(0).begin(), c.out_reach(0).end()) ==
        std::vector<NodeIndex>{1, 2});
  CHECK(c.out_degree(0) == 2);
  CHECK(c.out_degree(1) == 1);
  CHECK(c.out_degree(2) == 0);
  CHECK(c.in_degree(2) == 2);
  CHECK(c.size() == 3);

  auto empty = local_closure(DirectedGraph{}, Depth::bounded(2));
  CHECK(empty.num_nodes() == 0);
  CHECK(empty.size() == 0);

  auto isolated = local_closure(DirectedGraph({"x", "y"}, {}, false), Depth::bounded(3));
  CHECK(isolated.out_degree(0) == 0);
  CHECK(isolated.in_degree(1) == 0);
}

TEST_CASE("local_closure matches the boolean matrix-power oracle") {
  const Depth depths[] = {Depth::bounded(1), Depth::bounded(2), Depth::bounded(3),
                          Depth::unbounded()};
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t n = 1 + reachsym::testing::below(rng, 30);
    auto g = reachsym::testing::random_digraph(n, 0.03 + 0.2 * reachsym::testing::unit(rng), seed);
    for (Depth d : depths) {
      auto c = local_closure(g, d);
      auto dense = oracle::dense_closure(g, d);
      for (NodeIndex i = 0; i < n; ++i) {
        for (NodeIndex j = 0; j < n; ++j) {
          CHECK(c.out_table().contains(i, j) == (dense(i, j) == 1.0));
        }
      }
    }
  }
}

TEST_CASE("closure invariants on random graphs") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    auto g = reachsym::testing::random_digraph(20, 0.08, seed);
    auto reversed = g.reversed();

    std::vector<LocalClosure> by_depth;
    for (std::uint32_t l = 1; l <= 5; ++l) by_depth.push_back(local_closure(g, Depth::bounded(l)));

    for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
      // l = 1 is the adjacency.
      auto r1 = by_depth[0].out_reach(i);
      auto succ = g.successors(i);
      CHECK(std::equal(r1.begin(), r1.end(), succ.begin(), succ.end()));
      // Monotone in l.
      for (std::size_t l = 0; l + 1 < by_depth.size(); ++l) {
        auto lo = by_depth[l].out_reach(i);
        auto hi = by_depth[l + 1].out_reach(i);
        CHECK(std::includes(hi.begin(), hi.end(), lo.begin(), lo.end()));
      }
    }
    for (const auto& c : by_depth) {
      // Mirror: j in out_reach(i) iff i in in_reach(j); degrees are set sizes.
      for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
        for (NodeIndex j : c.out_reach(i)) CHECK(c.in_table().contains(j, i));
        CHECK(c.out_degree(i) == c.out_reach(i).size());
        CHECK(c.in_degree(i) == c.in_reach(i).size());
      }
      // Duality with the reversed graph.
      CHECK(c.in_table() == local_closure(reversed, c.depth()).out_table());
    }

    // The exact closure is idempotent.
    auto full = local_closure(g, Depth::unbounded());
    auto again = local_closure(closure_graph(g, full), Depth::unbounded());
    for (NodeIndex i = 0; i < g.num_nodes(); ++i) {
      auto a = full.out_reach(i);
      auto b = again.out_reach(i);
      CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
    }
  }
}

TEST_CASE("local_closure is independent of the worker count") {
  auto g = reachsym::testing::power_law_digraph(3000, 9000, 7);
  auto one = local_closure(g, Depth::bounded(2), 1);
  auto many = local_closure(g, Depth::bounded(2), 6);
  CHECK(one.out_table() == many.out_table());
  CHECK(one.in_table() == many.in_table());
}
