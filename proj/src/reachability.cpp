#include "reachsym/reachability.hpp"

#include <algorithm>
#include <charconv>

#include "parallel.hpp"
#include "reachsym/errors.hpp"

namespace reachsym {

Depth Depth::bounded(std::uint32_t hops) {
  if (hops == 0) throw ValidationError("depth must be ≥ 1");
  return Depth(hops);
}

Depth Depth::parse(const std::string& text) {
  if (text == "inf" || text == "INF" || text == "infinity") return unbounded();
  long long value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("depth must be a positive integer or 'inf', got '" + text + "'");
  }
  if (value < 1) throw ValidationError("depth must be ≥ 1");
  if (value >= static_cast<long long>(kUnbounded)) return unbounded();
  return Depth(static_cast<std::uint32_t>(value));
}

std::string Depth::to_string() const {
  return is_unbounded() ? "inf" : std::to_string(hops_);
}

namespace {

// Reusable BFS scratch; `seen` is stamped per source so it never needs
// clearing.
struct BfsScratch {
  std::vector<std::uint32_t> seen;
  std::uint32_t stamp = 0;
  std::vector<NodeIndex> frontier;
  std::vector<NodeIndex> next;

  explicit BfsScratch(std::size_t n) : seen(n, 0) {}
};

void bounded_bfs_into(const DirectedGraph& g, NodeIndex source, Depth depth,
                      Direction direction, BfsScratch& s, std::vector<NodeIndex>& out) {
  out.clear();
  if (++s.stamp == 0) {
    std::fill(s.seen.begin(), s.seen.end(), 0);
    s.stamp = 1;
  }
  s.seen[source] = s.stamp;
  s.frontier.assign(1, source);
  bool reaches_self = false;
  for (std::uint32_t level = 1; !s.frontier.empty(); ++level) {
    if (!depth.is_unbounded() && level > depth.hops()) break;
    s.next.clear();
    for (NodeIndex u : s.frontier) {
      auto nbrs = direction == Direction::kOut ? g.successors(u) : g.predecessors(u);
      for (NodeIndex w : nbrs) {
        if (w == source) {
          reaches_self = true;
        } else if (s.seen[w] != s.stamp) {
          s.seen[w] = s.stamp;
          out.push_back(w);
          s.next.push_back(w);
        }
      }
    }
    std::swap(s.frontier, s.next);
  }
  if (reaches_self) out.push_back(source);
  std::sort(out.begin(), out.end());
}

}  // namespace

std::vector<NodeIndex> bfs_bounded(const DirectedGraph& g, NodeIndex source, Depth depth,
                                   Direction direction) {
  if (source >= g.num_nodes()) throw ValidationError("source node out of range");
  BfsScratch scratch(g.num_nodes());
  std::vector<NodeIndex> out;
  bounded_bfs_into(g, source, depth, direction, scratch, out);
  return out;
}

bool ReachTable::contains(NodeIndex u, NodeIndex v) const {
  auto row = (*this)[u];
  return std::binary_search(row.begin(), row.end(), v);
}

ReachTable ReachTable::transposed() const {
  const std::size_t n = num_nodes();
  std::vector<std::size_t> offsets(n + 1, 0);
  for (NodeIndex m : members_) ++offsets[m + 1];
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] += offsets[i];
  std::vector<NodeIndex> members(members_.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // Ascending row order keeps each transposed row sorted.
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v : (*this)[u]) members[cursor[v]++] = u;
  }
  return ReachTable(std::move(offsets), std::move(members));
}

LocalClosure::LocalClosure(Depth depth, ReachTable out_reach)
    : depth_(depth), out_(std::move(out_reach)), in_(out_.transposed()) {}

LocalClosure local_closure(const DirectedGraph& g, Depth depth, unsigned threads) {
  const std::size_t n = g.num_nodes();
  std::vector<std::vector<NodeIndex>> rows(n);
  threads = std::max(1u, threads);
  std::vector<BfsScratch> scratch;
  scratch.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) scratch.emplace_back(n);

  detail::parallel_chunks(n, threads, 256, [&](unsigned worker, std::size_t begin,
                                               std::size_t end) {
    std::vector<NodeIndex> buf;
    for (std::size_t i = begin; i < end; ++i) {
      bounded_bfs_into(g, static_cast<NodeIndex>(i), depth, Direction::kOut,
                       scratch[worker], buf);
      rows[i].assign(buf.begin(), buf.end());
    }
  });

  std::vector<std::size_t> offsets(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offsets[i + 1] = offsets[i] + rows[i].size();
  std::vector<NodeIndex> members;
  members.reserve(offsets[n]);
  for (auto& row : rows) {
    members.insert(members.end(), row.begin(), row.end());
    std::vector<NodeIndex>().swap(row);
  }
  return LocalClosure(depth, ReachTable(std::move(offsets), std::move(members)));
}

}  // namespace reachsym
