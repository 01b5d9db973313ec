#include "reachsym/condensation.hpp"

#include <algorithm>
#include <limits>

namespace reachsym {

Condensation condensation(const DirectedGraph& g) {
  const std::size_t n = g.num_nodes();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

  std::vector<std::uint32_t> order(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<NodeIndex> stack;
  std::vector<std::uint32_t> tarjan_id(n, kUnvisited);
  std::uint32_t next_order = 0;
  std::uint32_t num_sccs = 0;

  struct Frame {
    NodeIndex node;
    std::size_t next_child;
  };
  std::vector<Frame> call;

  for (NodeIndex root = 0; root < n; ++root) {
    if (order[root] != kUnvisited) continue;
    call.push_back({root, 0});
    order[root] = low[root] = next_order++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& f = call.back();
      auto succ = g.successors(f.node);
      if (f.next_child < succ.size()) {
        NodeIndex w = succ[f.next_child++];
        if (order[w] == kUnvisited) {
          order[w] = low[w] = next_order++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[f.node] = std::min(low[f.node], order[w]);
        }
        continue;
      }
      NodeIndex v = f.node;
      call.pop_back();
      if (!call.empty()) {
        NodeIndex parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
      if (low[v] == order[v]) {
        NodeIndex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          tarjan_id[w] = num_sccs;
        } while (w != v);
        ++num_sccs;
      }
    }
  }

  // Tarjan emits SCCs in reverse topological order.
  Condensation c;
  c.component.resize(n);
  for (std::size_t v = 0; v < n; ++v) c.component[v] = num_sccs - 1 - tarjan_id[v];
  c.dag_successors.resize(num_sccs);
  for (NodeIndex u = 0; u < n; ++u) {
    for (NodeIndex v : g.successors(u)) {
      if (c.component[u] != c.component[v]) {
        c.dag_successors[c.component[u]].push_back(c.component[v]);
      }
    }
  }
  for (auto& s : c.dag_successors) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
  return c;
}

}  // namespace reachsym
