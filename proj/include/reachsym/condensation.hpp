#pragma once

#include <cstdint>
#include <vector>

#include "reachsym/graph.hpp"

namespace reachsym {

/// Strongly connected components and the DAG between them.
///
/// Component ids are contiguous and topologically ordered: every DAG edge
/// goes from a smaller id to a larger one, so id 0 is always a source.
struct Condensation {
  std::vector<std::uint32_t> component;                 // node -> SCC id
  std::vector<std::vector<std::uint32_t>> dag_successors;  // sorted, deduplicated

  std::size_t num_components() const noexcept { return dag_successors.size(); }
};

/// Iterative Tarjan; safe on deep graphs.
Condensation condensation(const DirectedGraph& g);

}  // namespace reachsym
