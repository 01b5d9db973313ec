#pragma once

#include <iosfwd>
#include <string>

#include "reachsym/graph.hpp"

namespace reachsym {

inline constexpr int kDefaultPrecision = 6;

/// Reads a TSV edge list: `src<TAB>dst[<TAB>weight]` per line, `#` comments
/// and blank lines skipped. Nodes are interned in first-appearance order.
/// When `weighted` is false a third column is accepted and ignored.
///
/// Throws ParseError (with line number) on a malformed line, and
/// ValidationError on a missing, zero, negative or non-finite weight when
/// `weighted` is set.
DirectedGraph load_edge_list(std::istream& in, bool weighted);

/// Same, from a file path. Throws IoError when the file cannot be opened.
DirectedGraph load_edge_list_file(const std::string& path, bool weighted);

/// Fixed-point decimal rendering used by every writer in the library.
std::string format_weight(double w, int precision = kDefaultPrecision);

/// Writes `labelU<TAB>labelV<TAB>weight` per edge in (u, v) order, whatever
/// the order of `g.edges`.
/// Throws IoError if the sink goes bad.
void write_undirected(const UndirectedWeightedGraph& g, std::ostream& out,
                      int precision = kDefaultPrecision);

}  // namespace reachsym
