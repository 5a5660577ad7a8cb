#ifndef TDC_IO_HPP
#define TDC_IO_HPP

#include <string>
#include <string_view>

#include "tdc/graph.hpp"

namespace tdc {

// Edge-list text format: first line is the vertex count n, every further
// non-empty line is "i j" with 0 <= i,j < n and i != j. An edge may appear
// only once, in either orientation.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

// graph6: 6-bit encoding of the upper adjacency triangle in column-major
// order, each sextet offset by 63, most significant bit first. Single-byte
// order field only, so n <= 62. No ">>graph6<<" header.
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

} // namespace tdc

#endif
