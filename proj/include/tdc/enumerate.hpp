#ifndef TDC_ENUMERATE_HPP
#define TDC_ENUMERATE_HPP

#include <cstdint>
#include <functional>

#include "tdc/graph.hpp"

namespace tdc {

// Upper-triangle adjacency bitstring of g, packed so that numeric order
// equals lexicographic order of the bits (pair (0,1) is the most
// significant bit, column-major order as in graph6). Only defined for
// n <= 8; larger graphs do not fit the exhaustive canonicalizer anyway.
std::uint64_t edge_bitstring(const Graph& g);

// Lexicographically least bitstring over all vertex relabelings, by
// exhaustive permutation. n <= 8.
std::uint64_t canonical_edge_bitstring(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

// Streams every labeled simple graph on n vertices with minimum degree at
// least min_degree, in increasing bitstring order, each exactly once.
// With dedup_isomorphs the stream is reduced to one representative per
// isomorphism class: exactly the graphs equal to their canonical form.
// The visitor returns false to stop early. Returns the number of graphs
// visited. 1 <= n <= 8.
std::uint64_t enumerate_graphs(int n, int min_degree,
                               const std::function<bool(const Graph&)>& visit,
                               bool dedup_isomorphs = false);

// Closed-form count of labeled graphs on n vertices without isolated
// vertices (inclusion-exclusion over the isolated set); cross-check for
// the enumerator.
std::uint64_t labeled_graphs_without_isolated(int n);

} // namespace tdc

#endif
