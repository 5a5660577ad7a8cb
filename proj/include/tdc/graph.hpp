#ifndef TDC_GRAPH_HPP
#define TDC_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace tdc {

// Vertex subset as a bitmask; bit i is vertex i. Everything in this library
// runs on small graphs (at most 64 vertices), so one word is enough.
using VertexSet = std::uint64_t;

std::vector<int> set_to_vertices(VertexSet s);

// Simple undirected graph on vertices 0..n-1. Immutable after construction:
// no self-loops, no duplicate edges, endpoints in range.
class Graph {
public:
    static constexpr int max_vertices = 64;

    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const { return m_; }

    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    bool has_isolated_vertex() const { return n_ > 0 && min_degree() == 0; }

    // Edges as pairs {i,j} with i<j, sorted lexicographically.
    std::vector<std::pair<int, int>> edge_list() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<VertexSet> adj_;
};

// Generators. Vertex layouts are fixed so colorings transfer by index
// arithmetic between a graph and its derived constructions.
Graph path(int n);                                         // edges {i,i+1}
Graph cycle(int n);                                        // path + closing edge
Graph wheel(int n);                                        // hub = vertex 0, rim = cycle(n) on 1..n
Graph complete(int n);
Graph complete_multipartite(const std::vector<int>& parts); // parts laid out consecutively

Graph complement(const Graph& g);

// Mycielskian M(G): originals v_i keep indices 0..n-1, shadow of v_i is
// n+i, and the apex adjacent to all shadows is 2n. Shadow n+i is adjacent
// to exactly the G-neighbors of v_i plus the apex.
Graph mycielskian(const Graph& g);
Graph iterated_mycielskian(Graph g, int t);

} // namespace tdc

#endif
