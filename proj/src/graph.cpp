#include "tdc/graph.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "tdc/errors.hpp"

namespace tdc {

std::vector<int> set_to_vertices(VertexSet s)
{
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges)
{
    if (n < 0 || n > max_vertices)
        throw InvalidParameter("vertex count must be in 0.." + std::to_string(max_vertices)
                               + ", got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidParameter("edge endpoint out of range: " + std::to_string(u) + " "
                                   + std::to_string(v));
        if (u == v)
            throw InvalidParameter("self-loop at vertex " + std::to_string(u));
        if (has_edge(u, v))
            throw InvalidParameter("duplicate edge " + std::to_string(u) + " "
                                   + std::to_string(v));
        adj_[u] |= VertexSet{1} << v;
        adj_[v] |= VertexSet{1} << u;
        ++m_;
    }
}

int Graph::degree(int v) const
{
    return std::popcount(adj_[v]);
}

int Graph::min_degree() const
{
    int d = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v)
        d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const
{
    int d = 0;
    for (int v = 0; v < n_; ++v)
        d = std::max(d, degree(v));
    return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const
{
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (VertexSet s = adj_[u] >> (u + 1) << (u + 1); s; s &= s - 1)
            out.emplace_back(u, std::countr_zero(s));
    return out;
}

Graph path(int n)
{
    if (n < 1)
        throw InvalidParameter("path requires n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle(int n)
{
    if (n < 3)
        throw InvalidParameter("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph wheel(int n)
{
    if (n < 3)
        throw InvalidParameter("wheel requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        edges.emplace_back(0, i);
    for (int i = 1; i < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return Graph(n + 1, edges);
}

Graph complete(int n)
{
    if (n < 1)
        throw InvalidParameter("complete requires n >= 1");
    return complete_multipartite(std::vector<int>(static_cast<std::size_t>(n), 1));
}

Graph complete_multipartite(const std::vector<int>& parts)
{
    if (parts.empty())
        throw InvalidParameter("complete_multipartite requires at least one part");
    for (int p : parts)
        if (p < 1)
            throw InvalidParameter("part sizes must be >= 1");
    int n = std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of(static_cast<std::size_t>(n));
    int v = 0;
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int k = 0; k < parts[p]; ++k)
            part_of[static_cast<std::size_t>(v++)] = static_cast<int>(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[static_cast<std::size_t>(i)] != part_of[static_cast<std::size_t>(j)])
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph complement(const Graph& g)
{
    int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.has_edge(i, j))
                edges.emplace_back(i, j);
    return Graph(n, edges);
}

Graph mycielskian(const Graph& g)
{
    int n = g.order();
    if (2 * n + 1 > Graph::max_vertices)
        throw InvalidParameter("mycielskian result would exceed " + std::to_string(Graph::max_vertices)
                               + " vertices");
    int apex = 2 * n;
    std::vector<std::pair<int, int>> edges = g.edge_list();
    for (auto [i, j] : g.edge_list()) {
        edges.emplace_back(n + i, j);
        edges.emplace_back(i, n + j);
    }
    for (int i = 0; i < n; ++i)
        edges.emplace_back(n + i, apex);
    return Graph(2 * n + 1, edges);
}

Graph iterated_mycielskian(Graph g, int t)
{
    if (t < 0)
        throw InvalidParameter("iterated_mycielskian requires t >= 0");
    for (int k = 0; k < t; ++k)
        g = mycielskian(g);
    return g;
}

} // namespace tdc
