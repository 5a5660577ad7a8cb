#include "tdc/enumerate.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "tdc/errors.hpp"

namespace tdc {

namespace {

constexpr int max_enum_vertices = 8;

// Column-major upper-triangle pair order: (0,1),(0,2),(1,2),(0,3),...
std::vector<std::pair<int, int>> pair_order(int n)
{
    std::vector<std::pair<int, int>> pairs;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            pairs.emplace_back(i, j);
    return pairs;
}

std::uint64_t bitstring_under(const Graph& g, const std::vector<int>& relabel,
                              const std::vector<std::pair<int, int>>& pairs)
{
    std::uint64_t bits = 0;
    for (auto [i, j] : pairs)
        bits = (bits << 1) | (g.has_edge(relabel[static_cast<std::size_t>(i)],
                                         relabel[static_cast<std::size_t>(j)])
                                  ? 1u
                                  : 0u);
    return bits;
}

} // namespace

std::uint64_t edge_bitstring(const Graph& g)
{
    if (g.order() > max_enum_vertices)
        throw InvalidParameter("edge_bitstring supports n <= 8");
    std::vector<int> identity(static_cast<std::size_t>(g.order()));
    std::iota(identity.begin(), identity.end(), 0);
    return bitstring_under(g, identity, pair_order(g.order()));
}

std::uint64_t canonical_edge_bitstring(const Graph& g)
{
    int n = g.order();
    if (n > max_enum_vertices)
        throw InvalidParameter("canonical form by exhaustive permutation supports n <= 8");
    auto pairs = pair_order(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = bitstring_under(g, perm, pairs);
    while (std::next_permutation(perm.begin(), perm.end()))
        best = std::min(best, bitstring_under(g, perm, pairs));
    return best;
}

bool is_isomorphic(const Graph& a, const Graph& b)
{
    if (a.order() != b.order() || a.size() != b.size())
        return false;
    return canonical_edge_bitstring(a) == canonical_edge_bitstring(b);
}

std::uint64_t enumerate_graphs(int n, int min_degree,
                               const std::function<bool(const Graph&)>& visit,
                               bool dedup_isomorphs)
{
    if (n < 1 || n > max_enum_vertices)
        throw InvalidParameter("enumerate_graphs supports 1 <= n <= 8, got " + std::to_string(n));
    auto pairs = pair_order(n);
    int nbits = static_cast<int>(pairs.size());
    std::uint64_t visited = 0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nbits); ++bits) {
        std::array<int, max_enum_vertices> deg{};
        std::vector<std::pair<int, int>> edges;
        for (int p = 0; p < nbits; ++p) {
            if ((bits >> (nbits - 1 - p)) & 1u) {
                auto [i, j] = pairs[static_cast<std::size_t>(p)];
                ++deg[static_cast<std::size_t>(i)];
                ++deg[static_cast<std::size_t>(j)];
                edges.emplace_back(i, j);
            }
        }
        if (*std::min_element(deg.begin(), deg.begin() + n) < min_degree)
            continue;
        Graph g(n, edges);
        if (dedup_isomorphs && canonical_edge_bitstring(g) != bits)
            continue;
        ++visited;
        if (!visit(g))
            break;
    }
    return visited;
}

std::uint64_t labeled_graphs_without_isolated(int n)
{
    // sum_k (-1)^k C(n,k) 2^C(n-k,2)
    auto choose2 = [](int m) { return m * (m - 1) / 2; };
    std::uint64_t binom = 1;
    std::int64_t total = 0;
    for (int k = 0; k <= n; ++k) {
        std::int64_t term = static_cast<std::int64_t>(binom) << choose2(n - k);
        total += (k % 2 == 0) ? term : -term;
        binom = binom * static_cast<std::uint64_t>(n - k) / (k + 1);
    }
    return static_cast<std::uint64_t>(total);
}

} // namespace tdc
