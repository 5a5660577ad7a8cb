#include "tdc/coloring.hpp"

#include <algorithm>
#include <sstream>

#include "tdc/errors.hpp"

namespace tdc {

Coloring::Coloring(std::vector<int> assignment) : assignment_(std::move(assignment))
{
    for (int c : assignment_) {
        if (c < 0)
            throw InvalidColoring("negative color index");
        k_ = std::max(k_, c + 1);
    }
    std::vector<char> used(static_cast<std::size_t>(k_), 0);
    for (int c : assignment_)
        used[static_cast<std::size_t>(c)] = 1;
    for (int c = 0; c < k_; ++c)
        if (!used[static_cast<std::size_t>(c)])
            throw InvalidColoring("color " + std::to_string(c) + " is unused");
}

VertexSet Coloring::class_members(int color) const
{
    if (color < 0 || color >= k_)
        throw InvalidParameter("color index out of range");
    VertexSet s = 0;
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        if (assignment_[v] == color)
            s |= VertexSet{1} << v;
    return s;
}

std::vector<VertexSet> Coloring::class_masks() const
{
    std::vector<VertexSet> masks(static_cast<std::size_t>(k_), 0);
    for (std::size_t v = 0; v < assignment_.size(); ++v)
        masks[static_cast<std::size_t>(assignment_[v])] |= VertexSet{1} << v;
    return masks;
}

Coloring Coloring::canonical() const
{
    std::vector<int> remap(static_cast<std::size_t>(k_), -1);
    std::vector<int> out(assignment_.size());
    int next = 0;
    for (std::size_t v = 0; v < assignment_.size(); ++v) {
        int& slot = remap[static_cast<std::size_t>(assignment_[v])];
        if (slot < 0)
            slot = next++;
        out[v] = slot;
    }
    return Coloring(std::move(out));
}

bool Coloring::is_canonical() const
{
    int next = 0;
    for (int c : assignment_) {
        if (c > next)
            return false;
        if (c == next)
            ++next;
    }
    return true;
}

std::vector<ColorClass> color_classes(const Coloring& f)
{
    std::vector<ColorClass> out;
    auto masks = f.class_masks();
    for (int c = 0; c < f.num_colors(); ++c)
        out.push_back({c, masks[static_cast<std::size_t>(c)]});
    return out;
}

std::string to_string(const Coloring& f)
{
    std::ostringstream os;
    for (int v = 0; v < f.num_vertices(); ++v) {
        if (v)
            os << ' ';
        os << f.color_of(v);
    }
    return os.str();
}

Coloring coloring_from_string(std::string_view text)
{
    std::istringstream is{std::string(text)};
    std::vector<int> assignment;
    int c;
    while (is >> c)
        assignment.push_back(c);
    if (!is.eof())
        throw InvalidColoring("coloring string must contain only integers");
    return Coloring(std::move(assignment));
}

namespace {

void require_matching(const Graph& g, const Coloring& f)
{
    if (f.num_vertices() != g.order())
        throw InvalidColoring("coloring covers " + std::to_string(f.num_vertices())
                              + " vertices but the graph has " + std::to_string(g.order()));
}

} // namespace

bool is_proper(const Graph& g, const Coloring& f)
{
    require_matching(g, f);
    for (auto [u, v] : g.edge_list())
        if (f.color_of(u) == f.color_of(v))
            return false;
    return true;
}

bool is_total_dominator(const Graph& g, const Coloring& f)
{
    require_matching(g, f);
    if (!is_proper(g, f))
        return false;
    auto masks = f.class_masks();
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nb = g.neighbors(v);
        bool dominated = false;
        for (VertexSet m : masks) {
            if ((m & ~nb) == 0) { // m nonempty by the no-empty-class invariant
                dominated = true;
                break;
            }
        }
        if (!dominated)
            return false;
    }
    return true;
}

VertexSet common_neighborhood(const Graph& g, VertexSet s)
{
    if (s == 0)
        throw InvalidParameter("common_neighborhood of the empty set");
    if (g.order() < 64 && (s >> g.order()) != 0)
        throw InvalidParameter("vertex set contains vertices outside the graph");
    VertexSet cn = ~VertexSet{0};
    for (int v : set_to_vertices(s))
        cn &= g.neighbors(v);
    if (g.order() < 64)
        cn &= (VertexSet{1} << g.order()) - 1;
    return cn;
}

VertexSet private_neighborhood(const Graph& g, const Coloring& f, int i)
{
    require_matching(g, f);
    if (i < 0 || i >= f.num_colors())
        throw InvalidParameter("color index out of range");
    auto masks = f.class_masks();
    VertexSet pn = 0;
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nb = g.neighbors(v);
        int dominated = 0;
        bool dominates_i = false;
        for (int c = 0; c < f.num_colors(); ++c) {
            if ((masks[static_cast<std::size_t>(c)] & ~nb) == 0) {
                ++dominated;
                if (c == i)
                    dominates_i = true;
            }
        }
        if (dominates_i && dominated == 1)
            pn |= VertexSet{1} << v;
    }
    return pn;
}

} // namespace tdc
