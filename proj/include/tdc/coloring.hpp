#ifndef TDC_COLORING_HPP
#define TDC_COLORING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "tdc/graph.hpp"

namespace tdc {

// Vertex -> color assignment with colors 0..k-1, every color used at least
// once (empty color classes are forbidden). Properness is a predicate, not
// an invariant, so proof-style constructions can be represented and then
// judged by the checker.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<int> assignment);

    int num_vertices() const { return static_cast<int>(assignment_.size()); }
    int num_colors() const { return k_; }
    int color_of(int v) const { return assignment_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& assignment() const { return assignment_; }

    VertexSet class_members(int color) const;
    std::vector<VertexSet> class_masks() const;

    // Canonical form: color indices renumbered in order of first appearance
    // by vertex index, so the class containing vertex 0 gets color 0.
    // Idempotent, and invariant under permuting color names.
    Coloring canonical() const;
    bool is_canonical() const;

    bool operator==(const Coloring&) const = default;

private:
    std::vector<int> assignment_;
    int k_ = 0;
};

struct ColorClass {
    int color = 0;
    VertexSet members = 0;
};
std::vector<ColorClass> color_classes(const Coloring& f);

// Serialization: whitespace-separated color indices in vertex order.
std::string to_string(const Coloring& f);
Coloring coloring_from_string(std::string_view text);

bool is_proper(const Graph& g, const Coloring& f);

// True iff f is proper and every vertex is adjacent to all members of some
// color class. Non-proper colorings yield false, not an error.
bool is_total_dominator(const Graph& g, const Coloring& f);

// Vertices adjacent to every member of s (open neighborhoods, so members
// of s never qualify on their own account).
VertexSet common_neighborhood(const Graph& g, VertexSet s);

// Vertices that dominate class i and no other class of f.
VertexSet private_neighborhood(const Graph& g, const Coloring& f, int i);

} // namespace tdc

#endif
