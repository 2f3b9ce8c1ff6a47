#ifndef CHORD3_BOOKEMBED_HPP
#define CHORD3_BOOKEMBED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "chord3/instance.hpp"
#include "chord3/solver.hpp"

namespace chord3 {

// A graph with the fixed vertex order 1..vertex_count; edges keep the index
// order in which they were given.
struct OrderedGraph {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;  // 1-based endpoints, u != v

    int edge_count() const { return static_cast<int>(edges.size()); }
};

// Page in {1,2,3} per edge index.
struct PageAssignment {
    std::vector<int> page;

    bool operator==(const PageAssignment&) const = default;
};

// True iff edges {a,b}, {c,d} interleave under the vertex order:
// a < c < b < d after sorting each pair.
bool edges_interleave(std::pair<int, int> e1, std::pair<int, int> e2);

struct CircleReduction {
    Instance instance;
    std::vector<int> chord_of_edge;  // edge index -> chord vertex id
};

// One chord per edge over 2m positions grouped into per-vertex blocks laid
// clockwise in vertex order. Within a block, ends of backward edges come
// first, then forward edges, each group sorted by the far endpoint in
// descending order; that nesting makes chords cross exactly when their edges
// interleave, which the construction asserts.
CircleReduction to_circle_instance(const OrderedGraph& graph);

// Decides whether the edges fit on three pages with no same-page interleaving
// pair, via list 3-coloring of the chord diagram; red, green, blue map to
// pages 1, 2, 3.
std::optional<PageAssignment> embed3(const OrderedGraph& graph, const SolveOptions& options = {});

// Definition check, independent of the chord construction: no same-page edge
// pair interleaves. The assignment must cover every edge.
bool validate_pages(const OrderedGraph& graph, const PageAssignment& pages);

}  // namespace chord3

#endif
