#include "chord3/bookembed.hpp"

#include <algorithm>

namespace chord3 {

bool edges_interleave(std::pair<int, int> e1, std::pair<int, int> e2) {
    auto [a, b] = std::minmax(e1.first, e1.second);
    auto [c, d] = std::minmax(e2.first, e2.second);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

CircleReduction to_circle_instance(const OrderedGraph& graph) {
    const int m = graph.edge_count();
    std::vector<Chord> chords(m, Chord{-1, -1});

    // slot order within a vertex block: backward ends first, then forward
    // ends, each sorted by the far endpoint descending
    int next_position = 0;
    for (int v = 1; v <= graph.vertex_count; ++v) {
        std::vector<std::pair<int, int>> backward, forward;  // (far endpoint, edge index)
        for (int e = 0; e < m; ++e) {
            auto [a, b] = graph.edges[e];
            if (a == v && b < v) backward.emplace_back(b, e);
            if (b == v && a < v) backward.emplace_back(a, e);
            if (a == v && b > v) forward.emplace_back(b, e);
            if (b == v && a > v) forward.emplace_back(a, e);
        }
        auto by_far_desc = [](const std::pair<int, int>& x, const std::pair<int, int>& y) {
            return x.first > y.first;
        };
        std::sort(backward.begin(), backward.end(), by_far_desc);
        std::sort(forward.begin(), forward.end(), by_far_desc);
        for (const auto& group : {backward, forward}) {
            for (auto [far, e] : group) {
                (chords[e].p < 0 ? chords[e].p : chords[e].q) = next_position++;
            }
        }
    }
    detail::require(next_position == 2 * m, "every edge end must get a slot");

    Instance instance = make_instance(ChordDiagram::from_chords(2 * m, chords),
                                      std::vector<ColorSet>(m, ColorSet::all()));

    // The whole reduction stands on this equivalence; verify it outright.
    for (int e1 = 0; e1 < m; ++e1) {
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            bool chords_cross = crosses(chords[e1], chords[e2], 2 * m);
            detail::require(chords_cross == edges_interleave(graph.edges[e1], graph.edges[e2]),
                            "chord crossings must match edge interleavings");
        }
    }

    std::vector<int> identity(m);
    for (int e = 0; e < m; ++e) identity[e] = e;
    return CircleReduction{std::move(instance), std::move(identity)};
}

std::optional<PageAssignment> embed3(const OrderedGraph& graph, const SolveOptions& options) {
    CircleReduction reduction = to_circle_instance(graph);
    SolveResult result = solve(reduction.instance, options);
    if (!result.yes) return std::nullopt;

    PageAssignment pages;
    pages.page.resize(graph.edge_count());
    for (int e = 0; e < graph.edge_count(); ++e) {
        auto color = result.coloring.get(reduction.chord_of_edge[e]);
        detail::require(color.has_value(), "yes verdict left an edge uncolored");
        pages.page[e] = static_cast<int>(*color) + 1;  // red=1, green=2, blue=3
    }
    detail::require(validate_pages(graph, pages), "solver coloring broke the page condition");
    return pages;
}

bool validate_pages(const OrderedGraph& graph, const PageAssignment& pages) {
    const int m = graph.edge_count();
    if (static_cast<int>(pages.page.size()) != m) return false;
    for (int p : pages.page)
        if (p < 1 || p > 3) return false;
    for (int e1 = 0; e1 < m; ++e1)
        for (int e2 = e1 + 1; e2 < m; ++e2)
            if (pages.page[e1] == pages.page[e2] &&
                edges_interleave(graph.edges[e1], graph.edges[e2]))
                return false;
    return true;
}

}  // namespace chord3
