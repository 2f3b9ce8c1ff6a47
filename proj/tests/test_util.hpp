#ifndef CHORD3_TEST_UTIL_HPP
#define CHORD3_TEST_UTIL_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "chord3/bookembed.hpp"
#include "chord3/instance.hpp"

namespace chord3::testutil {

inline Instance make_test_instance(int universe, const std::vector<Chord>& chords,
                                   std::vector<ColorSet> lists) {
    return make_instance(ChordDiagram::from_chords(universe, chords), std::move(lists));
}

inline Instance full_list_instance(int universe, const std::vector<Chord>& chords) {
    return make_test_instance(universe, chords,
                              std::vector<ColorSet>(chords.size(), ColorSet::all()));
}

// Four pairwise-crossing chords; the crossing graph is K4, so no 3-coloring.
inline Instance k4_instance() {
    return full_list_instance(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

// Five chords whose crossing graph is the 5-cycle 0-1-2-3-4-0.
inline Instance c5_instance() {
    return full_list_instance(10, {{0, 3}, {2, 5}, {4, 7}, {6, 9}, {8, 1}});
}

// Thin diagrams with long induced paths/cycles in the crossing graph; these
// drive the solver through several recursion levels, unlike dense random
// matchings which die at the first branching step.
inline Instance cycle_instance(int n, int swaps, std::uint64_t seed) {
    std::vector<Chord> chords(n);
    for (int i = 0; i < n; ++i) chords[i] = Chord{2 * i, (2 * i + 3) % (2 * n)};
    std::mt19937_64 rng(seed);
    for (int s = 0; s < swaps; ++s) {
        int a = static_cast<int>(rng() % n);
        int b = static_cast<int>(rng() % n);
        if (a == b) continue;
        std::swap(chords[a].q, chords[b].q);
        if (chords[a].p == chords[a].q || chords[b].p == chords[b].q)
            std::swap(chords[a].q, chords[b].q);  // would be degenerate, undo
    }
    return full_list_instance(2 * n, chords);
}

// Plain product enumeration over the lists, an oracle independent of every
// solver path. Exponential without pruning; keep n small.
inline bool enum3_colorable(const Instance& inst) {
    std::vector<int> live = inst.diagram.live_vertices();
    const int n = static_cast<int>(live.size());
    std::vector<int> pick(n, 0);
    for (;;) {
        bool valid = true;
        for (int i = 0; i < n && valid; ++i)
            valid = inst.list(live[i]).contains(kColorOrder[pick[i]]);
        for (int i = 0; i < n && valid; ++i)
            for (int j = i + 1; j < n && valid; ++j)
                if (pick[i] == pick[j] &&
                    crosses(inst.diagram.chord(live[i]), inst.diagram.chord(live[j]),
                            inst.diagram.universe_size()))
                    valid = false;
        if (valid) return true;
        int at = n - 1;
        while (at >= 0 && pick[at] == 2) pick[at--] = 0;
        if (at < 0) return false;
        ++pick[at];
    }
}

// Exhaustive 3^m page search on the interleaving definition alone (no chord
// construction involved); prunes assignments already in conflict.
inline bool pages3_exhaustive(const OrderedGraph& graph, std::vector<int>& pages,
                              std::size_t at = 0) {
    if (at == graph.edges.size()) return true;
    for (int page = 1; page <= 3; ++page) {
        bool ok = true;
        for (std::size_t e = 0; e < at && ok; ++e)
            ok = pages[e] != page || !edges_interleave(graph.edges[e], graph.edges[at]);
        if (!ok) continue;
        pages[at] = page;
        if (pages3_exhaustive(graph, pages, at + 1)) return true;
    }
    return false;
}

inline bool pages3_exhaustive(const OrderedGraph& graph) {
    std::vector<int> pages(graph.edges.size(), 0);
    return pages3_exhaustive(graph, pages);
}

inline OrderedGraph complete_graph(int n) {
    OrderedGraph g;
    g.vertex_count = n;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.edges.emplace_back(u, v);
    return g;
}

inline OrderedGraph random_ordered_graph(int max_vertices, int max_edges, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    OrderedGraph g;
    g.vertex_count = 3 + static_cast<int>(rng() % (max_vertices - 2));
    std::vector<std::pair<int, int>> all;
    for (int u = 1; u <= g.vertex_count; ++u)
        for (int v = u + 1; v <= g.vertex_count; ++v) all.emplace_back(u, v);
    for (int i = static_cast<int>(all.size()) - 1; i > 0; --i)
        std::swap(all[i], all[rng() % (i + 1)]);
    int m = static_cast<int>(rng() % (std::min<std::size_t>(max_edges, all.size()) + 1));
    g.edges.assign(all.begin(), all.begin() + m);
    return g;
}

}  // namespace chord3::testutil

#endif
