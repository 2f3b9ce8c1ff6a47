#include "chord3/chords.hpp"

#include <algorithm>

namespace chord3 {

namespace {

int mod_dist(int from, int to, int universe) {
    int d = (to - from) % universe;
    return d < 0 ? d + universe : d;
}

// pos strictly inside the clockwise-open interval (from, to)
bool strictly_inside(int pos, int from, int to, int universe) {
    int d = mod_dist(from, pos, universe);
    return d > 0 && d < mod_dist(from, to, universe);
}

}  // namespace

bool arc_contains(const CircArc& arc, int universe, int pos) {
    if (arc.len == 0) return false;
    return mod_dist(arc.start, pos, universe) < arc.len;
}

bool arcs_disjoint(const CircArc& a, const CircArc& b, int universe) {
    if (a.len == 0 || b.len == 0) return true;
    return !arc_contains(a, universe, b.start) && !arc_contains(b, universe, a.start);
}

bool arc_subset(const CircArc& inner, const CircArc& outer, int universe) {
    if (inner.len == 0) return true;
    if (inner.len > outer.len) return false;
    return mod_dist(outer.start, inner.start, universe) + inner.len <= outer.len;
}

ChordDiagram::ChordDiagram(int universe_size, int vertex_capacity)
    : universe_(universe_size),
      chords_(vertex_capacity),
      live_(vertex_capacity, 0),
      owner_(universe_size, -1) {
    detail::require(universe_size >= 0, "negative universe");
}

ChordDiagram ChordDiagram::from_chords(int universe_size, const std::vector<Chord>& chords) {
    ChordDiagram d(universe_size, static_cast<int>(chords.size()));
    for (int v = 0; v < static_cast<int>(chords.size()); ++v) d.add(v, chords[v]);
    return d;
}

bool ChordDiagram::live(int v) const {
    return v >= 0 && v < vertex_capacity() && live_[v];
}

const Chord& ChordDiagram::chord(int v) const {
    detail::require(live(v), "chord() on a dead or unknown vertex");
    return chords_[v];
}

std::vector<int> ChordDiagram::live_vertices() const {
    std::vector<int> out;
    out.reserve(live_count_);
    for (int v = 0; v < vertex_capacity(); ++v)
        if (live_[v]) out.push_back(v);
    return out;
}

int ChordDiagram::owner(int pos) const {
    detail::require(pos >= 0 && pos < universe_, "position outside universe");
    return owner_[pos];
}

void ChordDiagram::add(int v, Chord c) {
    detail::require(v >= 0 && v < vertex_capacity(), "vertex id outside capacity");
    detail::require(!live_[v], "vertex already present");
    detail::require(c.p != c.q, "degenerate chord");
    detail::require(c.p >= 0 && c.p < universe_ && c.q >= 0 && c.q < universe_,
                    "endpoint outside universe");
    detail::require(owner_[c.p] == -1 && owner_[c.q] == -1, "duplicate endpoint position");
    chords_[v] = c;
    live_[v] = 1;
    owner_[c.p] = v;
    owner_[c.q] = v;
    ++live_count_;
}

void ChordDiagram::erase(int v) {
    detail::require(live(v), "erase() on a dead or unknown vertex");
    owner_[chords_[v].p] = -1;
    owner_[chords_[v].q] = -1;
    live_[v] = 0;
    --live_count_;
}

bool crosses(const Chord& a, const Chord& b, int universe) {
    detail::require(a.p != a.q && b.p != b.q, "degenerate chord");
    detail::require(a.p != b.p && a.p != b.q && a.q != b.p && a.q != b.q,
                    "chords share an endpoint");
    return strictly_inside(b.p, a.p, a.q, universe) != strictly_inside(b.q, a.p, a.q, universe);
}

const char* to_string(ArcLabel label) {
    switch (label) {
        case ArcLabel::L: return "L";
        case ArcLabel::T: return "T";
        case ArcLabel::R: return "R";
        case ArcLabel::B: return "B";
    }
    return "?";
}

bool ArcPair::is(ArcLabel a, ArcLabel b) const {
    return (first == a && second == b) || (first == b && second == a);
}

CirclePartition make_partition(int universe, CircArc l, CircArc t, CircArc r, CircArc b) {
    detail::require(universe > 0, "partition over an empty universe");
    const CircArc arcs[4] = {l, t, r, b};
    long total = 0;
    for (const CircArc& a : arcs) {
        detail::require(a.len >= 0 && a.len <= universe, "arc length out of range");
        detail::require(a.start >= 0 && a.start < universe, "arc anchor outside universe");
        total += a.len;
    }
    detail::require(total == universe, "arcs do not cover the universe");
    for (int i = 0; i < 4; ++i) {
        int end = (arcs[i].start + arcs[i].len) % universe;
        detail::require(end == arcs[(i + 1) % 4].start, "arcs not consecutive");
    }
    CirclePartition p;
    p.universe = universe;
    p.arcs = {l, t, r, b};
    return p;
}

CirclePartition rotate(const CirclePartition& partition) {
    return make_partition(partition.universe, partition.t(), partition.r(), partition.b(),
                          partition.l());
}

namespace {

ArcLabel arc_of(const CirclePartition& partition, int pos) {
    for (int i = 0; i < 4; ++i)
        if (arc_contains(partition.arcs[i], partition.universe, pos))
            return static_cast<ArcLabel>(i);
    detail::contract_fail("position not covered by partition");
}

}  // namespace

ArcPair classify(const Chord& chord, const CirclePartition& partition) {
    ArcLabel a = arc_of(partition, chord.p);
    ArcLabel b = arc_of(partition, chord.q);
    if (static_cast<int>(a) > static_cast<int>(b)) std::swap(a, b);
    return ArcPair{a, b};
}

std::vector<int> chords_between(const ChordDiagram& diagram, const CircArc& arc_a,
                                const CircArc& arc_b) {
    detail::require(arcs_disjoint(arc_a, arc_b, diagram.universe_size()), "arcs overlap");
    std::vector<int> out;
    if (arc_a.len == 0 || arc_b.len == 0) return out;
    const int universe = diagram.universe_size();
    for (int v : diagram.live_vertices()) {
        const Chord& c = diagram.chord(v);
        bool pa = arc_contains(arc_a, universe, c.p);
        bool qa = arc_contains(arc_a, universe, c.q);
        bool pb = arc_contains(arc_b, universe, c.p);
        bool qb = arc_contains(arc_b, universe, c.q);
        if ((pa && qb) || (pb && qa)) out.push_back(v);
    }
    return out;
}

int endpoint_count(const ChordDiagram& diagram, const CircArc& arc) {
    int count = 0;
    const int universe = diagram.universe_size();
    for (int v : diagram.live_vertices()) {
        const Chord& c = diagram.chord(v);
        if (arc_contains(arc, universe, c.p)) ++count;
        if (arc_contains(arc, universe, c.q)) ++count;
    }
    return count;
}

CirclePartition quartile_partition(const ChordDiagram& diagram) {
    const int n = diagram.live_count();
    if (n < 1) throw std::invalid_argument("quartile_partition: empty diagram");
    const int universe = diagram.universe_size();

    std::vector<int> endpoints;
    endpoints.reserve(2 * n);
    for (int v : diagram.live_vertices()) {
        endpoints.push_back(diagram.chord(v).p);
        endpoints.push_back(diagram.chord(v).q);
    }
    std::sort(endpoints.begin(), endpoints.end());

    const int k = n / 2;
    // Cut after the k-th, 2k-th and 3k-th live endpoint clockwise from 0.
    int c1 = k > 0 ? endpoints[k - 1] + 1 : 0;
    int c2 = k > 0 ? endpoints[2 * k - 1] + 1 : 0;
    int c3 = k > 0 ? endpoints[3 * k - 1] + 1 : 0;
    CircArc l{0, c1};
    CircArc t{c1 % universe, c2 - c1};
    CircArc r{c2 % universe, c3 - c2};
    CircArc b{c3 % universe, universe - c3};
    return make_partition(universe, l, t, r, b);
}

std::pair<CircArc, CircArc> split_arc(const ChordDiagram& diagram, const CircArc& arc,
                                      SplitAnchor anchor) {
    const int universe = diagram.universe_size();
    std::vector<int> offsets;  // live endpoint offsets from arc.start, clockwise
    for (int v : diagram.live_vertices()) {
        const Chord& c = diagram.chord(v);
        for (int pos : {c.p, c.q})
            if (arc_contains(arc, universe, pos))
                offsets.push_back((pos - arc.start + universe) % universe);
    }
    std::sort(offsets.begin(), offsets.end());
    const int x = static_cast<int>(offsets.size());
    detail::require(x >= 2, "split_arc needs at least two live endpoints");

    const int front = anchor == SplitAnchor::Front ? (x + 1) / 2 : x / 2;
    const int cut = offsets[front - 1] + 1;  // boundary strictly between live endpoints
    CircArc first{arc.start, cut};
    CircArc second{(arc.start + cut) % universe, arc.len - cut};
    return {first, second};
}

}  // namespace chord3
