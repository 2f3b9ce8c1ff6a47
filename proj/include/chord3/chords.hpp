#ifndef CHORD3_CHORDS_HPP
#define CHORD3_CHORDS_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chord3 {

namespace detail {
[[noreturn]] inline void contract_fail(const std::string& what) {
    throw std::logic_error("contract violation: " + what);
}
inline void require(bool ok, const char* what) {
    if (!ok) contract_fail(what);
}
}  // namespace detail

// A chord is an unordered pair of endpoint positions on the circle.
struct Chord {
    int p = -1;
    int q = -1;

    bool operator==(const Chord&) const = default;
};

// Contiguous run of endpoint positions, clockwise from `start`.
// len == 0 is the empty arc anchored at `start`.
struct CircArc {
    int start = 0;
    int len = 0;

    bool empty() const { return len == 0; }

    bool operator==(const CircArc&) const = default;
};

bool arc_contains(const CircArc& arc, int universe, int pos);
bool arcs_disjoint(const CircArc& a, const CircArc& b, int universe);
// Every position of `inner` is a position of `outer` (empty arcs are subsets of anything).
bool arc_subset(const CircArc& inner, const CircArc& outer, int universe);

// Fixed universe of clockwise endpoint positions plus the set of live chords.
// Positions are never renumbered: deleting a chord frees its endpoints but the
// coordinate system stays that of the original diagram, so subinstances remain
// comparable with their parents.
class ChordDiagram {
  public:
    ChordDiagram() = default;
    ChordDiagram(int universe_size, int vertex_capacity);

    // Chords get vertex ids 0..k-1 in the order given.
    static ChordDiagram from_chords(int universe_size, const std::vector<Chord>& chords);

    int universe_size() const { return universe_; }
    int vertex_capacity() const { return static_cast<int>(chords_.size()); }
    int live_count() const { return live_count_; }
    bool live(int v) const;
    const Chord& chord(int v) const;
    std::vector<int> live_vertices() const;  // ascending vertex id
    int owner(int pos) const;                // vertex id occupying pos, or -1

    void add(int v, Chord c);
    void erase(int v);

    bool operator==(const ChordDiagram&) const = default;

  private:
    int universe_ = 0;
    int live_count_ = 0;
    std::vector<Chord> chords_;  // by vertex id
    std::vector<char> live_;
    std::vector<int> owner_;  // position -> vertex id, -1 if free
};

// True iff the chords interleave: exactly one endpoint of b lies strictly
// inside the clockwise interval from a.p to a.q. All four positions must be
// distinct.
bool crosses(const Chord& a, const Chord& b, int universe);

enum class ArcLabel { L, T, R, B };

const char* to_string(ArcLabel label);

// Unordered pair of arc names, normalized so first <= second in L<T<R<B order.
struct ArcPair {
    ArcLabel first;
    ArcLabel second;

    bool operator==(const ArcPair&) const = default;
    bool is(ArcLabel a, ArcLabel b) const;
};

// Four consecutive clockwise arcs covering the whole position universe.
// Empty arcs keep an anchor position, so rotation and merging stay well
// defined even when some arcs vanish.
struct CirclePartition {
    int universe = 0;
    std::array<CircArc, 4> arcs{};  // L, T, R, B

    const CircArc& l() const { return arcs[0]; }
    const CircArc& t() const { return arcs[1]; }
    const CircArc& r() const { return arcs[2]; }
    const CircArc& b() const { return arcs[3]; }
    const CircArc& arc(ArcLabel label) const { return arcs[static_cast<int>(label)]; }

    bool operator==(const CirclePartition&) const = default;
};

// Validates that the arcs are consecutive and cover the universe.
CirclePartition make_partition(int universe, CircArc l, CircArc t, CircArc r, CircArc b);

// Relabels arcs one step: new L = old T, new T = old R, new R = old B,
// new B = old L. Cut positions are unchanged.
CirclePartition rotate(const CirclePartition& partition);

// Arc names containing the chord's two endpoints.
ArcPair classify(const Chord& chord, const CirclePartition& partition);

// Live chords with one endpoint in arc_a and the other in arc_b, ascending by
// vertex id. Arcs must be disjoint.
std::vector<int> chords_between(const ChordDiagram& diagram, const CircArc& arc_a,
                                const CircArc& arc_b);

// Number of live chord endpoints whose position lies in the arc.
int endpoint_count(const ChordDiagram& diagram, const CircArc& arc);

// Partition whose L, T, R arcs each hold exactly floor(n/2) live endpoints
// counted clockwise from position 0; B gets the remaining 2n - 3*floor(n/2).
// Cuts are placed at the first position boundary after the k-th live endpoint,
// so the construction is deterministic.
CirclePartition quartile_partition(const ChordDiagram& diagram);

enum class SplitAnchor { Front, Back };

// Splits the arc into two disjoint pieces (clockwise-first, clockwise-second)
// whose union is the arc. The piece at the anchored end receives ceil(x/2)
// live endpoints, the other floor(x/2); requires x >= 2.
std::pair<CircArc, CircArc> split_arc(const ChordDiagram& diagram, const CircArc& arc,
                                      SplitAnchor anchor);

}  // namespace chord3

#endif
