#include <algorithm>
#include <set>

#include "doctest.h"

#include "chord3/chords.hpp"
#include "chord3/io.hpp"
#include "test_util.hpp"

using namespace chord3;

TEST_CASE("crosses on the canonical patterns") {
    CHECK(crosses({0, 4}, {2, 6}, 8));        // interleaved
    CHECK_FALSE(crosses({0, 1}, {2, 3}, 8));  // disjoint intervals
    CHECK_FALSE(crosses({0, 3}, {1, 2}, 8));  // nested
    CHECK_THROWS_AS(crosses({0, 4}, {4, 6}, 8), std::logic_error);  // shared endpoint
}

namespace {

// independent crossing definition: the four positions alternate between the
// two chords in cyclic order
bool alternates(Chord a, Chord b) {
    std::vector<std::pair<int, int>> points{{a.p, 0}, {a.q, 0}, {b.p, 1}, {b.q, 1}};
    std::sort(points.begin(), points.end());
    return points[0].second != points[1].second && points[1].second != points[2].second &&
           points[2].second != points[3].second;
}

}  // namespace

TEST_CASE("crosses agrees with cyclic alternation, exhaustively") {
    for (int universe = 4; universe <= 12; ++universe) {
        for (int p = 0; p < universe; ++p)
            for (int q = 0; q < universe; ++q)
                for (int r = 0; r < universe; ++r)
                    for (int s = 0; s < universe; ++s) {
                        std::set<int> distinct{p, q, r, s};
                        if (distinct.size() != 4) continue;
                        Chord a{p, q}, b{r, s};
                        CHECK(crosses(a, b, universe) == alternates(a, b));
                        CHECK(crosses(a, b, universe) == crosses(b, a, universe));  // symmetry
                    }
    }
}

TEST_CASE("classify against the quartered universe") {
    CirclePartition p = make_partition(8, {0, 2}, {2, 2}, {4, 2}, {6, 2});
    CHECK(classify({0, 4}, p).is(ArcLabel::L, ArcLabel::R));
    CHECK(classify({2, 7}, p).is(ArcLabel::T, ArcLabel::B));
    CHECK(classify({0, 1}, p).is(ArcLabel::L, ArcLabel::L));
}

TEST_CASE("chords_between picks exactly the straddling chords") {
    ChordDiagram d = ChordDiagram::from_chords(8, {{0, 4}, {2, 7}, {1, 5}});
    CirclePartition p = make_partition(8, {0, 2}, {2, 2}, {4, 2}, {6, 2});
    CHECK(chords_between(d, p.l(), p.r()) == std::vector<int>{0, 2});
    CHECK(chords_between(d, p.t(), p.b()) == std::vector<int>{1});
    CHECK(chords_between(d, CircArc{3, 0}, p.r()).empty());  // empty arc
    CHECK_THROWS_AS(chords_between(d, CircArc{0, 3}, CircArc{2, 3}), std::logic_error);
}

TEST_CASE("endpoint_count") {
    ChordDiagram d = ChordDiagram::from_chords(8, {{0, 4}, {2, 7}});
    CHECK(endpoint_count(d, CircArc{5, 0}) == 0);
    CHECK(endpoint_count(d, CircArc{0, 8}) == 4);
    CHECK(endpoint_count(d, CircArc{0, 4}) == 2);  // positions 0 and 2
}

TEST_CASE("quartile_partition fill rule") {
    SUBCASE("n=4, all positions live") {
        ChordDiagram d = ChordDiagram::from_chords(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
        CirclePartition p = quartile_partition(d);
        CHECK(endpoint_count(d, p.l()) == 2);
        CHECK(endpoint_count(d, p.t()) == 2);
        CHECK(endpoint_count(d, p.r()) == 2);
        CHECK(endpoint_count(d, p.b()) == 2);
    }
    SUBCASE("n=5 leaves the excess in B") {
        ChordDiagram d = ChordDiagram::from_chords(10, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
        CirclePartition p = quartile_partition(d);
        CHECK(endpoint_count(d, p.l()) == 2);
        CHECK(endpoint_count(d, p.t()) == 2);
        CHECK(endpoint_count(d, p.r()) == 2);
        CHECK(endpoint_count(d, p.b()) == 4);
    }
    SUBCASE("n=2") {
        ChordDiagram d = ChordDiagram::from_chords(4, {{0, 2}, {1, 3}});
        CirclePartition p = quartile_partition(d);
        for (const CircArc& arc : p.arcs) CHECK(endpoint_count(d, arc) == 1);
    }
    SUBCASE("empty diagram is an error") {
        ChordDiagram d(4, 0);
        CHECK_THROWS_AS(quartile_partition(d), std::invalid_argument);
    }
}

TEST_CASE("quartile_partition lower bound on random diagrams") {
    for (int n : {1, 2, 3, 5, 9, 16, 33}) {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Instance inst = gen_random(n, seed, ListDensity::Full);
            CirclePartition p = quartile_partition(inst.diagram);
            for (const CircArc& arc : p.arcs)
                CHECK(endpoint_count(inst.diagram, arc) >= n / 2);
        }
    }
}

TEST_CASE("rotate relabels without moving cuts") {
    CirclePartition p = make_partition(8, {0, 2}, {2, 2}, {4, 2}, {6, 2});
    CirclePartition r = rotate(p);
    CHECK(r.l() == p.t());
    CHECK(r.t() == p.r());
    CHECK(r.r() == p.b());
    CHECK(r.b() == p.l());
    CHECK(rotate(rotate(rotate(r))) == p);  // four rotations = identity

    CirclePartition lonely = make_partition(6, {2, 6}, {2, 0}, {2, 0}, {2, 0});
    CirclePartition turned = rotate(lonely);
    CHECK(turned.b().len == 6);
    CHECK(turned.l().len == 0);
    CHECK(turned.t().len == 0);
    CHECK(turned.r().len == 0);
}

TEST_CASE("split_arc endpoint balance") {
    ChordDiagram d = ChordDiagram::from_chords(8, {{0, 4}, {1, 5}, {2, 6}, {3, 7}});
    SUBCASE("x=4 splits 2/2") {
        auto [first, second] = split_arc(d, CircArc{0, 4}, SplitAnchor::Front);
        CHECK(endpoint_count(d, first) == 2);
        CHECK(endpoint_count(d, second) == 2);
        CHECK(first.len + second.len == 4);
    }
    SUBCASE("x=5 puts 3 at the anchored end") {
        ChordDiagram d5 = ChordDiagram::from_chords(10, {{0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
        auto [first, second] = split_arc(d5, CircArc{0, 5}, SplitAnchor::Front);
        CHECK(endpoint_count(d5, first) == 3);
        CHECK(endpoint_count(d5, second) == 2);
        auto [f2, s2] = split_arc(d5, CircArc{0, 5}, SplitAnchor::Back);
        CHECK(endpoint_count(d5, f2) == 2);
        CHECK(endpoint_count(d5, s2) == 3);
    }
    SUBCASE("x=2 splits 1/1") {
        ChordDiagram d2 = ChordDiagram::from_chords(4, {{0, 2}, {1, 3}});
        auto [first, second] = split_arc(d2, CircArc{0, 2}, SplitAnchor::Front);
        CHECK(endpoint_count(d2, first) == 1);
        CHECK(endpoint_count(d2, second) == 1);
    }
    SUBCASE("x<2 is a contract violation") {
        CHECK_THROWS_AS(split_arc(d, CircArc{0, 1}, SplitAnchor::Front), std::logic_error);
    }
}

TEST_CASE("split_arc pieces partition the arc on random diagrams") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = gen_random(8, 100 + seed, ListDensity::Full);
        CircArc arc{3, 9};
        const int universe = inst.diagram.universe_size();
        if (endpoint_count(inst.diagram, arc) < 2) continue;
        auto [first, second] = split_arc(inst.diagram, arc, SplitAnchor::Front);
        CHECK(arcs_disjoint(first, second, universe));
        CHECK(first.len + second.len == arc.len);
        CHECK(first.start == arc.start);
        const int x = endpoint_count(inst.diagram, arc);
        CHECK(endpoint_count(inst.diagram, first) >= x / 2);
        CHECK(endpoint_count(inst.diagram, second) >= x / 2);
        CHECK(endpoint_count(inst.diagram, first) + endpoint_count(inst.diagram, second) == x);
    }
}

TEST_CASE("every L-R chord crosses every T-B chord") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Instance inst = gen_random(2 + static_cast<int>(seed % 9), seed, ListDensity::Full);
        CirclePartition p = quartile_partition(inst.diagram);
        std::vector<int> lr = chords_between(inst.diagram, p.l(), p.r());
        std::vector<int> tb = chords_between(inst.diagram, p.t(), p.b());
        for (int a : lr)
            for (int b : tb)
                CHECK(crosses(inst.diagram.chord(a), inst.diagram.chord(b),
                              inst.diagram.universe_size()));
    }
}

TEST_CASE("arc containment helpers handle wrapping") {
    CHECK(arc_contains(CircArc{6, 4}, 8, 7));
    CHECK(arc_contains(CircArc{6, 4}, 8, 1));
    CHECK_FALSE(arc_contains(CircArc{6, 4}, 8, 2));
    CHECK(arc_subset(CircArc{7, 2}, CircArc{6, 4}, 8));
    CHECK_FALSE(arc_subset(CircArc{7, 4}, CircArc{6, 4}, 8));
    CHECK(arc_subset(CircArc{3, 0}, CircArc{6, 1}, 8));  // empty arc
    CHECK(arcs_disjoint(CircArc{6, 4}, CircArc{2, 4}, 8));
    CHECK_FALSE(arcs_disjoint(CircArc{6, 4}, CircArc{1, 4}, 8));
}
