#ifndef CHORD3_BRANCHING_HPP
#define CHORD3_BRANCHING_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "chord3/instance.hpp"

namespace chord3 {

// Per-stream instrumentation, aggregated up the solve recursion and exposed
// through the bench subcommand. Margins are maxima of (observed - bound); any
// value above zero would mean a proved bound was violated, which the streams
// additionally treat as a hard error.
struct BranchCounters {
    std::uint64_t eliminate_calls = 0;
    std::uint64_t eliminate_yielded = 0;
    std::uint64_t eliminate_pruned = 0;  // infeasible branches dropped at creation
    std::uint64_t semi_yielded = 0;
    std::uint64_t full_yielded = 0;
    int max_eliminate_len = 0;
    int max_semi_len = 0;
    int max_full_depth = 0;  // deepest full-separation recursion level seen
    // max over full_separate levels of c_child - max(c-1, ceil(3c/4))
    int measure_margin = std::numeric_limits<int>::min();
    // same, against plain ceil(3c/4): nonpositive iff the measure trace is
    // dominated by the sequence c, ceil(3c/4), ceil(3*ceil(3c/4)/4), ...
    int measure_margin_strict = std::numeric_limits<int>::min();

    void merge(const BranchCounters& other);

    bool operator==(const BranchCounters&) const = default;
};

enum class SeparationKind { Semi, Full };

// An instance tagged with a circle partition, plus the coloring decisions
// accumulated on the way from the stream's input instance. Semi-separated:
// no live L-R chords. Fully separated: additionally no live endpoints in T or B.
struct SeparatedInstance {
    Instance inst;
    CirclePartition partition;
    SeparationKind kind = SeparationKind::Semi;
    PartialColoring partial;
};

// Validates the structural invariants of the kind and returns the value.
SeparatedInstance make_separated(Instance inst, CirclePartition partition, SeparationKind kind,
                                 PartialColoring partial);

struct Branch {
    Instance inst;
    PartialColoring partial;
};

// Lazy family of at most six subinstances in which either all X chords or all
// Y chords are gone. X and Y must be disjoint and every chord of X must cross
// every chord of Y. For each side with no internal crossing, one branch per
// color common to all lists on that side: assign it, reduce, and yield unless
// infeasible. If X or Y is empty a single reduced copy of the input is the
// whole family.
class EliminateStream {
  public:
    EliminateStream(Instance base, std::vector<int> xs, std::vector<int> ys,
                    BranchCounters* counters = nullptr);

    std::optional<Branch> next();
    int yielded() const { return yielded_; }

  private:
    std::optional<Branch> try_branch(const std::vector<int>& side, Color color);
    std::optional<Branch> emit(std::optional<Reduced> reduced);

    Instance base_;
    std::vector<int> xs_, ys_;
    BranchCounters* counters_;
    bool vacuous_ = false;
    bool x_usable_ = false;  // side has no internally crossing pair
    bool y_usable_ = false;
    ColorSet x_common_, y_common_;
    int phase_ = 0;  // 0 = X side, 1 = Y side, 2 = done
    int color_index_ = 0;
    bool vacuous_done_ = false;
    int yielded_ = 0;
};

EliminateStream eliminate(Instance base, std::vector<int> xs, std::vector<int> ys,
                          BranchCounters* counters = nullptr);

// Lazy family of at most six semi-separated instances. Builds the quartile
// partition P and its rotation, eliminates across L-R vs T-B chords, and tags
// each survivor with P if it lost its L-R chords, else with the rotation.
class SemiSeparateStream {
  public:
    explicit SemiSeparateStream(Instance inst, BranchCounters* counters = nullptr);

    std::optional<SeparatedInstance> next();
    const CirclePartition& base_partition() const { return partition_; }

  private:
    BranchCounters* counters_;
    CirclePartition partition_;
    CirclePartition rotated_;
    std::vector<int> lr_chords_, tb_chords_;
    EliminateStream elim_;
    int yielded_ = 0;
};

SemiSeparateStream semi_separate(Instance inst, BranchCounters* counters = nullptr);

// Lazy family of fully-separated instances reachable from a semi-separated
// input by repeatedly shrinking the fuller of T, B: merge when both are free
// of live endpoints, grow L or R around a lone endpoint, or split the arc and
// eliminate across the two diagonal chord sets. L and R only ever grow, and
// the live endpoint count in T+B drops to max(c-1, ceil(3c/4)) per level.
class FullSeparateStream {
  public:
    explicit FullSeparateStream(SeparatedInstance semi, BranchCounters* counters = nullptr);

    std::optional<SeparatedInstance> next();

  private:
    struct SplitFrame {
        SeparatedInstance semi;
        int measure = 0;  // live endpoints in T union B
        int depth = 0;
        ArcLabel split_label = ArcLabel::T;
        CircArc xl, xr;
        std::vector<int> left_diag, right_diag;  // L-X_R chords, X_L-R chords
        EliminateStream elim;
    };

    void enter(SeparatedInstance semi, int depth, std::optional<int> parent_measure);
    SeparatedInstance child_of(const SplitFrame& frame, Branch&& branch) const;

    BranchCounters* counters_;
    std::vector<SplitFrame> split_stack_;
    std::vector<SeparatedInstance> ready_;  // x == 0 leaves awaiting emission
};

FullSeparateStream full_separate(SeparatedInstance semi, BranchCounters* counters = nullptr);

// Lazy concatenation of full_separate over semi_separate: the input instance
// is a yes instance iff some yielded fully-separated instance is.
class SeparatedFamilyStream {
  public:
    explicit SeparatedFamilyStream(Instance inst, BranchCounters* counters = nullptr);

    std::optional<SeparatedInstance> next();

  private:
    BranchCounters* counters_;
    SemiSeparateStream semi_;
    std::optional<FullSeparateStream> current_;
};

SeparatedFamilyStream separated_family(Instance inst, BranchCounters* counters = nullptr);

// Splits a fully-separated instance into its independent L-side and R-side
// subinstances; together they carry every live chord.
std::pair<Instance, Instance> split_full(const SeparatedInstance& full);

// Test/bench helper: drain a stream into a vector.
template <typename Stream>
auto collect(Stream&& stream) {
    std::vector<std::decay_t<decltype(*stream.next())>> out;
    while (auto element = stream.next()) out.push_back(std::move(*element));
    return out;
}

}  // namespace chord3

#endif
