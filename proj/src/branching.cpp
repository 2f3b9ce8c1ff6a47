#include "chord3/branching.hpp"

#include <algorithm>

namespace chord3 {

namespace {

bool any_live(const Instance& inst, const std::vector<int>& vertices) {
    for (int v : vertices)
        if (inst.diagram.live(v)) return true;
    return false;
}

bool has_internal_crossing(const Instance& inst, const std::vector<int>& side) {
    const int universe = inst.diagram.universe_size();
    for (std::size_t i = 0; i < side.size(); ++i)
        for (std::size_t j = i + 1; j < side.size(); ++j)
            if (crosses(inst.diagram.chord(side[i]), inst.diagram.chord(side[j]), universe))
                return true;
    return false;
}

ColorSet common_colors(const Instance& inst, const std::vector<int>& side) {
    ColorSet common = ColorSet::all();
    for (int v : side) common.intersect(inst.list(v));
    return common;
}

int ceil_three_quarters(int c) { return (3 * c + 3) / 4; }

}  // namespace

void BranchCounters::merge(const BranchCounters& other) {
    eliminate_calls += other.eliminate_calls;
    eliminate_yielded += other.eliminate_yielded;
    eliminate_pruned += other.eliminate_pruned;
    semi_yielded += other.semi_yielded;
    full_yielded += other.full_yielded;
    max_eliminate_len = std::max(max_eliminate_len, other.max_eliminate_len);
    max_semi_len = std::max(max_semi_len, other.max_semi_len);
    max_full_depth = std::max(max_full_depth, other.max_full_depth);
    measure_margin = std::max(measure_margin, other.measure_margin);
    measure_margin_strict = std::max(measure_margin_strict, other.measure_margin_strict);
}

SeparatedInstance make_separated(Instance inst, CirclePartition partition, SeparationKind kind,
                                 PartialColoring partial) {
    detail::require(inst.diagram.universe_size() == partition.universe,
                    "partition universe does not match diagram");
    detail::require(chords_between(inst.diagram, partition.l(), partition.r()).empty(),
                    "separated instance keeps L-R chords");
    if (kind == SeparationKind::Full) {
        detail::require(endpoint_count(inst.diagram, partition.t()) == 0 &&
                            endpoint_count(inst.diagram, partition.b()) == 0,
                        "fully-separated instance keeps endpoints in T or B");
    }
    for (int v : inst.diagram.live_vertices())
        detail::require(!partial.contains(v), "accumulated coloring overlaps live chords");
    return SeparatedInstance{std::move(inst), partition, kind, std::move(partial)};
}

EliminateStream::EliminateStream(Instance base, std::vector<int> xs, std::vector<int> ys,
                                 BranchCounters* counters)
    : base_(std::move(base)), xs_(std::move(xs)), ys_(std::move(ys)), counters_(counters) {
    if (counters_) ++counters_->eliminate_calls;

    std::vector<char> in_x(base_.diagram.vertex_capacity(), 0);
    for (int v : xs_) {
        detail::require(base_.diagram.live(v), "X contains a dead vertex");
        in_x[v] = 1;
    }
    for (int v : ys_) {
        detail::require(base_.diagram.live(v), "Y contains a dead vertex");
        detail::require(!in_x[v], "X and Y overlap");
    }
    const int universe = base_.diagram.universe_size();
    for (int x : xs_)
        for (int y : ys_)
            detail::require(crosses(base_.diagram.chord(x), base_.diagram.chord(y), universe),
                            "X and Y are not fully crossing");

    vacuous_ = xs_.empty() || ys_.empty();
    if (!vacuous_) {
        x_usable_ = !has_internal_crossing(base_, xs_);
        y_usable_ = !has_internal_crossing(base_, ys_);
        if (x_usable_) x_common_ = common_colors(base_, xs_);
        if (y_usable_) y_common_ = common_colors(base_, ys_);
    }
}

std::optional<Branch> EliminateStream::emit(std::optional<Reduced> reduced) {
    if (!reduced) {
        if (counters_) ++counters_->eliminate_pruned;
        return std::nullopt;
    }
    ++yielded_;
    detail::require(yielded_ <= 6, "eliminate family exceeded six branches");
    if (counters_) {
        ++counters_->eliminate_yielded;
        counters_->max_eliminate_len = std::max(counters_->max_eliminate_len, yielded_);
    }
    return Branch{std::move(reduced->instance), std::move(reduced->partial)};
}

std::optional<Branch> EliminateStream::try_branch(const std::vector<int>& side, Color color) {
    return emit(reduce(assign(base_, side, color)));
}

std::optional<Branch> EliminateStream::next() {
    if (vacuous_) {
        // One reduced copy of the input covers the whole family; the color
        // loop over an empty side would yield identical instances.
        if (vacuous_done_) return std::nullopt;
        vacuous_done_ = true;
        return emit(reduce(base_));
    }
    while (phase_ < 2) {
        const bool on_x = phase_ == 0;
        if (!(on_x ? x_usable_ : y_usable_) || color_index_ >= 3) {
            ++phase_;
            color_index_ = 0;
            continue;
        }
        Color color = kColorOrder[color_index_++];
        if (!(on_x ? x_common_ : y_common_).contains(color)) continue;
        if (auto branch = try_branch(on_x ? xs_ : ys_, color)) return branch;
    }
    return std::nullopt;
}

EliminateStream eliminate(Instance base, std::vector<int> xs, std::vector<int> ys,
                          BranchCounters* counters) {
    return EliminateStream(std::move(base), std::move(xs), std::move(ys), counters);
}

SemiSeparateStream::SemiSeparateStream(Instance inst, BranchCounters* counters)
    : counters_(counters),
      partition_(quartile_partition(inst.diagram)),
      rotated_(rotate(partition_)),
      lr_chords_(chords_between(inst.diagram, partition_.l(), partition_.r())),
      tb_chords_(chords_between(inst.diagram, partition_.t(), partition_.b())),
      elim_(std::move(inst), lr_chords_, tb_chords_, counters) {}

std::optional<SeparatedInstance> SemiSeparateStream::next() {
    auto branch = elim_.next();
    if (!branch) return std::nullopt;

    SeparatedInstance out = [&] {
        if (!any_live(branch->inst, lr_chords_))
            return make_separated(std::move(branch->inst), partition_, SeparationKind::Semi,
                                  std::move(branch->partial));
        detail::require(!any_live(branch->inst, tb_chords_),
                        "eliminate survivor kept chords of both sets");
        return make_separated(std::move(branch->inst), rotated_, SeparationKind::Semi,
                              std::move(branch->partial));
    }();

    ++yielded_;
    detail::require(yielded_ <= 6, "semi-separated family exceeded six members");
    if (counters_) {
        ++counters_->semi_yielded;
        counters_->max_semi_len = std::max(counters_->max_semi_len, yielded_);
    }
    return out;
}

SemiSeparateStream semi_separate(Instance inst, BranchCounters* counters) {
    return SemiSeparateStream(std::move(inst), counters);
}

namespace {

// x = 1 case: the lone endpoint's arc is absorbed by R when no L-X chord
// exists, else by L. A lone chord running to the opposite thin arc satisfies
// both guards; the R-growing branch is taken first.
SeparatedInstance grow_around_lone_endpoint(SeparatedInstance semi, ArcLabel label) {
    const CirclePartition p = semi.partition;
    const int universe = p.universe;
    const CircArc& x_arc = p.arc(label);
    CirclePartition grown;
    if (chords_between(semi.inst.diagram, p.l(), x_arc).empty()) {
        if (label == ArcLabel::T)
            grown = make_partition(universe, p.l(), CircArc{p.t().start, 0},
                                   CircArc{p.t().start, p.t().len + p.r().len}, p.b());
        else
            grown = make_partition(universe, p.l(), p.t(),
                                   CircArc{p.r().start, p.r().len + p.b().len},
                                   CircArc{p.l().start, 0});
    } else {
        detail::require(chords_between(semi.inst.diagram, x_arc, p.r()).empty(),
                        "lone endpoint chord reaches both L and R");
        if (label == ArcLabel::T)
            grown = make_partition(universe, CircArc{p.l().start, p.l().len + p.t().len},
                                   CircArc{p.r().start, 0}, p.r(), p.b());
        else
            grown = make_partition(universe, CircArc{p.b().start, p.b().len + p.l().len}, p.t(),
                                   p.r(), CircArc{p.b().start, 0});
    }
    detail::require(arc_subset(p.l(), grown.l(), universe) && arc_subset(p.r(), grown.r(), universe),
                    "L and R arcs must only grow");
    return make_separated(std::move(semi.inst), grown, SeparationKind::Semi,
                          std::move(semi.partial));
}

}  // namespace

FullSeparateStream::FullSeparateStream(SeparatedInstance semi, BranchCounters* counters)
    : counters_(counters) {
    detail::require(semi.kind == SeparationKind::Semi, "full_separate needs a semi-separated input");
    enter(std::move(semi), 0, std::nullopt);
}

void FullSeparateStream::enter(SeparatedInstance semi, int depth,
                               std::optional<int> parent_measure) {
    for (;;) {
        const ChordDiagram& diagram = semi.inst.diagram;
        const CirclePartition p = semi.partition;
        const int endpoints_top = endpoint_count(diagram, p.t());
        const int endpoints_bottom = endpoint_count(diagram, p.b());
        const int measure = endpoints_top + endpoints_bottom;

        if (parent_measure) {
            const int bound = std::max(*parent_measure - 1, ceil_three_quarters(*parent_measure));
            if (counters_) {
                counters_->measure_margin = std::max(counters_->measure_margin, measure - bound);
                counters_->measure_margin_strict =
                    std::max(counters_->measure_margin_strict,
                             measure - ceil_three_quarters(*parent_measure));
            }
            detail::require(measure <= bound, "T+B endpoint measure did not shrink");
        }
        if (counters_) counters_->max_full_depth = std::max(counters_->max_full_depth, depth);

        if (measure == 0) {
            CirclePartition merged = make_partition(
                p.universe, CircArc{p.l().start, p.l().len + p.t().len}, CircArc{p.r().start, 0},
                CircArc{p.r().start, p.r().len + p.b().len}, CircArc{p.l().start, 0});
            detail::require(arc_subset(p.l(), merged.l(), p.universe) &&
                                arc_subset(p.r(), merged.r(), p.universe),
                            "L and R arcs must only grow");
            ready_.push_back(make_separated(std::move(semi.inst), merged, SeparationKind::Full,
                                            std::move(semi.partial)));
            return;
        }

        const ArcLabel label = endpoints_top >= endpoints_bottom ? ArcLabel::T : ArcLabel::B;
        if (std::max(endpoints_top, endpoints_bottom) == 1) {
            semi = grow_around_lone_endpoint(std::move(semi), label);
            parent_measure = measure;
            ++depth;
            continue;
        }

        // x > 1: split the arc, then eliminate across the diagonal chord sets.
        const CircArc& x_arc = p.arc(label);
        auto [first, second] = split_arc(diagram, x_arc, SplitAnchor::Front);
        // Clockwise order is L, T, R, B: the first piece of T touches L, the
        // first piece of B touches R.
        const CircArc xl = label == ArcLabel::T ? first : second;
        const CircArc xr = label == ArcLabel::T ? second : first;
        std::vector<int> left_diag = chords_between(diagram, p.l(), xr);
        std::vector<int> right_diag = chords_between(diagram, xl, p.r());
        EliminateStream elim(semi.inst, left_diag, right_diag, counters_);
        split_stack_.push_back(SplitFrame{std::move(semi), measure, depth, label, xl, xr,
                                          std::move(left_diag), std::move(right_diag),
                                          std::move(elim)});
        return;
    }
}

SeparatedInstance FullSeparateStream::child_of(const SplitFrame& frame, Branch&& branch) const {
    const CirclePartition& p = frame.semi.partition;
    const int universe = p.universe;
    CirclePartition next;
    if (!any_live(branch.inst, frame.left_diag)) {
        // No L-X_R chords left: R absorbs X_R.
        if (frame.split_label == ArcLabel::T)
            next = make_partition(universe, p.l(), frame.xl,
                                  CircArc{frame.xr.start, frame.xr.len + p.r().len}, p.b());
        else
            next = make_partition(universe, p.l(), p.t(),
                                  CircArc{p.r().start, p.r().len + frame.xr.len}, frame.xl);
    } else {
        detail::require(!any_live(branch.inst, frame.right_diag),
                        "eliminate survivor kept chords of both diagonal sets");
        // No X_L-R chords left: L absorbs X_L.
        if (frame.split_label == ArcLabel::T)
            next = make_partition(universe, CircArc{p.l().start, p.l().len + frame.xl.len},
                                  frame.xr, p.r(), p.b());
        else
            next = make_partition(universe, CircArc{frame.xl.start, frame.xl.len + p.l().len},
                                  p.t(), p.r(), frame.xr);
    }
    detail::require(arc_subset(p.l(), next.l(), universe) && arc_subset(p.r(), next.r(), universe),
                    "L and R arcs must only grow");

    PartialColoring merged = frame.semi.partial;
    merged.merge(branch.partial);
    return make_separated(std::move(branch.inst), next, SeparationKind::Semi, std::move(merged));
}

std::optional<SeparatedInstance> FullSeparateStream::next() {
    for (;;) {
        if (!ready_.empty()) {
            SeparatedInstance out = std::move(ready_.back());
            ready_.pop_back();
            if (counters_) ++counters_->full_yielded;
            return out;
        }
        if (split_stack_.empty()) return std::nullopt;
        auto branch = split_stack_.back().elim.next();
        if (!branch) {
            split_stack_.pop_back();
            continue;
        }
        const SplitFrame& frame = split_stack_.back();
        SeparatedInstance child = child_of(frame, std::move(*branch));
        const int parent_measure = frame.measure;
        const int depth = frame.depth;
        enter(std::move(child), depth + 1, parent_measure);  // may reallocate split_stack_
    }
}

FullSeparateStream full_separate(SeparatedInstance semi, BranchCounters* counters) {
    return FullSeparateStream(std::move(semi), counters);
}

SeparatedFamilyStream::SeparatedFamilyStream(Instance inst, BranchCounters* counters)
    : counters_(counters), semi_(std::move(inst), counters) {}

std::optional<SeparatedInstance> SeparatedFamilyStream::next() {
    for (;;) {
        if (current_) {
            if (auto element = current_->next()) return element;
            current_.reset();
        }
        auto semi = semi_.next();
        if (!semi) return std::nullopt;
        current_.emplace(std::move(*semi), counters_);
    }
}

SeparatedFamilyStream separated_family(Instance inst, BranchCounters* counters) {
    return SeparatedFamilyStream(std::move(inst), counters);
}

std::pair<Instance, Instance> split_full(const SeparatedInstance& full) {
    detail::require(full.kind == SeparationKind::Full, "split_full needs a fully-separated input");
    const CirclePartition& p = full.partition;
    std::vector<char> on_left(full.inst.diagram.vertex_capacity(), 0);
    std::vector<char> on_right(full.inst.diagram.vertex_capacity(), 0);
    for (int v : full.inst.diagram.live_vertices()) {
        ArcPair where = classify(full.inst.diagram.chord(v), p);
        if (where.is(ArcLabel::L, ArcLabel::L))
            on_left[v] = 1;
        else if (where.is(ArcLabel::R, ArcLabel::R))
            on_right[v] = 1;
        else
            detail::contract_fail("fully-separated instance keeps a chord outside L-L and R-R");
    }
    Instance left = restrict_to(full.inst, [&](int v) { return on_left[v] == 1; });
    Instance right = restrict_to(full.inst, [&](int v) { return on_right[v] == 1; });
    detail::require(left.size() + right.size() == full.inst.size(),
                    "split sides must partition the live chords");
    return {std::move(left), std::move(right)};
}

}  // namespace chord3
