#include "chord3/solver.hpp"

#include <algorithm>
#include <cmath>

namespace chord3 {

namespace {

int ceil_three_quarters(int n) { return (3 * n + 3) / 4; }

int depth_bound(int n) {
    return static_cast<int>(4.0 * std::log2(std::max(n, 2))) + 8;
}

// Lexicographic DFS over the product of the lists. Pruning a prefix that
// already clashes cannot skip a valid completion, so the first hit is the
// lexicographically first valid coloring.
bool brute_recurse(const Instance& inst, const std::vector<int>& order, std::size_t index,
                   std::vector<std::int8_t>& chosen) {
    if (index == order.size()) return true;
    const int v = order[index];
    for (Color c : kColorOrder) {
        if (!inst.list(v).contains(c)) continue;
        bool clash = false;
        for (std::size_t j = 0; j < index && !clash; ++j) {
            int w = order[j];
            clash = chosen[w] == static_cast<std::int8_t>(c) &&
                    crosses(inst.diagram.chord(v), inst.diagram.chord(w),
                            inst.diagram.universe_size());
        }
        if (clash) continue;
        chosen[v] = static_cast<std::int8_t>(c);
        if (brute_recurse(inst, order, index + 1, chosen)) return true;
        chosen[v] = -1;
    }
    return false;
}

struct SolveContext {
    SolveOptions options;
    int depth_limit = 0;
    SolveStats stats;
};

SolveResult solve_node(SolveContext& ctx, const Instance& inst, int depth);

void check_contraction(SolveContext& ctx, int child_size, int child_bound) {
    ctx.stats.contraction_margin = std::max(ctx.stats.contraction_margin, child_size - child_bound);
    detail::require(child_size <= child_bound, "split side exceeds 3n/4 contraction");
}

SolveResult solve_family(SolveContext& ctx, const Instance& inst, int depth) {
    const int child_bound = ceil_three_quarters(inst.size());
    SeparatedFamilyStream family(inst, &ctx.stats.branching);
    int family_len = 0;
    SolveResult result{false, PartialColoring(inst.diagram.vertex_capacity()), {}};
    while (auto element = family.next()) {
        ++family_len;
        ++ctx.stats.family_elements;
        auto [left_inst, right_inst] = split_full(*element);
        check_contraction(ctx, left_inst.size(), child_bound);
        check_contraction(ctx, right_inst.size(), child_bound);

        SolveResult left = solve_node(ctx, left_inst, depth + 1);
        if (!left.yes) continue;
        SolveResult right = solve_node(ctx, right_inst, depth + 1);
        if (!right.yes) continue;

        result.yes = true;
        result.coloring = std::move(element->partial);
        result.coloring.merge(left.coloring);
        result.coloring.merge(right.coloring);
        break;
    }
    ctx.stats.max_family_len = std::max(ctx.stats.max_family_len, family_len);
    return result;
}

SolveResult solve_node(SolveContext& ctx, const Instance& inst, int depth) {
    ++ctx.stats.nodes;
    ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);
    detail::require(depth <= ctx.depth_limit, "recursion deeper than 4*log2(n) + 8");

    if (inst.size() <= ctx.options.base_threshold) {
        ++ctx.stats.brute_calls;
        SolveResult base = brute_force_small(inst);
        base.stats = {};
        return base;
    }
    return solve_family(ctx, inst, depth);
}

}  // namespace

void SolveStats::merge(const SolveStats& other) {
    nodes += other.nodes;
    max_depth = std::max(max_depth, other.max_depth);
    family_elements += other.family_elements;
    max_family_len = std::max(max_family_len, other.max_family_len);
    brute_calls += other.brute_calls;
    contraction_margin = std::max(contraction_margin, other.contraction_margin);
    branching.merge(other.branching);
}

SolveResult brute_force_small(const Instance& instance) {
    std::vector<int> order = instance.diagram.live_vertices();  // ascending id = lex order
    std::vector<std::int8_t> chosen(instance.diagram.vertex_capacity(), -1);

    SolveResult result;
    result.stats.nodes = 1;
    result.stats.brute_calls = 1;
    result.yes = brute_recurse(instance, order, 0, chosen);
    result.coloring = PartialColoring(instance.diagram.vertex_capacity());
    if (result.yes) {
        for (int v : order) result.coloring.set(v, static_cast<Color>(chosen[v]));
    }
    return result;
}

SolveResult solve(const Instance& instance, const SolveOptions& options) {
    SolveContext ctx;
    ctx.options = options;
    ctx.depth_limit = depth_bound(instance.size());
    SolveResult result = solve_node(ctx, instance, 0);
    result.stats = ctx.stats;
    return result;
}

}  // namespace chord3
