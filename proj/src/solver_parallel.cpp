#include <algorithm>
#include <exception>

#include "chord3/solver.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chord3 {

namespace {

int ceil_three_quarters(int n) { return (3 * n + 3) / 4; }

struct ElementOutcome {
    bool yes = false;
    PartialColoring coloring;
    SolveStats stats;
    std::exception_ptr error;
};

void merge_child(SolveStats& into, const SolveStats& child) {
    into.nodes += child.nodes;
    into.max_depth = std::max(into.max_depth, child.max_depth + 1);
    into.family_elements += child.family_elements;
    into.max_family_len = std::max(into.max_family_len, child.max_family_len);
    into.brute_calls += child.brute_calls;
    into.contraction_margin = std::max(into.contraction_margin, child.contraction_margin);
    into.branching.merge(child.branching);
}

// One family element: split, solve the left side, solve the right side only
// if the left is a yes. Identical decisions to the serial reference, so a
// committed element carries the same coloring the serial solver would return.
ElementOutcome evaluate_element(SeparatedInstance element, int child_bound,
                                const SolveOptions& inner) {
    ElementOutcome out;
    try {
        auto [left_inst, right_inst] = split_full(element);
        for (int side_size : {left_inst.size(), right_inst.size()}) {
            out.stats.contraction_margin =
                std::max(out.stats.contraction_margin, side_size - child_bound);
            detail::require(side_size <= child_bound, "split side exceeds 3n/4 contraction");
        }
        SolveResult left = solve(left_inst, inner);
        merge_child(out.stats, left.stats);
        if (!left.yes) return out;
        SolveResult right = solve(right_inst, inner);
        merge_child(out.stats, right.stats);
        if (!right.yes) return out;

        out.yes = true;
        out.coloring = std::move(element.partial);
        out.coloring.merge(left.coloring);
        out.coloring.merge(right.coloring);
    } catch (...) {
        out.error = std::current_exception();
    }
    return out;
}

}  // namespace

SolveResult solve_parallel(const Instance& instance, const ParallelSolveOptions& options) {
    const SolveOptions inner{options.base_threshold};
#ifdef _OPENMP
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#else
    const int threads = 1;
#endif
    if (threads <= 1 || instance.size() <= options.base_threshold)
        return solve(instance, inner);

    const int max_chunk =
        options.chunk_size > 0 ? options.chunk_size : std::max(4, 2 * threads);
    const int child_bound = ceil_three_quarters(instance.size());

    SolveResult result{false, PartialColoring(instance.diagram.vertex_capacity()), {}};
    result.stats.nodes = 1;
    SeparatedFamilyStream family(instance, &result.stats.branching);

    // Geometric ramp: the first round evaluates a single element, matching
    // the serial scan when it succeeds immediately; rounds double on failure
    // up to max_chunk, so speculated work stays within 2x of the serial scan.
    int chunk_size = 1;
    std::uint64_t pulled = 0;
    bool exhausted = false;
    while (!exhausted && !result.yes) {
        std::vector<SeparatedInstance> chunk;
        chunk.reserve(chunk_size);
        while (static_cast<int>(chunk.size()) < chunk_size) {
            auto element = family.next();
            if (!element) {
                exhausted = true;
                break;
            }
            chunk.push_back(std::move(*element));
        }
        if (chunk.empty()) break;
        pulled += chunk.size();
        result.stats.family_elements += chunk.size();

        std::vector<ElementOutcome> outcomes(chunk.size());
#ifdef _OPENMP
#pragma omp parallel for num_threads(threads) schedule(dynamic, 1)
#endif
        for (int i = 0; i < static_cast<int>(chunk.size()); ++i)
            outcomes[i] = evaluate_element(std::move(chunk[i]), child_bound, inner);

        // Commit in stream order: stats for the whole speculated chunk, the
        // first yes element wins, exactly as the serial scan would pick it.
        for (ElementOutcome& outcome : outcomes) {
            if (outcome.error) std::rethrow_exception(outcome.error);
            result.stats.merge(outcome.stats);
            if (outcome.yes && !result.yes) {
                result.yes = true;
                result.coloring = std::move(outcome.coloring);
            }
        }
        chunk_size = std::min(max_chunk, 2 * chunk_size);
    }
    result.stats.max_family_len =
        std::max(result.stats.max_family_len, static_cast<int>(pulled));
    return result;
}

}  // namespace chord3
