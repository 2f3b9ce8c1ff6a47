#ifndef CHORD3_SOLVER_HPP
#define CHORD3_SOLVER_HPP

#include <cstdint>
#include <limits>

#include "chord3/branching.hpp"
#include "chord3/instance.hpp"

namespace chord3 {

struct SolveStats {
    std::uint64_t nodes = 0;  // solve invocations, brute-force leaves included
    int max_depth = 0;
    std::uint64_t family_elements = 0;  // fully-separated instances consumed
    int max_family_len = 0;             // largest family drained at a single node
    std::uint64_t brute_calls = 0;
    // max over recursion edges of child_size - ceil(3 * parent_size / 4)
    int contraction_margin = std::numeric_limits<int>::min();
    BranchCounters branching;

    void merge(const SolveStats& other);

    bool operator==(const SolveStats&) const = default;
};

struct SolveResult {
    bool yes = false;
    PartialColoring coloring;  // total over the input's live vertices iff yes
    SolveStats stats;

    bool operator==(const SolveResult&) const = default;
};

struct SolveOptions {
    int base_threshold = 8;  // brute-force below or at this size
};

// Exact answer by exhaustive assignment over the product of the lists; the
// first valid coloring in lexicographic (vertex id, red < green < blue) order
// is returned. Exponential: meant for instances at or below the threshold.
SolveResult brute_force_small(const Instance& instance);

// Decides list 3-colorability and produces a witness coloring when one
// exists. Small instances are brute forced; larger ones are broken into a
// lazy family of fully-separated instances whose two sides are solved
// recursively, stopping at the first element with two yes sides.
// Deterministic, including stats.
SolveResult solve(const Instance& instance, const SolveOptions& options = {});

struct ParallelSolveOptions {
    int base_threshold = 8;
    int threads = 0;     // 0 = all available
    int chunk_size = 0;  // largest speculation round; 0 = derived from threads
};

// Same verdict and coloring as solve(): top-level family elements are pulled
// in rounds that start at one element and double on failure, evaluated
// speculatively in parallel, and committed in stream order. Stats cover all
// speculated work and are deterministic, but differ from the serial
// reference's.
SolveResult solve_parallel(const Instance& instance, const ParallelSolveOptions& options = {});

}  // namespace chord3

#endif
