#ifndef CHORD3_ORACLE_HPP
#define CHORD3_ORACLE_HPP

#include <cstdint>

#include "chord3/instance.hpp"

namespace chord3 {

enum class OracleStatus { Yes, No, BudgetExceeded };

struct OracleResult {
    OracleStatus status = OracleStatus::No;
    PartialColoring coloring;  // total iff status == Yes
    std::uint64_t nodes = 0;   // decisions tried

    bool yes() const { return status == OracleStatus::Yes; }
};

inline constexpr std::uint64_t kDefaultOracleBudget = 50'000'000;

// Ground-truth list-3-coloring by plain backtracking: static vertex order by
// descending crossing degree (ties by id), forward checking, and propagation
// of lists that become singletons. Independent of the branching machinery on
// purpose; exponential in the worst case, intended for small instances.
// A blown node budget reports BudgetExceeded, never a wrong verdict.
OracleResult oracle_solve(const Instance& instance,
                          std::uint64_t node_budget = kDefaultOracleBudget);

}  // namespace chord3

#endif
