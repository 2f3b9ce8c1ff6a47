#include "chord3/oracle.hpp"

#include <algorithm>
#include <deque>

namespace chord3 {

namespace {

std::uint8_t bit(Color c) { return static_cast<std::uint8_t>(1u << static_cast<int>(c)); }

struct Search {
    const Instance& inst;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    bool budget_blown = false;

    std::vector<std::vector<int>> adj;  // by vertex id
    std::vector<int> order;             // descending degree, then id
    std::vector<std::uint8_t> mask;     // remaining list per vertex id
    std::vector<std::int8_t> color;     // -1 = unassigned

    std::vector<std::pair<int, std::uint8_t>> mask_trail;
    std::vector<int> assign_trail;

    explicit Search(const Instance& instance, std::uint64_t node_budget)
        : inst(instance), budget(node_budget) {
        const int capacity = inst.diagram.vertex_capacity();
        adj.resize(capacity);
        mask.assign(capacity, 0);
        color.assign(capacity, -1);

        std::vector<int> live = inst.diagram.live_vertices();
        for (std::size_t i = 0; i < live.size(); ++i) {
            for (std::size_t j = i + 1; j < live.size(); ++j) {
                int u = live[i], w = live[j];
                if (crosses(inst.diagram.chord(u), inst.diagram.chord(w),
                            inst.diagram.universe_size())) {
                    adj[u].push_back(w);
                    adj[w].push_back(u);
                }
            }
        }
        for (int v : live) mask[v] = inst.list(v).bits();
        order = live;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (adj[a].size() != adj[b].size()) return adj[a].size() > adj[b].size();
            return a < b;
        });
    }

    // Assign v := c and chase the consequences; singleton lists assign their
    // vertex immediately. False on any emptied list or clashing assignment.
    bool propagate(int v, Color c) {
        std::deque<std::pair<int, Color>> work{{v, c}};
        while (!work.empty()) {
            auto [u, cu] = work.front();
            work.pop_front();
            if (color[u] >= 0) {
                if (color[u] != static_cast<std::int8_t>(cu)) return false;
                continue;
            }
            color[u] = static_cast<std::int8_t>(cu);
            assign_trail.push_back(u);
            for (int w : adj[u]) {
                if (color[w] >= 0) {
                    if (color[w] == static_cast<std::int8_t>(cu)) return false;
                    continue;
                }
                if (!(mask[w] & bit(cu))) continue;
                mask_trail.emplace_back(w, mask[w]);
                mask[w] = static_cast<std::uint8_t>(mask[w] & ~bit(cu));
                if (mask[w] == 0) return false;
                if (auto single = ColorSet::from_bits(mask[w]).single())
                    work.emplace_back(w, *single);
            }
        }
        return true;
    }

    void undo(std::size_t mask_mark, std::size_t assign_mark) {
        while (mask_trail.size() > mask_mark) {
            auto [w, old] = mask_trail.back();
            mask_trail.pop_back();
            mask[w] = old;
        }
        while (assign_trail.size() > assign_mark) {
            color[assign_trail.back()] = -1;
            assign_trail.pop_back();
        }
    }

    bool dfs(std::size_t pos) {
        while (pos < order.size() && color[order[pos]] >= 0) ++pos;
        if (pos == order.size()) return true;
        const int v = order[pos];
        for (Color c : kColorOrder) {
            if (!(mask[v] & bit(c))) continue;
            if (++nodes > budget) {
                budget_blown = true;
                return false;
            }
            const std::size_t mask_mark = mask_trail.size();
            const std::size_t assign_mark = assign_trail.size();
            if (propagate(v, c) && dfs(pos + 1)) return true;
            undo(mask_mark, assign_mark);
            if (budget_blown) return false;
        }
        return false;
    }
};

}  // namespace

OracleResult oracle_solve(const Instance& instance, std::uint64_t node_budget) {
    Search search(instance, node_budget);
    OracleResult result;
    result.coloring = PartialColoring(instance.diagram.vertex_capacity());

    // Settle forced vertices before the first decision.
    bool feasible = true;
    for (int v : instance.diagram.live_vertices()) {
        if (search.color[v] >= 0) continue;
        if (auto single = ColorSet::from_bits(search.mask[v]).single()) {
            if (!search.propagate(v, *single)) {
                feasible = false;
                break;
            }
        }
    }

    const bool found = feasible && search.dfs(0);
    result.nodes = search.nodes;
    if (found) {
        result.status = OracleStatus::Yes;
        for (int v : instance.diagram.live_vertices())
            result.coloring.set(v, static_cast<Color>(search.color[v]));
    } else {
        result.status = search.budget_blown ? OracleStatus::BudgetExceeded : OracleStatus::No;
    }
    return result;
}

}  // namespace chord3
