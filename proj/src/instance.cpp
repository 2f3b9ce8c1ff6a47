#include "chord3/instance.hpp"

#include <deque>

namespace chord3 {

char to_letter(Color c) {
    switch (c) {
        case Color::Red: return 'R';
        case Color::Green: return 'G';
        case Color::Blue: return 'B';
    }
    return '?';
}

std::optional<Color> color_from_letter(char letter) {
    switch (letter) {
        case 'R': return Color::Red;
        case 'G': return Color::Green;
        case 'B': return Color::Blue;
        default: return std::nullopt;
    }
}

int ColorSet::size() const {
    return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1);
}

std::optional<Color> ColorSet::single() const {
    if (size() != 1) return std::nullopt;
    for (Color c : kColorOrder)
        if (contains(c)) return c;
    return std::nullopt;
}

std::string to_string(ColorSet s) {
    std::string out;
    for (Color c : kColorOrder)
        if (s.contains(c)) out.push_back(to_letter(c));
    return out;
}

bool PartialColoring::contains(int v) const {
    return v >= 0 && v < capacity() && color_[v] >= 0;
}

std::optional<Color> PartialColoring::get(int v) const {
    if (!contains(v)) return std::nullopt;
    return static_cast<Color>(color_[v]);
}

void PartialColoring::set(int v, Color c) {
    detail::require(v >= 0 && v < capacity(), "vertex outside coloring capacity");
    detail::require(color_[v] < 0, "vertex already colored");
    color_[v] = static_cast<std::int8_t>(c);
    ++count_;
}

void PartialColoring::merge(const PartialColoring& other) {
    detail::require(capacity() == other.capacity(), "merging colorings of different capacity");
    for (int v = 0; v < capacity(); ++v) {
        if (other.color_[v] >= 0) {
            detail::require(color_[v] < 0, "overlapping domains in coloring merge");
            color_[v] = other.color_[v];
            ++count_;
        }
    }
}

std::vector<std::pair<int, Color>> PartialColoring::entries() const {
    std::vector<std::pair<int, Color>> out;
    out.reserve(count_);
    for (int v = 0; v < capacity(); ++v)
        if (color_[v] >= 0) out.emplace_back(v, static_cast<Color>(color_[v]));
    return out;
}

const ColorSet& Instance::list(int v) const {
    detail::require(diagram.live(v), "list() on a dead vertex");
    return lists[v];
}

Instance make_instance(ChordDiagram diagram, std::vector<ColorSet> lists) {
    detail::require(static_cast<int>(lists.size()) == diagram.vertex_capacity(),
                    "list table does not match vertex capacity");
    for (int v : diagram.live_vertices())
        detail::require(!lists[v].empty(), "live vertex with empty color list");
    return Instance{std::move(diagram), std::move(lists)};
}

std::optional<Reduced> reduce(const Instance& instance) {
    Instance work = instance;
    PartialColoring forced(work.diagram.vertex_capacity());

    std::deque<int> queue;
    std::vector<char> queued(work.diagram.vertex_capacity(), 0);
    for (int v : work.diagram.live_vertices()) {
        if (work.lists[v].size() == 1) {
            queue.push_back(v);
            queued[v] = 1;
        }
    }

    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        // Queued vertices stay live and singleton until processed: a later
        // removal of their only color aborts the whole reduction instead.
        std::optional<Color> c = work.lists[v].single();
        detail::require(c.has_value(), "queued vertex lost singleton status");
        Chord chord_v = work.diagram.chord(v);
        work.diagram.erase(v);
        forced.set(v, *c);

        for (int w : work.diagram.live_vertices()) {
            if (!crosses(chord_v, work.diagram.chord(w), work.diagram.universe_size())) continue;
            if (!work.lists[w].contains(*c)) continue;
            work.lists[w].remove(*c);
            if (work.lists[w].empty()) return std::nullopt;
            if (work.lists[w].size() == 1 && !queued[w]) {
                queue.push_back(w);
                queued[w] = 1;
            }
        }
    }
    return Reduced{std::move(work), std::move(forced)};
}

Instance assign(const Instance& instance, const std::vector<int>& vertices, Color color) {
    Instance out = instance;
    for (int v : vertices) {
        detail::require(out.diagram.live(v), "assign() to a dead vertex");
        detail::require(out.lists[v].contains(color), "assigned color missing from list");
        out.lists[v] = ColorSet::of(color);
    }
    return out;
}

Instance restrict_to(const Instance& instance, const std::function<bool(int)>& keep) {
    Instance out = instance;
    for (int v : instance.diagram.live_vertices())
        if (!keep(v)) out.diagram.erase(v);
    return out;
}

bool validate_coloring(const Instance& original, const PartialColoring& coloring,
                       std::string* diagnostic) {
    auto fail = [&](const std::string& why) {
        if (diagnostic) *diagnostic = why;
        return false;
    };
    std::vector<int> live = original.diagram.live_vertices();
    for (int v : live) {
        std::optional<Color> c = coloring.get(v);
        if (!c) return fail("vertex " + std::to_string(v) + " is uncolored");
        if (!original.lists[v].contains(*c))
            return fail("vertex " + std::to_string(v) + " colored outside its list");
    }
    for (std::size_t i = 0; i < live.size(); ++i) {
        for (std::size_t j = i + 1; j < live.size(); ++j) {
            int u = live[i], w = live[j];
            if (!crosses(original.diagram.chord(u), original.diagram.chord(w),
                         original.diagram.universe_size()))
                continue;
            if (coloring.get(u) == coloring.get(w))
                return fail("crossing chords " + std::to_string(u) + " and " + std::to_string(w) +
                            " share a color");
        }
    }
    return true;
}

}  // namespace chord3
