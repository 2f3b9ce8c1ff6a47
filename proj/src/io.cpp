#include "chord3/io.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

namespace chord3 {

namespace {

struct Line {
    int number;
    std::string text;
};

// comment-stripped, trimmed, non-empty lines with their 1-based numbers
std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t end = text.find('\n', begin);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string line(text.substr(begin, end - begin));
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const char* ws = " \t\r";
        auto first = line.find_first_not_of(ws);
        auto last = line.find_last_not_of(ws);
        if (first != std::string::npos)
            out.push_back(Line{number, line.substr(first, last - first + 1)});
        begin = end + 1;
    }
    return out;
}

int parse_header(const Line& line) {
    if (line.text.rfind("n=", 0) != 0) throw ParseError(line.number, "expected `n=<count>` header");
    std::istringstream in(line.text.substr(2));
    long long n = -1;
    char extra;
    if (!(in >> n) || in >> extra || n < 0)
        throw ParseError(line.number, "bad count in `n=` header");
    return static_cast<int>(n);
}

ColorSet parse_colors(const std::string& token, int line_number) {
    const std::string order = "RGB";
    std::size_t cursor = 0;
    ColorSet set = ColorSet::none();
    for (char ch : token) {
        auto at = order.find(ch, cursor);
        if (at == std::string::npos)
            throw ParseError(line_number,
                             "colors must be a subset of the letters R, G, B in that order");
        cursor = at + 1;
        set.add(*color_from_letter(ch));
    }
    if (set.empty()) throw ParseError(line_number, "empty color list");
    return set;
}

std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t k) {
    const std::uint64_t threshold = (0 - k) % k;
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % k;
    }
}

const char* svg_color(std::optional<Color> c) {
    if (!c) return "#999999";
    switch (*c) {
        case Color::Red: return "#d62728";
        case Color::Green: return "#2ca02c";
        case Color::Blue: return "#1f77b4";
    }
    return "#999999";
}

}  // namespace

Instance parse_instance(std::string_view text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing `n=<count>` header");
    const int n = parse_header(lines[0]);
    const int universe = 2 * n;

    if (static_cast<int>(lines.size()) - 1 != n)
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(n) + " chord lines, found " +
                             std::to_string(lines.size() - 1));

    ChordDiagram diagram(universe, n);
    std::vector<ColorSet> lists(n);
    std::vector<int> owner(universe, -1);
    for (int v = 0; v < n; ++v) {
        const Line& line = lines[v + 1];
        std::istringstream in(line.text);
        long long p, q;
        std::string colors, extra;
        if (!(in >> p >> q >> colors) || in >> extra)
            throw ParseError(line.number, "expected `<p> <q> <colors>`");
        if (p < 0 || p >= universe || q < 0 || q >= universe)
            throw ParseError(line.number, "endpoint position outside [0, 2n)");
        if (p == q) throw ParseError(line.number, "degenerate chord");
        for (long long pos : {p, q}) {
            if (owner[pos] >= 0)
                throw ParseError(line.number, "duplicate endpoint position " + std::to_string(pos));
            owner[pos] = v;
        }
        diagram.add(v, Chord{static_cast<int>(p), static_cast<int>(q)});
        lists[v] = parse_colors(colors, line.number);
    }
    return make_instance(std::move(diagram), std::move(lists));
}

std::string serialize_instance(const Instance& instance) {
    detail::require(instance.diagram.universe_size() == 2 * instance.size(),
                    "only full instances serialize; subinstances keep the parent universe");
    std::ostringstream out;
    out << "n=" << instance.size() << "\n";
    for (int v : instance.diagram.live_vertices()) {
        const Chord& c = instance.diagram.chord(v);
        out << std::min(c.p, c.q) << " " << std::max(c.p, c.q) << " " << to_string(instance.list(v))
            << "\n";
    }
    return out.str();
}

OrderedGraph parse_ordered_graph(std::string_view text) {
    std::vector<Line> lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "missing `n=<count>` header");
    OrderedGraph graph;
    graph.vertex_count = parse_header(lines[0]);

    std::vector<std::vector<char>> seen(graph.vertex_count + 1,
                                        std::vector<char>(graph.vertex_count + 1, 0));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream in(lines[i].text);
        long long u, v;
        std::string extra;
        if (!(in >> u >> v) || in >> extra) throw ParseError(lines[i].number, "expected `<u> <v>`");
        if (u < 1 || u > graph.vertex_count || v < 1 || v > graph.vertex_count)
            throw ParseError(lines[i].number, "vertex outside [1, n]");
        if (u == v) throw ParseError(lines[i].number, "self-loop");
        if (seen[u][v]) throw ParseError(lines[i].number, "duplicate edge");
        seen[u][v] = seen[v][u] = 1;
        graph.edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return graph;
}

std::string serialize_ordered_graph(const OrderedGraph& graph) {
    std::ostringstream out;
    out << "n=" << graph.vertex_count << "\n";
    for (auto [u, v] : graph.edges) out << u << " " << v << "\n";
    return out.str();
}

PartialColoring parse_coloring(std::string_view text, int capacity) {
    PartialColoring coloring(capacity);
    for (const Line& line : content_lines(text)) {
        std::istringstream in(line.text);
        long long v;
        std::string letter, extra;
        if (!(in >> v >> letter) || in >> extra || letter.size() != 1)
            throw ParseError(line.number, "expected `<vertex-id> <R|G|B>`");
        auto color = color_from_letter(letter[0]);
        if (!color) throw ParseError(line.number, "unknown color letter");
        if (v < 0 || v >= capacity) throw ParseError(line.number, "vertex id out of range");
        if (coloring.contains(static_cast<int>(v)))
            throw ParseError(line.number, "vertex colored twice");
        coloring.set(static_cast<int>(v), *color);
    }
    return coloring;
}

std::string serialize_coloring(const PartialColoring& coloring) {
    std::ostringstream out;
    for (auto [v, c] : coloring.entries()) out << v << " " << to_letter(c) << "\n";
    return out.str();
}

const char* to_string(ListDensity density) {
    switch (density) {
        case ListDensity::Full: return "full";
        case ListDensity::DropOne: return "drop-one";
        case ListDensity::Mixed: return "mixed";
    }
    return "?";
}

ListDensity density_from_string(std::string_view name) {
    if (name == "full") return ListDensity::Full;
    if (name == "drop-one") return ListDensity::DropOne;
    if (name == "mixed") return ListDensity::Mixed;
    throw std::invalid_argument("unknown density (use full, drop-one or mixed)");
}

Instance gen_random(int n, std::uint64_t seed, ListDensity density, double drop_p) {
    detail::require(n >= 1, "gen_random needs n >= 1");
    std::mt19937_64 rng(seed);

    std::vector<int> positions(2 * n);
    for (int i = 0; i < 2 * n; ++i) positions[i] = i;
    for (int i = 2 * n - 1; i > 0; --i) {
        int j = static_cast<int>(bounded(rng, static_cast<std::uint64_t>(i) + 1));
        std::swap(positions[i], positions[j]);
    }

    std::vector<Chord> chords(n);
    for (int v = 0; v < n; ++v) {
        int p = positions[2 * v], q = positions[2 * v + 1];
        chords[v] = Chord{std::min(p, q), std::max(p, q)};
    }

    const std::uint64_t drop_threshold =
        static_cast<std::uint64_t>(std::clamp(drop_p, 0.0, 1.0) * 1'000'000.0);
    std::vector<ColorSet> lists(n, ColorSet::all());
    for (int v = 0; v < n; ++v) {
        switch (density) {
            case ListDensity::Full: break;
            case ListDensity::DropOne:
                if (bounded(rng, 1'000'000) < drop_threshold)
                    lists[v].remove(kColorOrder[bounded(rng, 3)]);
                break;
            case ListDensity::Mixed:
                lists[v] = ColorSet::from_bits(static_cast<std::uint8_t>(bounded(rng, 7) + 1));
                break;
        }
    }
    return make_instance(ChordDiagram::from_chords(2 * n, chords), std::move(lists));
}

std::string render_svg(const Instance& instance, const PartialColoring* coloring) {
    const int size = 600;
    const double center = size / 2.0;
    const double radius = 260.0;
    const int universe = std::max(instance.diagram.universe_size(), 1);

    auto point = [&](int pos) {
        double angle = 2.0 * 3.14159265358979323846 * pos / universe;
        return std::pair<double, double>{center + radius * std::sin(angle),
                                         center - radius * std::cos(angle)};
    };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    out << "  <circle cx=\"" << center << "\" cy=\"" << center << "\" r=\"" << radius
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.5\"/>\n";
    for (int v : instance.diagram.live_vertices()) {
        const Chord& c = instance.diagram.chord(v);
        auto [x1, y1] = point(c.p);
        auto [x2, y2] = point(c.q);
        std::optional<Color> col = coloring ? coloring->get(v) : std::nullopt;
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
            << "\" stroke=\"" << svg_color(col) << "\" stroke-width=\"2\"/>\n";
        for (auto [x, y] : {std::pair{x1, y1}, std::pair{x2, y2}})
            out << "  <circle cx=\"" << x << "\" cy=\"" << y
                << "\" r=\"3\" fill=\"#222222\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace chord3
