#ifndef CHORD3_IO_HPP
#define CHORD3_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "chord3/bookembed.hpp"
#include "chord3/instance.hpp"

namespace chord3 {

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message)
        : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
          line(line_number) {}

    int line;
};

// Chord-instance text format: a `n=<count>` header, then one `<p> <q> <colors>`
// line per chord with positions in [0, 2n) and colors a non-empty subset of
// the letters R, G, B in that order. `#` starts a comment.
Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

// Ordered-graph text format: `n=<count>` header, then one `<u> <v>` line per
// edge with 1-based endpoints; the vertex order is 1..n.
OrderedGraph parse_ordered_graph(std::string_view text);
std::string serialize_ordered_graph(const OrderedGraph& graph);

// Coloring text format: one `<vertex-id> <letter>` line per colored vertex.
PartialColoring parse_coloring(std::string_view text, int capacity);
std::string serialize_coloring(const PartialColoring& coloring);

enum class ListDensity { Full, DropOne, Mixed };

const char* to_string(ListDensity density);
// Accepts "full", "drop-one", "mixed".
ListDensity density_from_string(std::string_view name);

// Uniform random perfect matching of 2n positions, lists drawn per density:
// full keeps all three colors, drop-one removes one uniformly chosen color
// with probability drop_p, mixed picks one of the seven non-empty subsets
// uniformly. Byte-identical output for identical (n, seed, density, drop_p).
Instance gen_random(int n, std::uint64_t seed, ListDensity density, double drop_p = 0.5);

// Unit circle with endpoints at angle 2*pi*p/universe and chords as straight
// segments, colored per the coloring when given, gray otherwise.
std::string render_svg(const Instance& instance, const PartialColoring* coloring = nullptr);

}  // namespace chord3

#endif
