#ifndef CHORD3_INSTANCE_HPP
#define CHORD3_INSTANCE_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chord3/chords.hpp"

namespace chord3 {

enum class Color : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

// Deterministic iteration order everywhere: red, green, blue.
inline constexpr std::array<Color, 3> kColorOrder{Color::Red, Color::Green, Color::Blue};

char to_letter(Color c);
std::optional<Color> color_from_letter(char letter);

// Subset of {red, green, blue} as a 3-bit mask. An empty set marks an
// infeasible vertex and is never stored in a live instance.
class ColorSet {
  public:
    ColorSet() = default;
    static ColorSet all() { return ColorSet(0b111); }
    static ColorSet none() { return ColorSet(0); }
    static ColorSet of(Color c) { return ColorSet(static_cast<std::uint8_t>(1u << static_cast<int>(c))); }
    static ColorSet from_bits(std::uint8_t bits) { return ColorSet(bits & 0b111); }

    bool contains(Color c) const { return bits_ & (1u << static_cast<int>(c)); }
    ColorSet& add(Color c) { bits_ |= 1u << static_cast<int>(c); return *this; }
    ColorSet& remove(Color c) { bits_ &= ~(1u << static_cast<int>(c)); return *this; }
    ColorSet& intersect(ColorSet other) { bits_ &= other.bits_; return *this; }
    int size() const;
    bool empty() const { return bits_ == 0; }
    std::optional<Color> single() const;
    std::uint8_t bits() const { return bits_; }

    bool operator==(const ColorSet&) const = default;

  private:
    explicit ColorSet(std::uint8_t bits) : bits_(bits) {}
    std::uint8_t bits_ = 0;
};

std::string to_string(ColorSet s);  // subset of "RGB" in that order

// Vertex -> color decisions accumulated for vertices removed from an
// instance. Merging requires disjoint domains; the solver relies on that to
// stitch subinstance colorings back into a full answer.
class PartialColoring {
  public:
    PartialColoring() = default;
    explicit PartialColoring(int capacity) : color_(capacity, -1) {}

    int capacity() const { return static_cast<int>(color_.size()); }
    int size() const { return count_; }
    bool contains(int v) const;
    std::optional<Color> get(int v) const;
    void set(int v, Color c);  // v must be unset
    void merge(const PartialColoring& other);
    std::vector<std::pair<int, Color>> entries() const;  // ascending vertex id

    bool operator==(const PartialColoring&) const = default;

  private:
    std::vector<std::int8_t> color_;  // -1 = unset
    int count_ = 0;
};

// A chord diagram plus a non-empty color list per live chord.
struct Instance {
    ChordDiagram diagram;
    std::vector<ColorSet> lists;  // by vertex id; meaningful for live vertices

    int size() const { return diagram.live_count(); }
    const ColorSet& list(int v) const;

    bool operator==(const Instance&) const = default;
};

Instance make_instance(ChordDiagram diagram, std::vector<ColorSet> lists);

struct Reduced {
    Instance instance;
    PartialColoring partial;

    bool operator==(const Reduced&) const = default;
};

// Exhaustive application of the singleton-list reduction: a vertex whose list
// is a single color gets that color, is deleted, and the color is removed
// from the lists of all chords crossing it. Processing is a FIFO queue seeded
// in ascending vertex-id order. Returns nullopt the moment any list empties
// (the instance is infeasible).
std::optional<Reduced> reduce(const Instance& instance);

// Replaces the lists of the named vertices by {color}. The color must already
// be in each of those lists.
Instance assign(const Instance& instance, const std::vector<int>& vertices, Color color);

// Subinstance with exactly the live chords satisfying keep(v); lists and the
// position universe are unchanged.
Instance restrict_to(const Instance& instance, const std::function<bool(int)>& keep);

// True iff the coloring is total on the instance's live vertices, every color
// is taken from the vertex's list, and no crossing pair shares a color.
bool validate_coloring(const Instance& original, const PartialColoring& coloring,
                       std::string* diagnostic = nullptr);

}  // namespace chord3

#endif
