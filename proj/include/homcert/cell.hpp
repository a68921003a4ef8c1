#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace homcert {

// One cell of a Hom complex: a nonempty color set per source vertex, each
// set stored as a bitmask over the target's vertices.  Cells are plain
// values; validity against a concrete pair of graphs is checked separately
// (see hom_complex.hpp), so a Cell by itself is just the data.
class Cell {
public:
    Cell() = default;
    explicit Cell(std::vector<std::uint64_t> entries)
        : entries_(std::move(entries)) {}

    // Convenience constructor from 1-based color lists, the same numbering
    // the text format uses.  Throws std::invalid_argument on colors outside
    // [1, 64] or an empty list.
    static Cell from_colors(const std::vector<std::vector<int>>& colors);

    int vertex_count() const { return static_cast<int>(entries_.size()); }
    std::uint64_t entry(int v) const {
        return entries_[static_cast<std::size_t>(v)];
    }
    void set_entry(int v, std::uint64_t mask) {
        entries_[static_cast<std::size_t>(v)] = mask;
    }
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    bool operator==(const Cell&) const = default;

    // Total order: compare entries vertex by vertex, each entry as a sorted
    // list of colors.  Note this is NOT the numeric order of the masks --
    // {1,3} must sort after {1,2,4} the way the lists [1,3] and [1,2,4] do.
    // Everything downstream (slices, cochain supports, orbit reps) sorts by
    // this order, so determinism of all output hinges on it.
    std::strong_ordering operator<=>(const Cell& other) const;

    // Text form "{1,3};{2};{4}": 1-based colors, ascending, one ;-separated
    // group per source vertex.
    std::string to_string() const;
    static Cell parse(std::string_view text);

private:
    std::vector<std::uint64_t> entries_;
};

// Sum over vertices of (|color set| - 1); 0-cells are the graph homomorphisms.
int cell_dim(const Cell& c);

}  // namespace homcert
