#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "homcert/cell.hpp"
#include "homcert/graph.hpp"

namespace homcert {

// The d-dimensional cells of Hom(T, G), sorted by Cell's total order.
struct ComplexSlice {
    Graph T;
    Graph G;
    int dimension = 0;
    std::vector<Cell> cells;
};

// A cell is valid when every entry is a nonempty color set and, for every
// edge (u, v) of T, each color in entry(u) is G-adjacent to each color in
// entry(v).  For complete G that degenerates to "adjacent entries are
// disjoint".  Structural mismatches (entry count != |V(T)|, colors outside
// G's vertex range) are caller errors and throw std::invalid_argument;
// combinatorially broken cells just return false.
bool is_valid_cell(const Graph& T, const Graph& G, const Cell& c);

// All valid cells of dimension d, enumerated by size profile + depth-first
// color assignment, then sorted.  jobs > 1 splits profiles across threads;
// the result is identical regardless of jobs.
ComplexSlice enumerate_cells(const Graph& T, const Graph& G, int d, int jobs = 1);

// Streaming variant: visits each valid d-cell exactly once, in profile-major
// DFS order (NOT sorted), without materializing the slice.
void for_each_cell(const Graph& T, const Graph& G, int d,
                   const std::function<void(const Cell&)>& fn);

// Codimension-1 faces: drop one color from one entry of size >= 2.  Facets
// of a valid cell are automatically valid.  Sorted, no duplicates.
std::vector<Cell> facets(const Cell& c);

// Valid cells one dimension up that have c as a facet: add one color to one
// entry, subject to validity against T and G.  Sorted, no duplicates.
std::vector<Cell> cofacets(const Graph& T, const Graph& G, const Cell& c);

// Cell counts per dimension, from 0 up to the top nonempty dimension.  An
// empty complex gives an empty vector.
std::vector<std::int64_t> f_vector(const Graph& T, const Graph& G, int jobs = 1);

// Text format:
//   hom-slice T=<name> G=<name> dim=<d> count=<k>
// followed by one cell per line in slice order.
void write_slice(std::ostream& out, const ComplexSlice& slice);

}  // namespace homcert
