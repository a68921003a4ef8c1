#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace homcert {

// Simple graphs on at most 64 vertices, stored as one neighbor bitmask per
// vertex.  The 64-vertex cap is what lets a color set (and a neighbor set)
// live in a single machine word throughout the cell machinery.
inline constexpr int kMaxVertices = 64;

class Graph {
public:
    // Vertices are 0..vertex_count-1.  Self-loops are rejected; duplicate
    // edges are collapsed.  Throws std::invalid_argument on bad input.
    Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
          std::string name = "");

    int vertex_count() const { return n_; }
    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbors(int v) const { return adj_[v]; }

    // True iff every pair of distinct vertices is adjacent.  Cached because
    // cell validity checks branch on it in the innermost enumeration loops.
    bool is_complete() const { return complete_; }

    const std::string& name() const { return name_; }

    // Sorted (u < v) edge list, mainly for printing and round-trips.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    bool complete_ = false;
    std::vector<std::uint64_t> adj_;
    std::string name_;
};

Graph cycle_graph(int m);     // C_m, m >= 3; name "cycle:<m>"
Graph complete_graph(int n);  // K_n, n >= 1; name "complete:<n>"
Graph edge_graph();           // K_2; name "edge"

// Reads "<vertex_count>" on the first line, then one "u v" pair per line.
// Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in, std::string name);

// An order-2 graph automorphism.  Construction validates both properties
// (psi(psi(v)) == v for all v, and edge preservation) and throws
// std::invalid_argument if either fails; instances are immutable, so
// downstream code can rely on them unconditionally.
class Involution {
public:
    Involution(const Graph& g, std::vector<int> perm);

    int apply(int v) const { return perm_[v]; }
    int size() const { return static_cast<int>(perm_.size()); }

private:
    std::vector<int> perm_;
};

// Negation v -> -v (mod m) on cycle_graph(m).  For odd m this fixes only
// vertex 0 and exchanges the two "antipodal" vertices (m-1)/2 and (m+1)/2.
Involution cycle_negation(int m);

// The nonidentity automorphism of edge_graph().
Involution edge_swap();

}  // namespace homcert
