#pragma once

#include <iosfwd>
#include <stdexcept>
#include <vector>

#include "homcert/cell.hpp"
#include "homcert/graph.hpp"
#include "homcert/hom_complex.hpp"

namespace homcert {

// A mod-2 cochain is just its support: the sorted set of cells where it is 1.
// Addition is symmetric difference, so a cell appearing in both summands
// cancels.  The dimension tag travels along so mismatched additions can be
// rejected instead of silently producing nonsense.
struct Cochain {
    int dimension = 0;
    std::vector<Cell> support;  // sorted, unique, all of dimension `dimension`
};

// Builds a Cochain from arbitrary cell order, sorting and checking that all
// cells share the claimed dimension.
Cochain make_cochain(int dimension, std::vector<Cell> cells);

Cochain cochain_add(const Cochain& a, const Cochain& b);

// Support of the coboundary: a (d+1)-cell is in the result iff it is a
// cofacet of an odd number of support cells.
Cochain coboundary(const Graph& T, const Graph& G, const Cochain& s);

// The cell map induced by a source-graph automorphism: entry v of the image
// is entry psi(v) of the input.
Cell involution_image(const Cell& c, const Involution& psi);

// Thrown when a cell is fixed by the involution, i.e. the action fails to be
// free on cells.  Everything quotient-related is allowed to assume freeness
// only because this check is unskippable.
class FreeActionViolation : public std::runtime_error {
public:
    explicit FreeActionViolation(const Cell& fixed_cell);
    const Cell& fixed_cell() const { return cell_; }

private:
    Cell cell_;
};

// A free orbit {c, psi(c)}, held by its lexicographically smaller member.
struct Orbit {
    Cell representative;

    bool operator==(const Orbit&) const = default;
    auto operator<=>(const Orbit&) const = default;
};

// Throws FreeActionViolation if psi fixes c.
Orbit orbit_of(const Cell& c, const Involution& psi);

// Mod-2 cochain on the quotient complex, again stored as sorted support.
struct OrbitCochain {
    int dimension = 0;
    std::vector<Orbit> support;
};

// Pushes a cochain down to the quotient: an orbit is in the image iff an odd
// number of its members (0, 1, or 2) lie in the support.  Linear over mod-2
// addition, and commutes with coboundaries; both facts are property-tested.
OrbitCochain quotient_map(const Cochain& s, const Involution& psi);

OrbitCochain orbit_add(const OrbitCochain& a, const OrbitCochain& b);

// Coboundary downstairs, computed from representatives only: cofacets of one
// orbit member, folded through orbit_of.  Using a single member works
// because psi maps cofacets of c bijectively onto cofacets of psi(c).
OrbitCochain orbit_coboundary(const Graph& T, const Graph& G,
                              const OrbitCochain& q, const Involution& psi);

// One representative per orbit of a full slice, sorted.  A fixed cell throws
// FreeActionViolation; a slice that is not closed under psi (so the orbit
// count times two misses the cell count) throws invalid_argument.
struct OrbitSlice {
    Graph T;
    Graph G;
    int dimension = 0;
    std::vector<Orbit> orbits;
};

OrbitSlice orbit_slice(const ComplexSlice& slice, const Involution& psi);

// Text formats:
//   cochain dim=<d> count=<k>          / one cell per line
//   orbit-cochain dim=<d> count=<k>    / one representative per line
void write_cochain(std::ostream& out, const Cochain& s);
void write_orbit_cochain(std::ostream& out, const OrbitCochain& q);

}  // namespace homcert
