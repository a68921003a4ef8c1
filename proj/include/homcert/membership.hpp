#pragma once

#include "homcert/cochain.hpp"
#include "homcert/gf2.hpp"
#include "homcert/sparse_gf2.hpp"

namespace homcert {

// The coboundary-membership question, posed without reference to any known
// certificate: is a given quotient cochain of dimension d the coboundary of
// some (d-1)-cochain?  Assembled as a linear system over the canonical orbit
// bases and answered by elimination; this is the second, independent route
// to the vanishing statement the certificate machinery proves directly.
struct MembershipSystem {
    OrbitSlice lower;   // dimension d-1
    OrbitSlice upper;   // dimension d
    SparseGF2 matrix;   // quotient coboundary, upper-by-lower
    BitVec rhs;         // indicator of the target over upper.orbits
};

// Enumerates both slices of Hom(T, G)/psi and encodes the target.  Throws
// std::invalid_argument if the target has an orbit outside the upper slice
// or a nonpositive dimension.
MembershipSystem build_membership_system(const Graph& T, const Graph& G,
                                         const Involution& psi,
                                         const OrbitCochain& target,
                                         int jobs = 1);

struct MembershipReport {
    std::size_t rank = 0;            // rank of the coboundary matrix
    std::size_t rank_augmented = 0;  // rank of [matrix | rhs]
    bool solvable = false;
    std::size_t witness_size = 0;    // support size of the found preimage
    bool witness_verified = false;   // re-multiplication reproduced rhs
};

// Solves, re-multiplies, and cross-checks membership against the rank
// criterion (solvable iff the augmented rank does not grow).  The report of
// a solvable system always has witness_verified = true; anything else is a
// bug in the solver, not a property of the input.
MembershipReport solve_membership(const MembershipSystem& system,
                                  BitVec* witness_out = nullptr);

// Indicator vector of a cochain over a slice's orbit basis; throws
// std::invalid_argument if some orbit is not in the slice.
BitVec indicator_of(const OrbitCochain& q, const OrbitSlice& slice);

// Inverse direction: read a 0/1 vector over the basis back as a cochain.
OrbitCochain cochain_from_indicator(const BitVec& x, const OrbitSlice& slice);

}  // namespace homcert
