#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "homcert/cochain.hpp"
#include "homcert/gf2.hpp"
#include "homcert/hom_complex.hpp"

namespace homcert {

// Sparse companion to GF2Matrix for the coboundary systems that outgrow
// dense rows (hundreds of thousands on a side, a handful of entries each).
// Rank and solve use elimination with min-weight pivot rows and min-fill
// pivot columns, which keeps fill-in small on these incidence-like matrices.
// Results agree with the dense routines bit for bit; tests enforce that on
// every instance both can handle.
struct SparseGF2 {
    std::size_t rows = 0;
    std::size_t cols = 0;
    // Sorted column indices per row.  uint32 is ample: the cell cap is 64
    // vertices and slices top out far below 2^32.
    std::vector<std::vector<std::uint32_t>> row_entries;
};

SparseGF2 sparse_coboundary_matrix(const ComplexSlice& lower,
                                   const ComplexSlice& upper);
SparseGF2 sparse_coboundary_matrix(const OrbitSlice& lower,
                                   const OrbitSlice& upper,
                                   const Involution& psi);

SparseGF2 sparse_from_dense(const GF2Matrix& m);
GF2Matrix sparse_to_dense(const SparseGF2& m);

// Appends one extra column holding b (for the rank-augmentation membership
// test: b solvable iff rank(M) == rank([M | b])).
SparseGF2 augment_with(const SparseGF2& m, const BitVec& b);

std::size_t sparse_rank(const SparseGF2& m);

BitVec sparse_mat_vec(const SparseGF2& m, const BitVec& x);

struct SparseSolveResult {
    std::size_t rank = 0;
    std::optional<BitVec> solution;  // some x with Mx = b, if any
};

SparseSolveResult sparse_solve(const SparseGF2& m, const BitVec& b);

}  // namespace homcert
