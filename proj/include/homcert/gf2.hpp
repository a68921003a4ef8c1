#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "homcert/cochain.hpp"
#include "homcert/graph.hpp"
#include "homcert/hom_complex.hpp"

namespace homcert {

// Packed bit vector over GF(2).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (i % 64);
        if (v)
            words_[i / 64] |= bit;
        else
            words_[i / 64] &= ~bit;
    }
    void toggle(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
    std::size_t popcount() const;
    bool is_zero() const;

    std::uint64_t* words() { return words_.data(); }
    const std::uint64_t* words() const { return words_.data(); }
    std::size_t word_count() const { return words_.size(); }

    bool operator==(const BitVec&) const = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

// Dense matrix over GF(2), one contiguous packed-bit block per row.  Row
// operations go through the bitops kernels, so elimination is word-parallel
// (and SIMD-parallel where available).
class GF2Matrix {
public:
    GF2Matrix() = default;
    GF2Matrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return wpr_; }

    bool get(std::size_t i, std::size_t j) const {
        return (row(i)[j / 64] >> (j % 64)) & 1u;
    }
    void set(std::size_t i, std::size_t j, bool v) {
        const std::uint64_t bit = std::uint64_t{1} << (j % 64);
        if (v)
            row(i)[j / 64] |= bit;
        else
            row(i)[j / 64] &= ~bit;
    }
    void toggle(std::size_t i, std::size_t j) {
        row(i)[j / 64] ^= std::uint64_t{1} << (j % 64);
    }

    std::uint64_t* row(std::size_t i) { return data_.data() + i * wpr_; }
    const std::uint64_t* row(std::size_t i) const { return data_.data() + i * wpr_; }

    bool is_zero() const;

    bool operator==(const GF2Matrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

// Coboundary operator as a matrix in the canonical (sorted) cell bases:
// entry (row tau, column sigma) = 1 iff sigma is a facet of tau.  Built by
// streaming facets of the upper slice -- cheaper than cofacet searches from
// below.  Throws std::invalid_argument unless upper.dimension ==
// lower.dimension + 1 and the slices share (T, G).
GF2Matrix coboundary_matrix(const ComplexSlice& lower, const ComplexSlice& upper);

// Quotient variant on orbit slices: entry = parity of the number of facets
// of the representative of tau landing in the orbit of sigma.  Independent
// of the choice of representatives.
GF2Matrix coboundary_matrix(const OrbitSlice& lower, const OrbitSlice& upper,
                            const Involution& psi);

// Rank via elimination with deterministic first-available-column pivoting.
// Takes its argument by value: elimination is destructive and callers
// usually still want the matrix.
std::size_t gf2_rank(GF2Matrix m);

// Some x with Mx = b, or nullopt when b is outside the column space.
// Deterministic: the returned x is the one supported on pivot columns of
// the eliminated form.  pre: b.size() == m.rows().
std::optional<BitVec> gf2_solve(const GF2Matrix& m, const BitVec& b);

BitVec gf2_mat_vec(const GF2Matrix& m, const BitVec& x);
GF2Matrix gf2_mat_mul(const GF2Matrix& a, const GF2Matrix& b);

// Mod-2 Betti numbers of Hom(T, G), or of its quotient when an involution
// is supplied: b_d = #cells_d - rank(delta_d) - rank(delta_{d-1}).
// Free-action failures propagate as FreeActionViolation.
std::vector<std::int64_t> betti_mod2(const Graph& T, const Graph& G,
                                     const Involution* psi = nullptr,
                                     int jobs = 1);

// First line `gf2 rows=<r> cols=<c>`, then one 0/1 string per row.
void dump_matrix(std::ostream& out, const GF2Matrix& m);

}  // namespace homcert
