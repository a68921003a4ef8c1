#include "homcert/gf2.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>

#include "homcert/bitops.hpp"
#include "homcert/sparse_gf2.hpp"

namespace homcert {

std::size_t BitVec::popcount() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_)
        total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool BitVec::is_zero() const {
    return bitops::is_zero(words_.data(), words_.size());
}

GF2Matrix::GF2Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), wpr_((cols + 63) / 64) {
    data_.assign(rows_ * wpr_, 0);
}

bool GF2Matrix::is_zero() const {
    return bitops::is_zero(data_.data(), data_.size());
}

namespace {

void check_slice_pair(const Graph& lt, const Graph& lg, int ld, const Graph& ut,
                      const Graph& ug, int ud) {
    if (ud != ld + 1)
        throw std::invalid_argument(
            "coboundary_matrix: upper dimension must be lower + 1");
    if (!(lt == ut) || !(lg == ug))
        throw std::invalid_argument("coboundary_matrix: slices disagree on (T,G)");
}

template <typename T>
std::size_t index_of(const std::vector<T>& sorted, const T& value) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
    if (it == sorted.end() || !(*it == value))
        throw std::invalid_argument(
            "coboundary_matrix: facet missing from lower slice");
    return static_cast<std::size_t>(it - sorted.begin());
}

}  // namespace

GF2Matrix coboundary_matrix(const ComplexSlice& lower, const ComplexSlice& upper) {
    check_slice_pair(lower.T, lower.G, lower.dimension, upper.T, upper.G,
                     upper.dimension);
    GF2Matrix m(upper.cells.size(), lower.cells.size());
    for (std::size_t i = 0; i < upper.cells.size(); ++i)
        for (const Cell& f : facets(upper.cells[i]))
            m.toggle(i, index_of(lower.cells, f));
    return m;
}

GF2Matrix coboundary_matrix(const OrbitSlice& lower, const OrbitSlice& upper,
                            const Involution& psi) {
    check_slice_pair(lower.T, lower.G, lower.dimension, upper.T, upper.G,
                     upper.dimension);
    GF2Matrix m(upper.orbits.size(), lower.orbits.size());
    for (std::size_t i = 0; i < upper.orbits.size(); ++i)
        for (const Cell& f : facets(upper.orbits[i].representative))
            m.toggle(i, index_of(lower.orbits, orbit_of(f, psi)));
    return m;
}

std::size_t gf2_rank(GF2Matrix m) {
    const std::size_t rows = m.rows();
    const std::size_t wpr = m.words_per_row();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < rows; ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m.row(i)[w] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows)
            continue;
        // Rows at index >= rank are zero in every column before c, so the
        // swap and the eliminations can skip the first w words.
        if (pivot != rank)
            std::swap_ranges(m.row(rank) + w, m.row(rank) + wpr, m.row(pivot) + w);
        for (std::size_t i = rank + 1; i < rows; ++i)
            if (m.row(i)[w] & bit)
                bitops::xor_into(m.row(i) + w, m.row(rank) + w, wpr - w);
        ++rank;
    }
    return rank;
}

std::optional<BitVec> gf2_solve(const GF2Matrix& m0, const BitVec& b0) {
    if (b0.size() != m0.rows())
        throw std::invalid_argument("gf2_solve: length of b must equal rows");
    GF2Matrix m = m0;
    BitVec b = b0;
    const std::size_t rows = m.rows();
    const std::size_t wpr = m.words_per_row();
    std::vector<std::size_t> pivot_cols;  // pivot_cols[k] pairs with row k
    for (std::size_t c = 0; c < m.cols() && pivot_cols.size() < rows; ++c) {
        const std::size_t rank = pivot_cols.size();
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i) {
            if (m.row(i)[w] & bit) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows)
            continue;
        if (pivot != rank) {
            std::swap_ranges(m.row(rank) + w, m.row(rank) + wpr, m.row(pivot) + w);
            const bool t = b.get(rank);
            b.set(rank, b.get(pivot));
            b.set(pivot, t);
        }
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (m.row(i)[w] & bit) {
                bitops::xor_into(m.row(i) + w, m.row(rank) + w, wpr - w);
                if (b.get(rank))
                    b.toggle(i);
            }
        }
        pivot_cols.push_back(c);
    }
    // Below the staircase every matrix row is zero; a remaining 1 in b there
    // certifies unsolvability.
    for (std::size_t i = pivot_cols.size(); i < rows; ++i)
        if (b.get(i))
            return std::nullopt;
    BitVec x(m.cols());
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        // Row k reads: x[pivot_cols[k]] + <later pivot coordinates> = b[k].
        const bool parity =
            (bitops::and_popcount(m.row(k), x.words(),
                                  std::min(wpr, x.word_count())) & 1) != 0;
        if (parity != b.get(k))
            x.toggle(pivot_cols[k]);
    }
    return x;
}

BitVec gf2_mat_vec(const GF2Matrix& m, const BitVec& x) {
    if (x.size() != m.cols())
        throw std::invalid_argument("gf2_mat_vec: length of x must equal cols");
    BitVec y(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (bitops::and_popcount(m.row(i), x.words(), m.words_per_row()) & 1)
            y.set(i, true);
    return y;
}

GF2Matrix gf2_mat_mul(const GF2Matrix& a, const GF2Matrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("gf2_mat_mul: inner dimensions disagree");
    GF2Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t* ra = a.row(i);
        for (std::size_t w = 0; w < a.words_per_row(); ++w)
            for (std::uint64_t m = ra[w]; m != 0; m &= m - 1) {
                const std::size_t k =
                    w * 64 + static_cast<std::size_t>(std::countr_zero(m));
                bitops::xor_into(c.row(i), b.row(k), b.words_per_row());
            }
    }
    return c;
}

namespace {

// Coboundary steps whose dense form would exceed this many bits (1 GiB) are
// ranked with the sparse engine instead; same result, bounded memory.
constexpr std::size_t kDenseBitLimit = std::size_t{1} << 33;

}  // namespace

std::vector<std::int64_t> betti_mod2(const Graph& T, const Graph& G,
                                     const Involution* psi, int jobs) {
    // Materialize slices up to the top nonempty dimension.
    std::vector<ComplexSlice> slices;
    const int max_dim = T.vertex_count() * (G.vertex_count() - 1);
    for (int d = 0; d <= max_dim; ++d) {
        ComplexSlice s = enumerate_cells(T, G, d, jobs);
        if (s.cells.empty())
            break;
        slices.push_back(std::move(s));
    }
    if (slices.empty())
        return {};

    std::vector<std::size_t> counts;
    std::vector<std::size_t> ranks;  // ranks[d] = rank of delta_d
    if (psi) {
        std::vector<OrbitSlice> oslices;
        oslices.reserve(slices.size());
        for (const ComplexSlice& s : slices)
            oslices.push_back(orbit_slice(s, *psi));
        for (const OrbitSlice& s : oslices)
            counts.push_back(s.orbits.size());
        for (std::size_t d = 0; d + 1 < oslices.size(); ++d) {
            if (oslices[d].orbits.size() * oslices[d + 1].orbits.size() >
                kDenseBitLimit)
                ranks.push_back(sparse_rank(
                    sparse_coboundary_matrix(oslices[d], oslices[d + 1], *psi)));
            else
                ranks.push_back(
                    gf2_rank(coboundary_matrix(oslices[d], oslices[d + 1], *psi)));
        }
    } else {
        for (const ComplexSlice& s : slices)
            counts.push_back(s.cells.size());
        for (std::size_t d = 0; d + 1 < slices.size(); ++d) {
            if (slices[d].cells.size() * slices[d + 1].cells.size() >
                kDenseBitLimit)
                ranks.push_back(sparse_rank(
                    sparse_coboundary_matrix(slices[d], slices[d + 1])));
            else
                ranks.push_back(
                    gf2_rank(coboundary_matrix(slices[d], slices[d + 1])));
        }
    }
    std::vector<std::int64_t> betti(counts.size());
    for (std::size_t d = 0; d < counts.size(); ++d) {
        const std::size_t up = d < ranks.size() ? ranks[d] : 0;
        const std::size_t down = d > 0 ? ranks[d - 1] : 0;
        betti[d] = static_cast<std::int64_t>(counts[d]) -
                   static_cast<std::int64_t>(up) - static_cast<std::int64_t>(down);
    }
    return betti;
}

void dump_matrix(std::ostream& out, const GF2Matrix& m) {
    out << "gf2 rows=" << m.rows() << " cols=" << m.cols() << '\n';
    std::string line(m.cols(), '0');
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            line[j] = m.get(i, j) ? '1' : '0';
        out << line << '\n';
    }
}

}  // namespace homcert
