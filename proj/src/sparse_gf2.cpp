#include "homcert/sparse_gf2.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace homcert {

namespace {

template <typename CellLike, typename FacetOrbit>
SparseGF2 build_sparse(std::size_t nrows, std::size_t ncols,
                       const std::vector<CellLike>& upper, FacetOrbit&& column_of) {
    SparseGF2 m;
    m.rows = nrows;
    m.cols = ncols;
    m.row_entries.resize(nrows);
    for (std::size_t i = 0; i < nrows; ++i) {
        std::vector<std::uint32_t>& row = m.row_entries[i];
        for (const Cell& f : facets(upper[i]))
            row.push_back(column_of(f));
        std::sort(row.begin(), row.end());
        // Mod 2: a column hit twice cancels.  Cannot happen for distinct
        // facets of one cell upstairs, but the quotient variant can map two
        // facets to one orbit.
        std::vector<std::uint32_t> reduced;
        for (std::size_t a = 0; a < row.size();) {
            std::size_t b = a;
            while (b < row.size() && row[b] == row[a])
                ++b;
            if ((b - a) % 2 == 1)
                reduced.push_back(row[a]);
            a = b;
        }
        row = std::move(reduced);
    }
    return m;
}

std::uint32_t lower_index(const std::vector<Cell>& cells, const Cell& f) {
    auto it = std::lower_bound(cells.begin(), cells.end(), f);
    if (it == cells.end() || !(*it == f))
        throw std::invalid_argument(
            "sparse_coboundary_matrix: facet missing from lower slice");
    return static_cast<std::uint32_t>(it - cells.begin());
}

std::uint32_t lower_index(const std::vector<Orbit>& orbits, const Orbit& o) {
    auto it = std::lower_bound(orbits.begin(), orbits.end(), o);
    if (it == orbits.end() || !(*it == o))
        throw std::invalid_argument(
            "sparse_coboundary_matrix: facet orbit missing from lower slice");
    return static_cast<std::uint32_t>(it - orbits.begin());
}

void check_dims(int lower_dim, int upper_dim) {
    if (upper_dim != lower_dim + 1)
        throw std::invalid_argument(
            "sparse_coboundary_matrix: upper dimension must be lower + 1");
}

// Elimination shared by rank and solve.  Pivot rows are frozen in the order
// found; active rows shrink toward empty.  The heap orders active rows by
// current weight (stale entries are skipped by re-checking the weight), and
// within a pivot row the column with the fewest active occurrences wins --
// the classic minimum-fill heuristic.
struct Eliminator {
    std::vector<std::vector<std::uint32_t>> rows;
    std::vector<std::uint32_t> col_count;          // active rows touching col
    std::vector<std::vector<std::uint32_t>> col_rows;  // superset, lazily pruned
    std::vector<bool> frozen;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pivots;  // (col, row)
    BitVec* b = nullptr;  // eliminated alongside when solving

    explicit Eliminator(const SparseGF2& m, BitVec* rhs) : b(rhs) {
        rows = m.row_entries;
        col_count.assign(m.cols, 0);
        col_rows.resize(m.cols);
        frozen.assign(m.rows, false);
        for (std::size_t i = 0; i < m.rows; ++i)
            for (std::uint32_t c : rows[i]) {
                ++col_count[c];
                col_rows[c].push_back(static_cast<std::uint32_t>(i));
            }
    }

    void run() {
        using Entry = std::pair<std::uint32_t, std::uint32_t>;  // (weight, row)
        std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (!rows[i].empty())
                heap.emplace(static_cast<std::uint32_t>(rows[i].size()),
                             static_cast<std::uint32_t>(i));
        std::vector<std::uint32_t> scratch;
        while (!heap.empty()) {
            auto [w, pi] = heap.top();
            heap.pop();
            if (frozen[pi] || rows[pi].size() != w || w == 0)
                continue;
            // Min-fill pivot column within the chosen row, ties to the left.
            std::uint32_t pj = rows[pi][0];
            for (std::uint32_t c : rows[pi])
                if (col_count[c] < col_count[pj] || (col_count[c] == col_count[pj] && c < pj))
                    pj = c;
            frozen[pi] = true;
            pivots.emplace_back(pj, pi);
            // Snapshot and prune the consumers of pj before rewriting them.
            std::vector<std::uint32_t> victims;
            for (std::uint32_t k : col_rows[pj])
                if (k != pi && !frozen[k] &&
                    std::binary_search(rows[k].begin(), rows[k].end(), pj))
                    victims.push_back(k);
            std::sort(victims.begin(), victims.end());
            victims.erase(std::unique(victims.begin(), victims.end()),
                          victims.end());
            for (std::uint32_t k : victims) {
                xor_row(k, pi, scratch);
                if (b && b->get(pi))
                    b->toggle(k);
                if (!rows[k].empty())
                    heap.emplace(static_cast<std::uint32_t>(rows[k].size()), k);
            }
            for (std::uint32_t c : rows[pi])
                --col_count[c];
            col_rows[pj].clear();
            col_rows[pj].shrink_to_fit();
        }
    }

    // rows[k] ^= rows[p], maintaining col_count and col_rows for the columns
    // entering or leaving row k.
    void xor_row(std::uint32_t k, std::uint32_t p,
                 std::vector<std::uint32_t>& scratch) {
        const auto& a = rows[k];
        const auto& q = rows[p];
        scratch.clear();
        std::size_t ia = 0, iq = 0;
        while (ia < a.size() && iq < q.size()) {
            if (a[ia] < q[iq]) {
                scratch.push_back(a[ia++]);
            } else if (a[ia] > q[iq]) {
                const std::uint32_t c = q[iq++];
                scratch.push_back(c);
                ++col_count[c];
                col_rows[c].push_back(k);
            } else {
                --col_count[a[ia]];
                ++ia;
                ++iq;
            }
        }
        for (; ia < a.size(); ++ia)
            scratch.push_back(a[ia]);
        for (; iq < q.size(); ++iq) {
            const std::uint32_t c = q[iq];
            scratch.push_back(c);
            ++col_count[c];
            col_rows[c].push_back(k);
        }
        rows[k] = scratch;
    }
};

}  // namespace

SparseGF2 sparse_coboundary_matrix(const ComplexSlice& lower,
                                   const ComplexSlice& upper) {
    check_dims(lower.dimension, upper.dimension);
    return build_sparse(upper.cells.size(), lower.cells.size(), upper.cells,
                        [&](const Cell& f) { return lower_index(lower.cells, f); });
}

SparseGF2 sparse_coboundary_matrix(const OrbitSlice& lower,
                                   const OrbitSlice& upper,
                                   const Involution& psi) {
    check_dims(lower.dimension, upper.dimension);
    std::vector<Cell> reps;
    reps.reserve(upper.orbits.size());
    for (const Orbit& o : upper.orbits)
        reps.push_back(o.representative);
    return build_sparse(reps.size(), lower.orbits.size(), reps,
                        [&](const Cell& f) {
                            return lower_index(lower.orbits, orbit_of(f, psi));
                        });
}

SparseGF2 sparse_from_dense(const GF2Matrix& m) {
    SparseGF2 s;
    s.rows = m.rows();
    s.cols = m.cols();
    s.row_entries.resize(s.rows);
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::size_t j = 0; j < s.cols; ++j)
            if (m.get(i, j))
                s.row_entries[i].push_back(static_cast<std::uint32_t>(j));
    return s;
}

GF2Matrix sparse_to_dense(const SparseGF2& s) {
    GF2Matrix m(s.rows, s.cols);
    for (std::size_t i = 0; i < s.rows; ++i)
        for (std::uint32_t j : s.row_entries[i])
            m.set(i, j, true);
    return m;
}

SparseGF2 augment_with(const SparseGF2& m, const BitVec& b) {
    if (b.size() != m.rows)
        throw std::invalid_argument("augment_with: length of b must equal rows");
    SparseGF2 out = m;
    out.cols = m.cols + 1;
    for (std::size_t i = 0; i < m.rows; ++i)
        if (b.get(i))
            out.row_entries[i].push_back(static_cast<std::uint32_t>(m.cols));
    return out;
}

std::size_t sparse_rank(const SparseGF2& m) {
    Eliminator e(m, nullptr);
    e.run();
    return e.pivots.size();
}

BitVec sparse_mat_vec(const SparseGF2& m, const BitVec& x) {
    if (x.size() != m.cols)
        throw std::invalid_argument("sparse_mat_vec: length of x must equal cols");
    BitVec y(m.rows);
    for (std::size_t i = 0; i < m.rows; ++i) {
        bool parity = false;
        for (std::uint32_t c : m.row_entries[i])
            if (x.get(c))
                parity = !parity;
        if (parity)
            y.set(i, true);
    }
    return y;
}

SparseSolveResult sparse_solve(const SparseGF2& m, const BitVec& b0) {
    if (b0.size() != m.rows)
        throw std::invalid_argument("sparse_solve: length of b must equal rows");
    BitVec b = b0;
    Eliminator e(m, &b);
    e.run();
    SparseSolveResult res;
    res.rank = e.pivots.size();
    // Every non-pivot row is now empty; a leftover 1 on the right-hand side
    // certifies that b is not a coboundary.
    for (std::size_t i = 0; i < m.rows; ++i)
        if (!e.frozen[i] && b.get(i))
            return res;
    BitVec x(m.cols);
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        const auto [pj, pi] = *it;
        bool parity = b.get(pi);
        for (std::uint32_t c : e.rows[pi])
            if (c != pj && x.get(c))
                parity = !parity;
        x.set(pj, parity);
    }
    res.solution = std::move(x);
    return res;
}

}  // namespace homcert
