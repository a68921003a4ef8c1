#include "homcert/hom_complex.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <stdexcept>
#include <thread>

namespace homcert {

namespace {

std::uint64_t full_mask(int n) {
    return (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Colors that may sit next to the color set `s`: the common G-neighborhood
// of s.  For complete G that is simply the complement of s.
std::uint64_t compatible_colors(const Graph& G, std::uint64_t s) {
    if (G.is_complete())
        return full_mask(G.vertex_count()) & ~s;
    std::uint64_t acc = full_mask(G.vertex_count());
    for (std::uint64_t m = s; m != 0; m &= m - 1)
        acc &= G.neighbors(std::countr_zero(m));
    return acc;
}

void check_structure(const Graph& T, const Graph& G, const Cell& c) {
    if (c.vertex_count() != T.vertex_count())
        throw std::invalid_argument("cell: entry count does not match |V(T)|");
    const std::uint64_t full = full_mask(G.vertex_count());
    for (int v = 0; v < c.vertex_count(); ++v)
        if ((c.entry(v) & ~full) != 0)
            throw std::invalid_argument("cell: color outside G's vertex range");
}

// Emit every k-subset of `mask` (as a bitmask), ascending by lowest member.
template <typename Fn>
void for_each_ksubset(std::uint64_t mask, int k, std::uint64_t chosen, Fn&& fn) {
    if (k == 0) {
        fn(chosen);
        return;
    }
    if (std::popcount(mask) < k)
        return;
    std::uint64_t low = mask & -mask;
    for_each_ksubset(mask ^ low, k - 1, chosen | low, fn);
    for_each_ksubset(mask ^ low, k, chosen, fn);
}

// DFS over vertices in index order for one size profile.  Validity is
// maintained incrementally: the candidate mask for vertex v is the
// intersection of compatible_colors over the already-assigned T-neighbors
// of v, so every edge of T gets checked at its later endpoint.
void enumerate_profile(const Graph& T, const Graph& G,
                       const std::vector<int>& sizes,
                       const std::function<void(const Cell&)>& fn) {
    const int m = T.vertex_count();
    std::vector<std::uint64_t> entries(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == m) {
            fn(Cell(entries));
            return;
        }
        const std::uint64_t below = (std::uint64_t{1} << v) - 1;  // v < 64
        std::uint64_t allowed = full_mask(G.vertex_count());
        for (std::uint64_t nb = T.neighbors(v) & below; nb != 0; nb &= nb - 1)
            allowed &= compatible_colors(G, entries[static_cast<std::size_t>(
                           std::countr_zero(nb))]);
        for_each_ksubset(allowed, sizes[static_cast<std::size_t>(v)], 0,
                         [&](std::uint64_t subset) {
                             entries[static_cast<std::size_t>(v)] = subset;
                             self(self, v + 1);
                         });
        entries[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);
}

// All ways to write dimension d as per-vertex sizes (each in [1, n]),
// lexicographic.  sum(sizes) == d + m.
std::vector<std::vector<int>> size_profiles(int m, int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(m), 1);
    auto rec = [&](auto&& self, int v, int excess) -> void {
        if (v == m) {
            if (excess == 0)
                out.push_back(cur);
            return;
        }
        const int max_extra = std::min(n - 1, excess);
        for (int extra = 0; extra <= max_extra; ++extra) {
            cur[static_cast<std::size_t>(v)] = 1 + extra;
            self(self, v + 1, excess - extra);
        }
        cur[static_cast<std::size_t>(v)] = 1;
    };
    rec(rec, 0, d);
    return out;
}

}  // namespace

bool is_valid_cell(const Graph& T, const Graph& G, const Cell& c) {
    check_structure(T, G, c);
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.entry(v) == 0)
            return false;
    for (auto [u, v] : T.edges())
        if ((c.entry(v) & ~compatible_colors(G, c.entry(u))) != 0)
            return false;
    return true;
}

void for_each_cell(const Graph& T, const Graph& G, int d,
                   const std::function<void(const Cell&)>& fn) {
    if (d < 0)
        throw std::invalid_argument("for_each_cell: negative dimension");
    for (const auto& sizes : size_profiles(T.vertex_count(), G.vertex_count(), d))
        enumerate_profile(T, G, sizes, fn);
}

ComplexSlice enumerate_cells(const Graph& T, const Graph& G, int d, int jobs) {
    if (d < 0)
        throw std::invalid_argument("enumerate_cells: negative dimension");
    if (jobs < 1)
        throw std::invalid_argument("enumerate_cells: jobs must be >= 1");
    ComplexSlice slice{T, G, d, {}};
    const auto profiles = size_profiles(T.vertex_count(), G.vertex_count(), d);
    if (jobs == 1 || profiles.size() <= 1) {
        for (const auto& sizes : profiles)
            enumerate_profile(T, G, sizes,
                              [&](const Cell& c) { slice.cells.push_back(c); });
    } else {
        // Split whole profiles across threads; concatenating the buckets in
        // profile order keeps the pre-sort contents deterministic.
        const std::size_t nthreads =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), profiles.size());
        std::vector<std::vector<Cell>> buckets(profiles.size());
        std::vector<std::thread> threads;
        threads.reserve(nthreads);
        for (std::size_t t = 0; t < nthreads; ++t) {
            threads.emplace_back([&, t]() {
                for (std::size_t i = t; i < profiles.size(); i += nthreads)
                    enumerate_profile(T, G, profiles[i], [&](const Cell& c) {
                        buckets[i].push_back(c);
                    });
            });
        }
        for (auto& th : threads)
            th.join();
        for (auto& bucket : buckets)
            slice.cells.insert(slice.cells.end(),
                               std::make_move_iterator(bucket.begin()),
                               std::make_move_iterator(bucket.end()));
    }
    std::sort(slice.cells.begin(), slice.cells.end());
    return slice;
}

std::vector<Cell> facets(const Cell& c) {
    std::vector<Cell> out;
    for (int v = 0; v < c.vertex_count(); ++v) {
        std::uint64_t e = c.entry(v);
        if (std::popcount(e) < 2)
            continue;
        for (std::uint64_t m = e; m != 0; m &= m - 1) {
            Cell f = c;
            f.set_entry(v, e ^ (m & -m));
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Cell> cofacets(const Graph& T, const Graph& G, const Cell& c) {
    check_structure(T, G, c);
    std::vector<Cell> out;
    for (int v = 0; v < c.vertex_count(); ++v) {
        std::uint64_t addable = full_mask(G.vertex_count()) & ~c.entry(v);
        for (std::uint64_t nb = T.neighbors(v); nb != 0; nb &= nb - 1)
            addable &= compatible_colors(G, c.entry(std::countr_zero(nb)));
        for (std::uint64_t m = addable; m != 0; m &= m - 1) {
            Cell f = c;
            f.set_entry(v, c.entry(v) | (m & -m));
            out.push_back(std::move(f));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::int64_t> f_vector(const Graph& T, const Graph& G, int jobs) {
    (void)jobs;  // counting is cheap enough single-threaded everywhere we go
    std::vector<std::int64_t> counts;
    const int max_dim = T.vertex_count() * (G.vertex_count() - 1);
    for (int d = 0; d <= max_dim; ++d) {
        std::int64_t k = 0;
        for_each_cell(T, G, d, [&](const Cell&) { ++k; });
        if (k == 0)
            break;
        counts.push_back(k);
    }
    return counts;
}

void write_slice(std::ostream& out, const ComplexSlice& slice) {
    out << "hom-slice T=" << slice.T.name() << " G=" << slice.G.name()
        << " dim=" << slice.dimension << " count=" << slice.cells.size() << '\n';
    for (const Cell& c : slice.cells)
        out << c.to_string() << '\n';
}

}  // namespace homcert
