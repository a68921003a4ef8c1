#pragma once

// Independent oracles for the test suite.  Everything here recomputes
// answers from first principles with deliberately different algorithms than
// the library: exhaustive filtering instead of constrained DFS, dynamic
// programming instead of enumeration, closed-form counts where available.
// Slow is fine; agreeing with the engine by construction is not.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "homcert/cell.hpp"
#include "homcert/graph.hpp"

namespace oracle {

using homcert::Cell;
using homcert::Graph;

// All valid d-cells by brute force over every assignment of a nonempty color
// subset to every vertex -- (2^n - 1)^m candidates, each checked against the
// definition edge by edge, color pair by color pair.
inline std::vector<Cell> brute_force_slice(const Graph& T, const Graph& G, int d) {
    const int m = T.vertex_count();
    const int n = G.vertex_count();
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    const auto edges = T.edges();
    std::vector<std::uint64_t> assign(static_cast<std::size_t>(m), 1);
    std::vector<Cell> out;
    for (;;) {
        int dim = 0;
        for (std::uint64_t s : assign)
            dim += std::popcount(s) - 1;
        if (dim == d) {
            bool ok = true;
            for (auto [u, v] : edges) {
                for (std::uint64_t a = assign[static_cast<std::size_t>(u)];
                     ok && a != 0; a &= a - 1)
                    for (std::uint64_t b = assign[static_cast<std::size_t>(v)];
                         b != 0; b &= b - 1)
                        if (!G.adjacent(std::countr_zero(a & -a),
                                        std::countr_zero(b & -b))) {
                            ok = false;
                            break;
                        }
                if (!ok)
                    break;
            }
            if (ok)
                out.emplace_back(assign);
        }
        // Odometer over nonempty subsets.
        int pos = 0;
        while (pos < m) {
            if (assign[static_cast<std::size_t>(pos)] < top) {
                ++assign[static_cast<std::size_t>(pos)];
                break;
            }
            assign[static_cast<std::size_t>(pos)] = 1;
            ++pos;
        }
        if (pos == m)
            break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::int64_t> brute_force_f_vector(const Graph& T,
                                                      const Graph& G) {
    std::vector<std::int64_t> f;
    const int max_dim = T.vertex_count() * (G.vertex_count() - 1);
    for (int d = 0; d <= max_dim; ++d) {
        const auto cells = brute_force_slice(T, G, d);
        if (cells.empty())
            break;
        f.push_back(static_cast<std::int64_t>(cells.size()));
    }
    return f;
}

// Number of graph homomorphisms T -> G, counted over all |V(G)|^|V(T)| maps.
inline std::int64_t count_homomorphisms(const Graph& T, const Graph& G) {
    const int m = T.vertex_count();
    const int n = G.vertex_count();
    const auto edges = T.edges();
    std::vector<int> map(static_cast<std::size_t>(m), 0);
    std::int64_t count = 0;
    for (;;) {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!G.adjacent(map[static_cast<std::size_t>(u)],
                            map[static_cast<std::size_t>(v)])) {
                ok = false;
                break;
            }
        count += ok;
        int pos = 0;
        while (pos < m && ++map[static_cast<std::size_t>(pos)] == n) {
            map[static_cast<std::size_t>(pos)] = 0;
            ++pos;
        }
        if (pos == m)
            break;
    }
    return count;
}

// Proper colorings of the m-cycle with n colors: (n-1)^m + (-1)^m (n-1).
inline std::int64_t cycle_chromatic_count(int m, int n) {
    std::int64_t p = 1;
    for (int i = 0; i < m; ++i)
        p *= n - 1;
    return p + (m % 2 == 0 ? n - 1 : -(n - 1));
}

// f-vector of Hom(C_m, K_n) by transfer-matrix dynamic programming over the
// cycle: states are color subsets, weights track total size, adjacent states
// must be disjoint.  No backtracking search involved, so this is a genuinely
// different route than enumerate_cells.
inline std::vector<std::int64_t> cycle_transfer_f_vector(int m, int n) {
    const std::size_t states = std::size_t{1} << n;
    const std::size_t max_total = static_cast<std::size_t>(m * n);
    std::vector<std::int64_t> totals(max_total + 1, 0);
    // dp[s][t] = chains v_0..v_k with fixed start set s0, current set s,
    // total size t so far.
    for (std::size_t s0 = 1; s0 < states; ++s0) {
        std::vector<std::vector<std::int64_t>> dp(
            states, std::vector<std::int64_t>(max_total + 1, 0));
        dp[s0][static_cast<std::size_t>(std::popcount(s0))] = 1;
        for (int pos = 1; pos < m; ++pos) {
            std::vector<std::vector<std::int64_t>> next(
                states, std::vector<std::int64_t>(max_total + 1, 0));
            for (std::size_t s = 1; s < states; ++s)
                for (std::size_t t = 0; t <= max_total; ++t) {
                    if (dp[s][t] == 0)
                        continue;
                    // successor sets disjoint from s
                    const std::size_t free = (states - 1) & ~s;
                    for (std::size_t s2 = free; s2 != 0;
                         s2 = (s2 - 1) & free) {
                        const std::size_t t2 =
                            t + static_cast<std::size_t>(std::popcount(s2));
                        if (t2 <= max_total)
                            next[s2][t2] += dp[s][t];
                    }
                }
            dp = std::move(next);
        }
        for (std::size_t s = 1; s < states; ++s) {
            if ((s & s0) != 0)  // closing edge of the cycle
                continue;
            for (std::size_t t = 0; t <= max_total; ++t)
                totals[t] += dp[s][t];
        }
    }
    std::vector<std::int64_t> f;
    for (std::size_t t = static_cast<std::size_t>(m); t <= max_total; ++t) {
        if (totals[t] == 0)
            break;
        f.push_back(totals[t]);
    }
    return f;
}

// Union-find component count for 1-dimensional complexes.
inline std::size_t component_count(std::size_t vertices,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::size_t> parent(vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    std::size_t components = vertices;
    for (auto [a, b] : edges) {
        const std::size_t ra = find(a), rb = find(b);
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    }
    return components;
}

// Deterministic bounded draw.  std::uniform_int_distribution is
// implementation-defined, so fixed seeds would not pin results with it.
inline std::size_t pick(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<std::size_t>(rng() % bound);
}

// k distinct elements of pool, order-normalized, via partial Fisher-Yates.
template <typename T>
std::vector<T> sample(const std::vector<T>& pool, std::size_t k,
                      std::mt19937_64& rng) {
    std::vector<std::size_t> idx(pool.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    k = std::min(k, pool.size());
    for (std::size_t i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + pick(rng, idx.size() - i)]);
    std::vector<T> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i)
        out.push_back(pool[idx[i]]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace oracle
