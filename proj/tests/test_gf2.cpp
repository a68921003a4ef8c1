#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "homcert/bitops.hpp"
#include "homcert/certificate.hpp"
#include "homcert/gf2.hpp"
#include "homcert/membership.hpp"
#include "homcert/sparse_gf2.hpp"
#include "oracle.hpp"

using namespace homcert;

namespace {

GF2Matrix random_matrix(std::size_t rows, std::size_t cols,
                        std::mt19937_64& rng, std::size_t density_pct = 40) {
    GF2Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            if (oracle::pick(rng, 100) < density_pct)
                m.set(i, j, true);
    return m;
}

BitVec random_vec(std::size_t size, std::mt19937_64& rng) {
    BitVec v(size);
    for (std::size_t i = 0; i < size; ++i)
        if (oracle::pick(rng, 2))
            v.set(i, true);
    return v;
}

GF2Matrix dense_augment(const GF2Matrix& m, const BitVec& b) {
    GF2Matrix out(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.get(i, j))
                out.set(i, j, true);
        if (b.get(i))
            out.set(i, m.cols(), true);
    }
    return out;
}

}  // namespace

TEST_CASE("BitVec basics") {
    BitVec v(130);
    CHECK(v.size() == 130);
    CHECK(v.word_count() == 3);
    CHECK(v.is_zero());
    v.set(0, true);
    v.set(64, true);
    v.toggle(129);
    CHECK(v.popcount() == 3);
    CHECK_FALSE(v.is_zero());
    CHECK(v.get(64));
    CHECK_FALSE(v.get(63));
    v.toggle(64);
    CHECK(v.popcount() == 2);

    BitVec w(130);
    w.set(0, true);
    w.set(129, true);
    CHECK(v == w);
}

TEST_CASE("bit kernels agree across backends") {
    using bitops::Backend;
    const Backend initial = bitops::active_backend();
    std::mt19937_64 rng(99);
    // odd word counts exercise the vector tails
    for (std::size_t nwords : {std::size_t{1}, std::size_t{3}, std::size_t{4},
                               std::size_t{5}, std::size_t{7}, std::size_t{8},
                               std::size_t{9}, std::size_t{33}}) {
        std::vector<std::uint64_t> a(nwords), b(nwords);
        for (auto& w : a)
            w = rng();
        for (auto& w : b)
            w = rng();

        std::vector<std::uint64_t> ref = a;
        bitops::scalar::xor_into(ref.data(), b.data(), nwords);
        const std::uint64_t ref_pc =
            bitops::scalar::and_popcount(a.data(), b.data(), nwords);

        for (Backend backend : {Backend::scalar, Backend::avx2}) {
            if (backend == Backend::avx2 && !bitops::avx2_supported())
                continue;
            bitops::force_backend(backend);
            INFO("nwords=", nwords, " backend=", static_cast<int>(backend));
            std::vector<std::uint64_t> got = a;
            bitops::xor_into(got.data(), b.data(), nwords);
            CHECK(got == ref);
            CHECK(bitops::and_popcount(a.data(), b.data(), nwords) == ref_pc);
            CHECK_FALSE(bitops::is_zero(a.data(), nwords));
            const std::vector<std::uint64_t> zeros(nwords, 0);
            CHECK(bitops::is_zero(zeros.data(), nwords));
            std::vector<std::uint64_t> tail = zeros;
            tail[nwords - 1] = std::uint64_t{1} << 63;  // only the last word
            CHECK_FALSE(bitops::is_zero(tail.data(), nwords));
        }
    }
    if (!bitops::avx2_supported())
        CHECK_THROWS_AS(bitops::force_backend(Backend::avx2),
                        std::invalid_argument);
    bitops::force_backend(initial);
}

TEST_CASE("coboundary matrix of the edge complex") {
    const Graph t = edge_graph();
    const Graph g = complete_graph(3);
    const ComplexSlice lower = enumerate_cells(t, g, 0);
    const ComplexSlice upper = enumerate_cells(t, g, 1);
    const GF2Matrix m = coboundary_matrix(lower, upper);
    CHECK(m.rows() == 6);
    CHECK(m.cols() == 6);
    // every 1-cell has exactly two facets, and the resulting graph is one
    // 6-cycle, so the incidence rank is 6 - 1
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::size_t ones = 0;
        for (std::size_t j = 0; j < m.cols(); ++j)
            ones += m.get(i, j);
        CHECK(ones == 2);
    }
    CHECK(gf2_rank(m) == 5);

    // entries really are the facet relation
    for (std::size_t i = 0; i < upper.cells.size(); ++i) {
        const auto fs = facets(upper.cells[i]);
        for (std::size_t j = 0; j < lower.cells.size(); ++j)
            CHECK(m.get(i, j) ==
                  std::binary_search(fs.begin(), fs.end(), lower.cells[j]));
    }

    CHECK_THROWS_AS(coboundary_matrix(lower, lower), std::invalid_argument);
}

TEST_CASE("consecutive coboundary matrices multiply to zero") {
    const Graph T = cycle_graph(5);
    const Graph G = complete_graph(4);
    std::vector<ComplexSlice> s;
    for (int d = 0; d <= 2; ++d)
        s.push_back(enumerate_cells(T, G, d));
    const GF2Matrix d0 = coboundary_matrix(s[0], s[1]);
    const GF2Matrix d1 = coboundary_matrix(s[1], s[2]);
    CHECK(gf2_mat_mul(d1, d0).is_zero());

    const Involution psi = cycle_negation(5);
    const OrbitSlice q0 = orbit_slice(s[0], psi);
    const OrbitSlice q1 = orbit_slice(s[1], psi);
    const OrbitSlice q2 = orbit_slice(s[2], psi);
    const GF2Matrix qd0 = coboundary_matrix(q0, q1, psi);
    const GF2Matrix qd1 = coboundary_matrix(q1, q2, psi);
    CHECK(gf2_mat_mul(qd1, qd0).is_zero());
}

TEST_CASE("quotient coboundary rows do not depend on the representative") {
    const Graph T = cycle_graph(5);
    const Graph G = complete_graph(3);
    const Involution psi = cycle_negation(5);
    const OrbitSlice lower = orbit_slice(enumerate_cells(T, G, 0), psi);
    const OrbitSlice upper = orbit_slice(enumerate_cells(T, G, 1), psi);
    const GF2Matrix m = coboundary_matrix(lower, upper, psi);
    for (std::size_t i = 0; i < upper.orbits.size(); ++i) {
        // recompute row i from the other member of the orbit
        const Cell other =
            involution_image(upper.orbits[i].representative, psi);
        std::vector<std::size_t> hits;
        for (const Cell& f : facets(other)) {
            const Orbit o = orbit_of(f, psi);
            const auto it =
                std::lower_bound(lower.orbits.begin(), lower.orbits.end(), o);
            REQUIRE(it != lower.orbits.end());
            hits.push_back(static_cast<std::size_t>(it - lower.orbits.begin()));
        }
        std::sort(hits.begin(), hits.end());
        for (std::size_t j = 0; j < lower.orbits.size(); ++j) {
            const auto range = std::equal_range(hits.begin(), hits.end(), j);
            const std::size_t mult =
                static_cast<std::size_t>(range.second - range.first);
            CHECK(m.get(i, j) == (mult % 2 == 1));
        }
    }
}

TEST_CASE("gf2_rank on degenerate matrices") {
    CHECK(gf2_rank(GF2Matrix(4, 7)) == 0);
    GF2Matrix id(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
        id.set(i, i, true);
    CHECK(gf2_rank(id) == 5);
    // duplicated rows collapse
    GF2Matrix dup(4, 70);
    for (std::size_t j : {std::size_t{0}, std::size_t{65}, std::size_t{69}}) {
        dup.set(0, j, true);
        dup.set(2, j, true);
    }
    dup.set(1, 64, true);
    CHECK(gf2_rank(dup) == 2);
}

TEST_CASE("gf2_solve finds witnesses exactly when the rank criterion says so") {
    std::mt19937_64 rng(2024);
    int solvable_seen = 0, unsolvable_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rows = 3 + oracle::pick(rng, 10);
        const std::size_t cols = 3 + oracle::pick(rng, 10);
        const GF2Matrix m = random_matrix(rows, cols, rng);
        BitVec b(rows);
        if (trial % 2 == 0) {
            b = gf2_mat_vec(m, random_vec(cols, rng));  // forced solvable
        } else {
            b = random_vec(rows, rng);
        }
        const auto x = gf2_solve(m, b);
        const bool rank_criterion =
            gf2_rank(m) == gf2_rank(dense_augment(m, b));
        CHECK(x.has_value() == rank_criterion);
        if (x) {
            CHECK(gf2_mat_vec(m, *x) == b);
            ++solvable_seen;
        } else {
            ++unsolvable_seen;
        }
    }
    // the mix must actually exercise both outcomes
    CHECK(solvable_seen >= 30);
    CHECK(unsolvable_seen >= 10);

    GF2Matrix m(3, 3);
    CHECK_THROWS_AS(gf2_solve(m, BitVec(2)), std::invalid_argument);
    CHECK_THROWS_AS(gf2_mat_vec(m, BitVec(2)), std::invalid_argument);
}

TEST_CASE("gf2_solve with zero right-hand side") {
    std::mt19937_64 rng(5);
    const GF2Matrix m = random_matrix(6, 9, rng);
    const auto x = gf2_solve(m, BitVec(6));
    REQUIRE(x.has_value());
    CHECK(gf2_mat_vec(m, *x).is_zero());
}

TEST_CASE("sparse/dense round trips") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t rows = 1 + oracle::pick(rng, 12);
        const std::size_t cols = 1 + oracle::pick(rng, 140);  // multi-word
        const GF2Matrix m = random_matrix(rows, cols, rng, 15);
        const SparseGF2 s = sparse_from_dense(m);
        CHECK(s.rows == rows);
        CHECK(s.cols == cols);
        for (const auto& row : s.row_entries)
            CHECK(std::is_sorted(row.begin(), row.end()));
        CHECK(sparse_to_dense(s) == m);
    }
}

TEST_CASE("sparse coboundary builders match the dense ones") {
    const Graph T = cycle_graph(5);
    const Graph G = complete_graph(4);
    const Involution psi = cycle_negation(5);
    for (int d = 0; d <= 2; ++d) {
        const ComplexSlice lower = enumerate_cells(T, G, d);
        const ComplexSlice upper = enumerate_cells(T, G, d + 1);
        CHECK(sparse_coboundary_matrix(lower, upper).row_entries ==
              sparse_from_dense(coboundary_matrix(lower, upper)).row_entries);
        const OrbitSlice qlower = orbit_slice(lower, psi);
        const OrbitSlice qupper = orbit_slice(upper, psi);
        CHECK(sparse_coboundary_matrix(qlower, qupper, psi).row_entries ==
              sparse_from_dense(coboundary_matrix(qlower, qupper, psi))
                  .row_entries);
    }
}

TEST_CASE("sparse_rank matches gf2_rank") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t rows = 1 + oracle::pick(rng, 20);
        const std::size_t cols = 1 + oracle::pick(rng, 20);
        const GF2Matrix m =
            random_matrix(rows, cols, rng, 5 + oracle::pick(rng, 45));
        CHECK(sparse_rank(sparse_from_dense(m)) == gf2_rank(m));
    }
    // structured instance
    const Graph T = cycle_graph(5);
    const Graph G = complete_graph(4);
    const ComplexSlice s1 = enumerate_cells(T, G, 1);
    const ComplexSlice s2 = enumerate_cells(T, G, 2);
    const GF2Matrix d1 = coboundary_matrix(s1, s2);
    CHECK(sparse_rank(sparse_from_dense(d1)) == gf2_rank(d1));
}

TEST_CASE("sparse_solve matches the dense solver") {
    std::mt19937_64 rng(47);
    int solvable_seen = 0, unsolvable_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t rows = 2 + oracle::pick(rng, 14);
        const std::size_t cols = 2 + oracle::pick(rng, 14);
        const GF2Matrix m = random_matrix(rows, cols, rng, 30);
        const BitVec b = (trial % 2 == 0)
                             ? gf2_mat_vec(m, random_vec(cols, rng))
                             : random_vec(rows, rng);
        const SparseGF2 s = sparse_from_dense(m);
        const SparseSolveResult res = sparse_solve(s, b);
        CHECK(res.rank == gf2_rank(m));
        CHECK(res.solution.has_value() == gf2_solve(m, b).has_value());
        // rank-augmentation criterion, sparse edition
        CHECK(res.solution.has_value() ==
              (sparse_rank(augment_with(s, b)) == res.rank));
        if (res.solution) {
            CHECK(sparse_mat_vec(s, *res.solution) == b);
            ++solvable_seen;
        } else {
            ++unsolvable_seen;
        }
    }
    CHECK(solvable_seen >= 30);
    CHECK(unsolvable_seen >= 10);
}

TEST_CASE("sparse_mat_vec matches the dense product") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 20; ++trial) {
        const GF2Matrix m = random_matrix(7, 90, rng, 20);
        const BitVec x = random_vec(90, rng);
        CHECK(sparse_mat_vec(sparse_from_dense(m), x) == gf2_mat_vec(m, x));
    }
}

TEST_CASE("membership: the target class cobounds in odd-cycle quotients") {
    for (auto [r, n] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{2, 4}}) {
        const CycleComplex X = make_cycle_complex(r, n);
        const MembershipSystem sys = build_membership_system(
            X.T, X.G, X.gamma, w1_power_representative(X));
        BitVec witness;
        const MembershipReport rep = solve_membership(sys, &witness);
        INFO("r=", r, " n=", n);
        CHECK(rep.solvable);
        CHECK(rep.witness_verified);
        CHECK(rep.rank == rep.rank_augmented);

        // the found witness, read back as a cochain, cobounds the target
        const OrbitCochain w = cochain_from_indicator(witness, sys.lower);
        const OrbitCochain dw = orbit_coboundary(X.T, X.G, w, X.gamma);
        CHECK(dw.support == w1_power_representative(X).support);

        // the explicitly constructed certificate solves the same system
        const BitVec k = indicator_of(build_K(X), sys.lower);
        CHECK(sparse_mat_vec(sys.matrix, k) == sys.rhs);
    }
}

TEST_CASE("membership at r=1 degenerates to an empty system") {
    const CycleComplex X = make_cycle_complex(1, 3);
    const MembershipSystem sys =
        build_membership_system(X.T, X.G, X.gamma, w1_power_representative(X));
    CHECK(sys.matrix.rows == 0);
    CHECK(sys.matrix.cols == 3);
    CHECK(sys.rhs.size() == 0);
    const MembershipReport rep = solve_membership(sys);
    CHECK(rep.solvable);
    CHECK(rep.rank == 0);
    CHECK(rep.witness_size == 0);
}

TEST_CASE("membership rank at r=2 n=5") {
    const CycleComplex X = make_cycle_complex(2, 5);
    const MembershipSystem sys =
        build_membership_system(X.T, X.G, X.gamma, w1_power_representative(X));
    CHECK(sys.matrix.rows == 7500);
    CHECK(sys.matrix.cols == 6500);
    const MembershipReport rep = solve_membership(sys);
    CHECK(rep.solvable);
    CHECK(rep.rank == 4159);
}

TEST_CASE("membership: the edge-complex class does not cobound") {
    // Hom(K2, Kn) with the endpoint swap is the classifying sphere; the dual
    // class of the top orbit is the obstruction itself and has no preimage.
    const std::vector<std::pair<int, std::size_t>> expected_rank = {
        {3, 2}, {4, 6}, {5, 14}};
    for (const auto& [n, rank] : expected_rank) {
        const Graph t = edge_graph();
        const Graph g = complete_graph(n);
        const Involution psi = edge_swap();
        std::vector<int> palette(static_cast<std::size_t>(n - 1));
        for (int i = 1; i < n; ++i)
            palette[static_cast<std::size_t>(i - 1)] = i;
        const Cell tau = Cell::from_colors({palette, {n}});
        const OrbitCochain target{n - 2, {orbit_of(tau, psi)}};
        const MembershipSystem sys =
            build_membership_system(t, g, psi, target);
        const MembershipReport rep = solve_membership(sys);
        INFO("n=", n);
        CHECK_FALSE(rep.solvable);
        CHECK(rep.rank == rank);
        CHECK(rep.rank_augmented == rank + 1);

        // dense cross-check on these desk-sized systems
        const GF2Matrix dense = sparse_to_dense(sys.matrix);
        CHECK_FALSE(gf2_solve(dense, sys.rhs).has_value());
    }
}

TEST_CASE("indicator round trip") {
    const CycleComplex X = make_cycle_complex(2, 4);
    const Involution& psi = X.gamma;
    const OrbitSlice slice = orbit_slice(enumerate_cells(X.T, X.G, 1), psi);
    const OrbitCochain k = build_K(X);
    REQUIRE(k.dimension == 1);
    const BitVec ind = indicator_of(k, slice);
    CHECK(ind.popcount() == k.support.size());
    const OrbitCochain back = cochain_from_indicator(ind, slice);
    CHECK(back.dimension == 1);
    CHECK(back.support == k.support);

    // an orbit outside the slice is a caller error
    const OrbitSlice wrong = orbit_slice(enumerate_cells(X.T, X.G, 0), psi);
    CHECK_THROWS_AS(indicator_of(k, wrong), std::invalid_argument);
}

TEST_CASE("betti numbers of sphere-like edge complexes") {
    CHECK(betti_mod2(edge_graph(), complete_graph(3)) ==
          std::vector<std::int64_t>{1, 1});
    CHECK(betti_mod2(edge_graph(), complete_graph(4)) ==
          std::vector<std::int64_t>{1, 0, 1});
    CHECK(betti_mod2(edge_graph(), complete_graph(5)) ==
          std::vector<std::int64_t>{1, 0, 0, 1});
    CHECK(betti_mod2(edge_graph(), complete_graph(6)) ==
          std::vector<std::int64_t>{1, 0, 0, 0, 1});
}

TEST_CASE("betti numbers of projective quotients") {
    const Involution swap = edge_swap();
    CHECK(betti_mod2(edge_graph(), complete_graph(3), &swap) ==
          std::vector<std::int64_t>{1, 1});
    CHECK(betti_mod2(edge_graph(), complete_graph(4), &swap) ==
          std::vector<std::int64_t>{1, 1, 1});
    CHECK(betti_mod2(edge_graph(), complete_graph(5), &swap) ==
          std::vector<std::int64_t>{1, 1, 1, 1});
}

TEST_CASE("betti numbers of small coloring complexes") {
    // six isolated points
    CHECK(betti_mod2(cycle_graph(3), complete_graph(3)) ==
          std::vector<std::int64_t>{6});
    // empty complex
    CHECK(betti_mod2(cycle_graph(5), complete_graph(2)).empty());

    // Hom(C5, K3) is a disjoint pair of circles; cross-check the counts with
    // a union-find oracle on the 1-skeleton.
    const Graph T = cycle_graph(5);
    const Graph G = complete_graph(3);
    CHECK(betti_mod2(T, G) == std::vector<std::int64_t>{2, 2});
    const ComplexSlice v = enumerate_cells(T, G, 0);
    const ComplexSlice e = enumerate_cells(T, G, 1);
    std::vector<std::pair<std::size_t, std::size_t>> skeleton;
    for (const Cell& c : e.cells) {
        const auto fs = facets(c);
        REQUIRE(fs.size() == 2);
        const auto at = [&](const Cell& f) {
            return static_cast<std::size_t>(
                std::lower_bound(v.cells.begin(), v.cells.end(), f) -
                v.cells.begin());
        };
        skeleton.emplace_back(at(fs[0]), at(fs[1]));
    }
    const std::size_t comps = oracle::component_count(v.cells.size(), skeleton);
    CHECK(comps == 2);
    const auto betti = betti_mod2(T, G);
    CHECK(betti[0] == static_cast<std::int64_t>(comps));
    CHECK(betti[1] == static_cast<std::int64_t>(e.cells.size() -
                                                v.cells.size() + comps));

    // quotient of the two swapped circles: a single circle
    const Involution psi = cycle_negation(5);
    CHECK(betti_mod2(T, G, &psi) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("betti on a non-free quotient reports the fixed cell") {
    const Involution psi = cycle_negation(4);
    CHECK_THROWS_AS(betti_mod2(cycle_graph(4), complete_graph(3), &psi),
                    FreeActionViolation);
}

TEST_CASE("matrix dump format") {
    GF2Matrix m(2, 3);
    m.set(0, 1, true);
    m.set(1, 0, true);
    m.set(1, 2, true);
    std::ostringstream out;
    dump_matrix(out, m);
    CHECK(out.str() == "gf2 rows=2 cols=3\n010\n101\n");
}
