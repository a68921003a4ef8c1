#include "homcert/certificate.hpp"

#include <algorithm>
#include <bit>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace homcert {

namespace {

std::uint64_t full_mask(int n) {
    return (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Enumerates all cells that extend `fixed` (0 = vertex still unassigned) by
// proper singleton entries.  The fixed entries themselves are checked against
// each other first, so callers may pass combinations that turn out invalid
// (that just yields no cells, e.g. build_A at r = 1).
void complete_with_singletons(const Graph& T, const Graph& G,
                              std::vector<std::uint64_t> fixed,
                              std::vector<Cell>& out) {
    const int m = T.vertex_count();
    const std::uint64_t full = full_mask(G.vertex_count());
    for (auto [u, v] : T.edges()) {
        const std::uint64_t a = fixed[static_cast<std::size_t>(u)];
        const std::uint64_t b = fixed[static_cast<std::size_t>(v)];
        if (a != 0 && b != 0 && (a & b) != 0)  // G is complete here
            return;
    }
    auto rec = [&](auto&& self, int v) -> void {
        while (v < m && fixed[static_cast<std::size_t>(v)] != 0)
            ++v;
        if (v == m) {
            out.emplace_back(fixed);
            return;
        }
        std::uint64_t allowed = full;
        for (std::uint64_t nb = T.neighbors(v); nb != 0; nb &= nb - 1)
            allowed &= ~fixed[static_cast<std::size_t>(std::countr_zero(nb))];
        for (std::uint64_t m2 = allowed; m2 != 0; m2 &= m2 - 1) {
            fixed[static_cast<std::size_t>(v)] = m2 & -m2;
            self(self, v + 1);
        }
        fixed[static_cast<std::size_t>(v)] = 0;
    };
    rec(rec, 0);
}

}  // namespace

CycleComplex make_cycle_complex(int r, int n) {
    if (r < 1)
        throw std::invalid_argument("cycle complex: r must be >= 1");
    if (n < 3)
        throw std::invalid_argument("cycle complex: n must be >= 3");
    if (2 * r + 1 > kMaxVertices || n > kMaxVertices)
        throw std::invalid_argument("cycle complex: graph exceeds 64 vertices");
    const int m = 2 * r + 1;
    return CycleComplex{r, n, cycle_graph(m), complete_graph(n),
                        cycle_negation(m)};
}

CertificateSchedule certificate_vertices(int r) {
    if (r < 1)
        throw std::invalid_argument("certificate_vertices: r must be >= 1");
    CertificateSchedule s;
    s.r = r;
    s.t = (r % 2 == 0) ? r / 2 : (r + 1) / 2;
    s.vertices.reserve(static_cast<std::size_t>(s.t));
    for (int i = 1; i <= s.t; ++i)
        s.vertices.push_back(r % 2 == 0 ? r - 2 * i + 1 : r + 2 * i - 1);
    return s;
}

Cochain build_A(const CycleComplex& X, int v) {
    const int m = 2 * X.r + 1;
    if (v < 0 || v >= m)
        throw std::invalid_argument("build_A: vertex out of range");
    const std::uint64_t palette = full_mask(X.n - 1);       // colors 1..n-1
    const std::uint64_t last = std::uint64_t{1} << (X.n - 1);  // color n
    std::vector<std::uint64_t> fixed(static_cast<std::size_t>(m), 0);
    fixed[static_cast<std::size_t>(v)] = palette;
    fixed[static_cast<std::size_t>((v + 1) % m)] = last;
    fixed[static_cast<std::size_t>((v + m - 1) % m)] = last;
    std::vector<Cell> cells;
    complete_with_singletons(X.T, X.G, std::move(fixed), cells);
    return make_cochain(X.n - 2, std::move(cells));
}

Cochain build_B(const CycleComplex& X, int v) {
    const int m = 2 * X.r + 1;
    if (v < 0 || v >= m)
        throw std::invalid_argument("build_B: vertex out of range");
    const std::uint64_t palette = full_mask(X.n - 1);
    const std::uint64_t last = std::uint64_t{1} << (X.n - 1);
    std::vector<Cell> cells;
    // Every ordered pair (P, palette \ P) with both parts nonempty; the loop
    // visits each unordered partition twice, once per orientation.
    for (std::uint64_t p = 1; p < palette; ++p) {
        std::vector<std::uint64_t> fixed(static_cast<std::size_t>(m), 0);
        fixed[static_cast<std::size_t>(v)] = last;
        fixed[static_cast<std::size_t>((v + m - 1) % m)] = p;
        fixed[static_cast<std::size_t>((v + 1) % m)] = palette & ~p;
        complete_with_singletons(X.T, X.G, std::move(fixed), cells);
    }
    return make_cochain(X.n - 3, std::move(cells));
}

bool check_lemma(const CycleComplex& X, int v) {
    const int m = 2 * X.r + 1;
    if (v < 0 || v >= m)
        throw std::invalid_argument("check_lemma: vertex out of range");
    const Cochain lhs = coboundary(X.T, X.G, build_B(X, v));
    const Cochain rhs =
        cochain_add(build_A(X, (v + m - 1) % m), build_A(X, (v + 1) % m));
    return lhs.dimension == rhs.dimension && lhs.support == rhs.support;
}

OrbitCochain build_K(const CycleComplex& X) {
    OrbitCochain k{X.n - 3, {}};
    for (int v : certificate_vertices(X.r).vertices)
        k = orbit_add(k, quotient_map(build_B(X, v), X.gamma));
    return k;
}

OrbitCochain w1_power_representative(const CycleComplex& X) {
    return quotient_map(build_A(X, X.r), X.gamma);
}

OrbitCochain pullback_dual_cochain(const CycleComplex& X) {
    const int m = 2 * X.r + 1;
    const std::uint64_t palette = full_mask(X.n - 1);
    const std::uint64_t last = std::uint64_t{1} << (X.n - 1);
    // Restriction to the edge (r, r+1) hits tau = ([n-1], {n}) or its swap;
    // dimension preservation forces singletons everywhere else, so this is
    // again a singleton-completion walk.
    std::vector<Cell> cells;
    for (int flip = 0; flip < 2; ++flip) {
        std::vector<std::uint64_t> fixed(static_cast<std::size_t>(m), 0);
        fixed[static_cast<std::size_t>(X.r)] = flip ? last : palette;
        fixed[static_cast<std::size_t>(X.r + 1)] = flip ? palette : last;
        complete_with_singletons(X.T, X.G, std::move(fixed), cells);
    }
    // The support pairs up under gamma; the pullback is the set (not the
    // mod-2 sum, which would cancel) of the orbits it meets.
    std::vector<Orbit> orbits;
    orbits.reserve(cells.size());
    for (const Cell& c : cells)
        orbits.push_back(orbit_of(c, X.gamma));
    std::sort(orbits.begin(), orbits.end());
    orbits.erase(std::unique(orbits.begin(), orbits.end()), orbits.end());
    return OrbitCochain{X.n - 2, std::move(orbits)};
}

TheoremReport check_theorem(const CycleComplex& X) {
    TheoremReport rep;
    rep.r = X.r;
    rep.n = X.n;
    rep.schedule = certificate_vertices(X.r);
    rep.lemma_ok = true;
    for (int v : rep.schedule.vertices) {
        const bool ok = check_lemma(X, v);
        rep.lemma_at_scheduled.push_back(ok);
        rep.lemma_ok = rep.lemma_ok && ok;
        rep.b_sizes.push_back(build_B(X, v).support.size());
    }
    const OrbitCochain k = build_K(X);
    const OrbitCochain target = w1_power_representative(X);
    const OrbitCochain dk = orbit_coboundary(X.T, X.G, k, X.gamma);
    rep.a_size = build_A(X, X.r).support.size();
    rep.certificate_size = k.support.size();
    rep.w1_size = target.support.size();
    rep.theorem_holds =
        rep.lemma_ok && dk.dimension == target.dimension && dk.support == target.support;
    return rep;
}

void write_report(std::ostream& out, const TheoremReport& rep) {
    out << "theorem check r=" << rep.r << " n=" << rep.n << " (cycle:"
        << 2 * rep.r + 1 << " -> complete:" << rep.n << ")\n";
    out << "  schedule t=" << rep.schedule.t << " vertices:";
    for (int v : rep.schedule.vertices)
        out << ' ' << v;
    out << '\n';
    for (std::size_t i = 0; i < rep.schedule.vertices.size(); ++i)
        out << "  lemma at v=" << rep.schedule.vertices[i] << ": "
            << (rep.lemma_at_scheduled[i] ? "ok" : "FAIL") << "  (|B_v|="
            << rep.b_sizes[i] << " cells)\n";
    out << "  certificate K: " << rep.certificate_size
        << " orbits in dimension " << rep.n - 3 << '\n';
    out << "  target q(A_r): " << rep.w1_size << " orbits in dimension "
        << rep.n - 2 << "  (|A_r|=" << rep.a_size << " cells)\n";
    out << "  coboundary(K) == q(A_r): " << (rep.theorem_holds ? "yes" : "NO")
        << '\n';
}

std::string report_summary(const TheoremReport& rep) {
    std::ostringstream s;
    s << "r=" << rep.r << " n=" << rep.n << " lemma="
      << (rep.lemma_ok ? "ok" : "fail") << " theorem="
      << (rep.theorem_holds ? "ok" : "fail") << " |K|=" << rep.certificate_size
      << " |qAr|=" << rep.w1_size;
    return s.str();
}

}  // namespace homcert
