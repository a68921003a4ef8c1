#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "homcert/cochain.hpp"
#include "homcert/graph.hpp"

namespace homcert {

// Working context for the odd-cycle coloring complex Hom(C_{2r+1}, K_n)
// together with the negation involution v -> -v on the cycle.  Everything in
// this header operates on cells of this family.
struct CycleComplex {
    int r = 0;
    int n = 0;
    Graph T;      // cycle on 2r+1 vertices
    Graph G;      // complete graph on n vertices
    Involution gamma;
};

// Throws std::invalid_argument for r < 1 or n < 3 (the construction below
// needs a color to spare), or parameters beyond the 64-vertex graph cap.
CycleComplex make_cycle_complex(int r, int n);

// The vertex schedule the certificate sums over.  Parity rule:
//   r even: t = r/2,     v_i = r - 2i + 1   (descending odds r-1, r-3, ..., 1)
//   r odd:  t = (r+1)/2, v_i = r + 2i - 1   (ascending odds r+1, r+3, ..., 2r)
// Chained through the two-sided lemma below, these vertices telescope: the
// multiset of their cycle neighbors {v_i - 1, v_i + 1} cancels mod 2 down to
// exactly {0, r}.
struct CertificateSchedule {
    int r = 0;
    int t = 0;
    std::vector<int> vertices;
};

CertificateSchedule certificate_vertices(int r);

// The (n-2)-cochain of all cells carrying the full palette [n-1] at vertex v.
// Disjointness then forces {n} on both cycle neighbors of v and a single
// color on every other vertex, so the support is built directly by coloring
// the remaining path.  Empty when r = 1 (the two neighbors of v are adjacent
// to each other but would share {n}).
Cochain build_A(const CycleComplex& X, int v);

// The (n-3)-cochain of all cells whose entries at v-1 and v+1 together cover
// [n-1].  The cover forces an exact partition, {n} at v itself, and
// singletons elsewhere.
Cochain build_B(const CycleComplex& X, int v);

// The two-sided coboundary identity at v: coboundary(B_v) = A_{v-1} + A_{v+1},
// checked as exact set equality.
bool check_lemma(const CycleComplex& X, int v);

// The cobounding certificate: sum over the schedule of the quotient images
// of build_B.  Lives in dimension n-3 on the quotient complex.
OrbitCochain build_K(const CycleComplex& X);

// The quotient image of build_A at the distinguished vertex r: the cochain
// whose class the certificate is supposed to kill.
OrbitCochain w1_power_representative(const CycleComplex& X);

// The same cochain derived the long way round: pull the dual of the orbit of
// tau = ([n-1], {n}) in the edge complex back along the restriction
// sigma -> (sigma(r), sigma(r+1)).  Upstairs support is A_r together with
// its involution image; one orbit per matched pair.  Must equal
// w1_power_representative; keeping both derivations is the point.
OrbitCochain pullback_dual_cochain(const CycleComplex& X);

// Self-contained verification record: re-checks the lemma at every scheduled
// vertex (never trusts a cached result) and compares the coboundary of the
// certificate against the target exactly.
struct TheoremReport {
    int r = 0;
    int n = 0;
    CertificateSchedule schedule;
    std::vector<bool> lemma_at_scheduled;    // parallel to schedule.vertices
    std::vector<std::size_t> b_sizes;        // |B_{v_i}|, upstairs cells
    std::size_t a_size = 0;                  // |A_r|, upstairs cells
    std::size_t certificate_size = 0;        // |K|, orbits
    std::size_t w1_size = 0;                 // |q(A_r)|, orbits
    bool lemma_ok = false;
    bool theorem_holds = false;
};

TheoremReport check_theorem(const CycleComplex& X);

// Human-readable block.
void write_report(std::ostream& out, const TheoremReport& report);

// Machine line: `r=<r> n=<n> lemma=ok theorem=ok |K|=<k> |qAr|=<m>`.
std::string report_summary(const TheoremReport& report);

}  // namespace homcert
