#include "homcert/membership.hpp"

#include <algorithm>
#include <stdexcept>

namespace homcert {

BitVec indicator_of(const OrbitCochain& q, const OrbitSlice& slice) {
    if (q.dimension != slice.dimension)
        throw std::invalid_argument("indicator_of: dimension mismatch");
    BitVec v(slice.orbits.size());
    for (const Orbit& o : q.support) {
        auto it = std::lower_bound(slice.orbits.begin(), slice.orbits.end(), o);
        if (it == slice.orbits.end() || !(*it == o))
            throw std::invalid_argument("indicator_of: orbit not in slice");
        v.set(static_cast<std::size_t>(it - slice.orbits.begin()), true);
    }
    return v;
}

OrbitCochain cochain_from_indicator(const BitVec& x, const OrbitSlice& slice) {
    if (x.size() != slice.orbits.size())
        throw std::invalid_argument("cochain_from_indicator: size mismatch");
    OrbitCochain q{slice.dimension, {}};
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x.get(i))
            q.support.push_back(slice.orbits[i]);
    return q;
}

MembershipSystem build_membership_system(const Graph& T, const Graph& G,
                                         const Involution& psi,
                                         const OrbitCochain& target, int jobs) {
    if (target.dimension < 1)
        throw std::invalid_argument(
            "build_membership_system: target must have dimension >= 1");
    MembershipSystem sys{
        orbit_slice(enumerate_cells(T, G, target.dimension - 1, jobs), psi),
        orbit_slice(enumerate_cells(T, G, target.dimension, jobs), psi),
        {},
        {}};
    sys.matrix = sparse_coboundary_matrix(sys.lower, sys.upper, psi);
    sys.rhs = indicator_of(target, sys.upper);
    return sys;
}

MembershipReport solve_membership(const MembershipSystem& system,
                                  BitVec* witness_out) {
    MembershipReport rep;
    SparseSolveResult solved = sparse_solve(system.matrix, system.rhs);
    rep.rank = solved.rank;
    rep.rank_augmented = sparse_rank(augment_with(system.matrix, system.rhs));
    rep.solvable = solved.solution.has_value();
    if (rep.solvable != (rep.rank == rep.rank_augmented))
        throw std::logic_error(
            "solve_membership: solver and rank criterion disagree");
    if (rep.solvable) {
        rep.witness_size = solved.solution->popcount();
        rep.witness_verified =
            sparse_mat_vec(system.matrix, *solved.solution) == system.rhs;
        if (witness_out)
            *witness_out = *solved.solution;
    }
    return rep;
}

}  // namespace homcert
