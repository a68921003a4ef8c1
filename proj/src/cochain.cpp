#include "homcert/cochain.hpp"

#include <algorithm>
#include <ostream>

namespace homcert {

namespace {

// Shared "keep the odd-multiplicity elements" step for coboundaries and
// quotient maps.  Input need not be sorted.
template <typename T>
std::vector<T> odd_multiplicity(std::vector<T> items) {
    std::sort(items.begin(), items.end());
    std::vector<T> out;
    for (std::size_t i = 0; i < items.size();) {
        std::size_t j = i;
        while (j < items.size() && items[j] == items[i])
            ++j;
        if ((j - i) % 2 == 1)
            out.push_back(std::move(items[i]));
        i = j;
    }
    return out;
}

}  // namespace

Cochain make_cochain(int dimension, std::vector<Cell> cells) {
    for (const Cell& c : cells)
        if (cell_dim(c) != dimension)
            throw std::invalid_argument("cochain: cell of wrong dimension");
    std::sort(cells.begin(), cells.end());
    cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
    return Cochain{dimension, std::move(cells)};
}

Cochain cochain_add(const Cochain& a, const Cochain& b) {
    if (a.dimension != b.dimension)
        throw std::invalid_argument("cochain_add: dimension mismatch");
    Cochain out{a.dimension, {}};
    std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                  b.support.begin(), b.support.end(),
                                  std::back_inserter(out.support));
    return out;
}

Cochain coboundary(const Graph& T, const Graph& G, const Cochain& s) {
    std::vector<Cell> up;
    for (const Cell& c : s.support) {
        auto cf = cofacets(T, G, c);
        up.insert(up.end(), std::make_move_iterator(cf.begin()),
                  std::make_move_iterator(cf.end()));
    }
    return Cochain{s.dimension + 1, odd_multiplicity(std::move(up))};
}

Cell involution_image(const Cell& c, const Involution& psi) {
    if (c.vertex_count() != psi.size())
        throw std::invalid_argument("involution_image: size mismatch");
    std::vector<std::uint64_t> entries(static_cast<std::size_t>(c.vertex_count()));
    for (int v = 0; v < c.vertex_count(); ++v)
        entries[static_cast<std::size_t>(v)] = c.entry(psi.apply(v));
    return Cell(std::move(entries));
}

FreeActionViolation::FreeActionViolation(const Cell& fixed_cell)
    : std::runtime_error("free action violated: cell " + fixed_cell.to_string() +
                         " is fixed by the involution"),
      cell_(fixed_cell) {}

Orbit orbit_of(const Cell& c, const Involution& psi) {
    Cell image = involution_image(c, psi);
    if (image == c)
        throw FreeActionViolation(c);
    return Orbit{std::min(c, image)};
}

OrbitCochain quotient_map(const Cochain& s, const Involution& psi) {
    std::vector<Orbit> orbits;
    orbits.reserve(s.support.size());
    for (const Cell& c : s.support)
        orbits.push_back(orbit_of(c, psi));
    return OrbitCochain{s.dimension, odd_multiplicity(std::move(orbits))};
}

OrbitCochain orbit_add(const OrbitCochain& a, const OrbitCochain& b) {
    if (a.dimension != b.dimension)
        throw std::invalid_argument("orbit_add: dimension mismatch");
    OrbitCochain out{a.dimension, {}};
    std::set_symmetric_difference(a.support.begin(), a.support.end(),
                                  b.support.begin(), b.support.end(),
                                  std::back_inserter(out.support));
    return out;
}

OrbitCochain orbit_coboundary(const Graph& T, const Graph& G,
                              const OrbitCochain& q, const Involution& psi) {
    std::vector<Orbit> up;
    for (const Orbit& o : q.support)
        for (const Cell& c : cofacets(T, G, o.representative))
            up.push_back(orbit_of(c, psi));
    return OrbitCochain{q.dimension + 1, odd_multiplicity(std::move(up))};
}

OrbitSlice orbit_slice(const ComplexSlice& slice, const Involution& psi) {
    std::vector<Orbit> orbits;
    orbits.reserve(slice.cells.size() / 2);
    for (const Cell& c : slice.cells) {
        Orbit o = orbit_of(c, psi);
        if (o.representative == c)  // count each orbit at its smaller member
            orbits.push_back(std::move(o));
    }
    // Already sorted: representatives are a subsequence of the sorted slice.
    // orbit_of has ruled out fixed cells, so a count mismatch means the
    // input was not a full slice.
    if (orbits.size() * 2 != slice.cells.size())
        throw std::invalid_argument(
            "orbit_slice: slice is not closed under the involution");
    return OrbitSlice{slice.T, slice.G, slice.dimension, std::move(orbits)};
}

void write_cochain(std::ostream& out, const Cochain& s) {
    out << "cochain dim=" << s.dimension << " count=" << s.support.size() << '\n';
    for (const Cell& c : s.support)
        out << c.to_string() << '\n';
}

void write_orbit_cochain(std::ostream& out, const OrbitCochain& q) {
    out << "orbit-cochain dim=" << q.dimension << " count=" << q.support.size()
        << '\n';
    for (const Orbit& o : q.support)
        out << o.representative.to_string() << '\n';
}

}  // namespace homcert
