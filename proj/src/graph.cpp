#include "homcert/graph.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>

namespace homcert {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges,
             std::string name)
    : n_(vertex_count), name_(std::move(name)) {
    if (n_ < 1 || n_ > kMaxVertices)
        throw std::invalid_argument("graph: vertex count must be in [1, 64]");
    adj_.assign(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("graph: edge endpoint out of range");
        if (u == v)
            throw std::invalid_argument("graph: self-loops are not allowed");
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
    const std::uint64_t all =
        (n_ == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    complete_ = true;
    for (int v = 0; v < n_; ++v) {
        if (adj_[v] != (all & ~(std::uint64_t{1} << v))) {
            complete_ = false;
            break;
        }
    }
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v))
                out.emplace_back(u, v);
    return out;
}

Graph cycle_graph(int m) {
    if (m < 3)
        throw std::invalid_argument("cycle_graph: need at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v)
        edges.emplace_back(v, (v + 1) % m);
    return Graph(m, edges, "cycle:" + std::to_string(m));
}

Graph complete_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("complete_graph: need at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph(n, edges, "complete:" + std::to_string(n));
}

Graph edge_graph() {
    return Graph(2, {{0, 1}}, "edge");
}

Graph read_edge_list(std::istream& in, std::string name) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        if (n < 0) {
            if (!(ls >> n))
                throw std::invalid_argument("edge list: bad vertex count line");
            continue;
        }
        int u, v;
        if (!(ls >> u >> v))
            throw std::invalid_argument("edge list: bad edge line: " + line);
        edges.emplace_back(u, v);
    }
    if (n < 0)
        throw std::invalid_argument("edge list: missing vertex count");
    return Graph(n, edges, std::move(name));
}

Involution::Involution(const Graph& g, std::vector<int> perm)
    : perm_(std::move(perm)) {
    const int n = g.vertex_count();
    if (static_cast<int>(perm_.size()) != n)
        throw std::invalid_argument("involution: size does not match graph");
    for (int v = 0; v < n; ++v) {
        if (perm_[v] < 0 || perm_[v] >= n)
            throw std::invalid_argument("involution: image out of range");
        if (perm_[perm_[v]] != v)
            throw std::invalid_argument("involution: not order 2");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent(perm_[u], perm_[v]))
                throw std::invalid_argument("involution: not an automorphism");
}

Involution cycle_negation(int m) {
    Graph c = cycle_graph(m);
    std::vector<int> perm(static_cast<std::size_t>(m));
    for (int v = 0; v < m; ++v)
        perm[static_cast<std::size_t>(v)] = (m - v) % m;
    return Involution(c, std::move(perm));
}

Involution edge_swap() {
    return Involution(edge_graph(), {1, 0});
}

}  // namespace homcert
