#include "boundary/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boundary {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    if (n > kMaxVertices)
        throw std::invalid_argument("graph order exceeds the vertex cap of " +
                                    std::to_string(kMaxVertices));
    adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex index " + std::to_string(v) +
                                    " out of range for order " + std::to_string(n_));
}

void Graph::link(int u, int v) {
    adj_[static_cast<std::size_t>(u)] |= 1ull << v;
    adj_[static_cast<std::size_t>(v)] |= 1ull << u;
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.link(u, v);
    }
    return g;
}

int Graph::size() const {
    int deg_sum = 0;
    for (std::uint64_t a : adj_) deg_sum += std::popcount(a);
    return deg_sum / 2;
}

std::uint64_t Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

std::uint64_t Graph::vertex_mask() const {
    return n_ == 64 ? ~0ull : (1ull << n_) - 1;
}

int Graph::degree(int v) const { return std::popcount(neighbors(v)); }

int Graph::min_degree() const {
    int d = n_ > 0 ? n_ : 0;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[static_cast<std::size_t>(u)] >> v) & 1ull;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if ((adj_[static_cast<std::size_t>(u)] >> v) & 1ull) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> ds;
    ds.reserve(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) ds.push_back(degree(v));
    std::sort(ds.begin(), ds.end());
    return ds;
}

Graph Graph::add_isolated_vertex() const {
    Graph g(n_ + 1);
    std::copy(adj_.begin(), adj_.end(), g.adj_.begin());
    return g;
}

Graph Graph::add_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("cannot add a self-loop");
    if (has_edge(u, v)) throw std::invalid_argument("edge already present");
    Graph g = *this;
    g.link(u, v);
    return g;
}

Graph Graph::delete_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph g = *this;
    g.adj_[static_cast<std::size_t>(u)] &= ~(1ull << v);
    g.adj_[static_cast<std::size_t>(v)] &= ~(1ull << u);
    return g;
}

Graph Graph::subdivide_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("edge not present");
    Graph g = delete_edge(u, v).add_isolated_vertex();
    const int w = n_;
    g.link(u, w);
    g.link(v, w);
    return g;
}

namespace {

std::vector<std::pair<int, int>> shifted_edges(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(a.order() + u, a.order() + v);
    return edges;
}

}  // namespace

Graph disjoint_union(const Graph& a, const Graph& b) {
    return Graph::from_edges(a.order() + b.order(), shifted_edges(a, b));
}

Graph join(const Graph& a, const Graph& b) {
    auto edges = shifted_edges(a, b);
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < b.order(); ++v) edges.emplace_back(u, a.order() + v);
    return Graph::from_edges(a.order() + b.order(), edges);
}

Graph corona_p2(const Graph& a, const Graph& b) {
    if (a.order() < 1 || b.order() < 1)
        throw std::invalid_argument("corona operands must be non-empty");
    auto edges = shifted_edges(a, b);
    const int hub_a = a.order() + b.order(), hub_b = hub_a + 1;
    for (int v = 0; v < a.order(); ++v) edges.emplace_back(hub_a, v);
    for (int v = 0; v < b.order(); ++v) edges.emplace_back(hub_b, a.order() + v);
    edges.emplace_back(hub_a, hub_b);
    return Graph::from_edges(hub_b + 1, edges);
}

Graph bridge(const Graph& a, int u, const Graph& b, int v) {
    if (u < 0 || u >= a.order() || v < 0 || v >= b.order())
        throw std::invalid_argument("bridge endpoint out of range");
    return disjoint_union(a, b).add_edge(u, a.order() + v);
}

Graph induced_subgraph(const Graph& g, std::uint64_t mask) {
    std::vector<int> keep;
    for (int v = 0; v < g.order(); ++v)
        if ((mask >> v) & 1ull) keep.push_back(v);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i)
        for (int k = i + 1; k < static_cast<int>(keep.size()); ++k)
            if (g.has_edge(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(k)]))
                edges.emplace_back(i, k);
    return Graph::from_edges(static_cast<int>(keep.size()), edges);
}

std::vector<std::uint64_t> component_masks(const Graph& g) {
    std::vector<std::uint64_t> comps;
    std::uint64_t seen = 0;
    for (int start = 0; start < g.order(); ++start) {
        if ((seen >> start) & 1ull) continue;
        // Bitset BFS: grow the reachable set until it stops changing.
        std::uint64_t comp = 1ull << start;
        for (;;) {
            std::uint64_t next = comp;
            for (int v = 0; v < g.order(); ++v)
                if ((comp >> v) & 1ull) next |= g.neighbors(v);
            if (next == comp) break;
            comp = next;
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    for (std::uint64_t mask : component_masks(g)) {
        std::vector<int> part;
        for (int v = 0; v < g.order(); ++v)
            if ((mask >> v) & 1ull) part.push_back(v);
        out.push_back(std::move(part));
    }
    return out;
}

bool is_connected(const Graph& g) { return component_masks(g).size() <= 1; }

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
    Graph g(n);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edges(n, edges);
}

Graph wheel_graph(int n) {
    if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i + 1 < n ? i + 1 : 1);
    }
    return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star requires n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Graph::from_edges(n, edges);
}

Graph complete_bipartite_graph(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("complete bipartite parts must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < m; ++v) edges.emplace_back(u, n + v);
    return Graph::from_edges(n + m, edges);
}

Graph complete_minus_edge_graph(int n) {
    if (n < 3) throw std::invalid_argument("complete minus edge requires n >= 3");
    return complete_graph(n).delete_edge(0, 1);
}

Graph double_star_graph(int r, int t) {
    if (r < 2 || t < 2) throw std::invalid_argument("double star requires r, t >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < r; ++i) edges.emplace_back(0, i);
    for (int i = 1; i < t; ++i) edges.emplace_back(r, r + i);
    edges.emplace_back(0, r);
    return Graph::from_edges(r + t, edges);
}

Graph prism_c3_graph() {
    return Graph::from_edges(
        6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}});
}

Graph make_family(const FamilySpec& spec) {
    const std::string& f = spec.name;
    if (f == "empty") return empty_graph(spec.n);
    if (f == "complete") return complete_graph(spec.n);
    if (f == "path") return path_graph(spec.n);
    if (f == "cycle") return cycle_graph(spec.n);
    if (f == "wheel") return wheel_graph(spec.n);
    if (f == "star") return star_graph(spec.n);
    if (f == "complete_bipartite") return complete_bipartite_graph(spec.n, spec.m);
    if (f == "complete_minus_edge") return complete_minus_edge_graph(spec.n);
    if (f == "double_star") return double_star_graph(spec.r, spec.t);
    if (f == "prism") return prism_c3_graph();
    throw std::invalid_argument("unknown family: " + f);
}

}  // namespace boundary
