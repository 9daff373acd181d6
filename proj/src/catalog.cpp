#include "boundary/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace boundary {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if ((mask >> bit) & 1ull) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

std::vector<Graph> all_graphs(int n) {
    if (n < 0 || n > 5) throw std::invalid_argument("exhaustive catalog supports 0 <= n <= 5");
    const int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(1ull << bits);
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask)
        out.push_back(graph_from_edge_mask(n, mask));
    return out;
}

Graph random_graph(int n, std::mt19937_64& rng) {
    const int bits = n * (n - 1) / 2;
    if (bits > 64) throw std::invalid_argument("random catalog graphs support C(n,2) <= 64");
    std::uint64_t mask = rng();
    if (bits < 64) mask &= (1ull << bits) - 1;
    return graph_from_edge_mask(n, mask);
}

std::vector<Graph> sample_graphs(int n, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int k = 0; k < count; ++k) out.push_back(random_graph(n, rng));
    return out;
}

namespace {

std::uint64_t edge_mask_under(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t mask = 0;
    int bit = 0;
    for (int v = 1; v < g.order(); ++v)
        for (int u = 0; u < v; ++u, ++bit)
            if (g.has_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]))
                mask |= 1ull << bit;
    return mask;
}

}  // namespace

std::uint64_t canonical_edge_mask(const Graph& g) {
    if (g.order() > 8)
        throw std::invalid_argument("canonical form by permutation scan supports n <= 8");
    std::vector<int> perm(static_cast<std::size_t>(g.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ull;
    do {
        best = std::min(best, edge_mask_under(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    if (a.size() != b.size()) return false;
    if (a.degree_sequence() != b.degree_sequence()) return false;
    return canonical_edge_mask(a) == canonical_edge_mask(b);
}

}  // namespace boundary
