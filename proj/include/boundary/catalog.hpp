#ifndef BOUNDARY_CATALOG_HPP
#define BOUNDARY_CATALOG_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "boundary/graph.hpp"

namespace boundary {

inline constexpr std::uint64_t kDefaultCatalogSeed = 20240915;

// Edge mask bits follow the pair order (0,1),(0,2),(1,2),(0,3),...
Graph graph_from_edge_mask(int n, std::uint64_t mask);

// All 2^C(n,2) labeled graphs on n vertices; supports n <= 5 (1024 masks).
std::vector<Graph> all_graphs(int n);

// Uniform over all labeled graphs on n vertices (every edge mask equally
// likely). Draws raw 64-bit words so the stream is identical across
// platforms; requires C(n,2) <= 64.
Graph random_graph(int n, std::mt19937_64& rng);

std::vector<Graph> sample_graphs(int n, int count, std::uint64_t seed);

// Lexicographically smallest edge mask over all vertex relabelings; the
// canonical form used to compare catalog graphs up to isomorphism. n <= 8.
std::uint64_t canonical_edge_mask(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace boundary

#endif  // BOUNDARY_CATALOG_HPP
