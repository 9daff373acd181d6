#ifndef BOUNDARY_GRAPH_HPP
#define BOUNDARY_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace boundary {

// Single-word neighbor bitsets keep boundary updates O(1) word operations.
inline constexpr int kMaxVertices = 64;

/// Simple undirected graph on vertices 0..n-1, immutable after
/// construction. Adjacency is symmetric with no self-loops; edit
/// operations return new graphs.
class Graph {
public:
    Graph() = default;                      // empty graph on 0 vertices
    explicit Graph(int n);                  // n isolated vertices

    // Duplicate pairs (in either orientation) collapse to one edge.
    // Throws on out-of-range endpoints or self-loops.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    int size() const;                       // m, equals (sum of degrees)/2
    std::uint64_t neighbors(int v) const;
    std::uint64_t vertex_mask() const;      // all n vertices set
    int degree(int v) const;
    int min_degree() const;
    int max_degree() const;
    bool has_edge(int u, int v) const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
    std::vector<int> degree_sequence() const;        // ascending

    Graph add_isolated_vertex() const;
    Graph add_edge(int u, int v) const;        // requires a non-edge
    Graph delete_edge(int u, int v) const;     // requires an existing edge
    Graph subdivide_edge(int u, int v) const;  // replaces uv by u-w-v, w = old n

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;

    void check_vertex(int v) const;
    void link(int u, int v);
};

Graph disjoint_union(const Graph& a, const Graph& b);
// Disjoint union plus all cross edges; b's vertices are shifted by a.order().
Graph join(const Graph& a, const Graph& b);
// Two adjacent hub vertices, each joined to all vertices of its own graph:
// vertices of a keep their labels, b shifts by a.order(), hub of a is
// a.order()+b.order(), hub of b is a.order()+b.order()+1.
Graph corona_p2(const Graph& a, const Graph& b);
// Disjoint union plus the single edge (u in a, v in b).
Graph bridge(const Graph& a, int u, const Graph& b, int v);

// Relabels the vertices selected by mask in ascending order.
Graph induced_subgraph(const Graph& g, std::uint64_t mask);

std::vector<std::vector<int>> connected_components(const Graph& g);
std::vector<std::uint64_t> component_masks(const Graph& g);
bool is_connected(const Graph& g);

// Classic families with fixed labelings (golden tests depend on them).
Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);            // edges (i, i+1)
Graph cycle_graph(int n);           // n >= 3
Graph wheel_graph(int n);           // n >= 4, hub at vertex 0
Graph star_graph(int n);            // n >= 2, center at vertex 0
Graph complete_bipartite_graph(int n, int m);  // parts 0..n-1 and n..n+m-1
Graph complete_minus_edge_graph(int n);        // n >= 3, missing edge (0,1)
Graph double_star_graph(int r, int t);         // r,t >= 2, centers 0 and r adjacent
Graph prism_c3_graph();                        // triangular prism, P2 x C3

struct FamilySpec {
    std::string name;  // complete, empty, path, cycle, wheel, star,
                       // complete_bipartite, complete_minus_edge, double_star, prism
    int n = 0;
    int m = 0;  // second part size of a complete bipartite graph
    int r = 0, t = 0;  // double star parameters
};

Graph make_family(const FamilySpec& spec);

}  // namespace boundary

#endif  // BOUNDARY_GRAPH_HPP
