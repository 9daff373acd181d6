#ifndef BOUNDARY_FORMULAS_HPP
#define BOUNDARY_FORMULAS_HPP

#include "boundary/enumerator.hpp"
#include "boundary/graph.hpp"
#include "boundary/polynomial.hpp"

namespace boundary {

/// Fixed 4x4 matrix over {0, 1, x, y, xy} that propagates a restricted
/// vector across a pendant extension:
///   [[1,1,0,0], [0,0,x,x], [xy,y,0,0], [0,0,y,y]].
/// Its n-th power against (0,1,0,0) yields the path polynomial.
class TransferMatrix {
public:
    static const TransferMatrix& pendant();
    TransferVector apply(const TransferVector& vec) const;

private:
    struct Entry {
        bool present = false;
        int dx = 0, dy = 0;  // the monomial x^dx y^dy
    };
    std::array<std::array<Entry, 4>, 4> entries_{};
};

// B(En) = (1+y)^n
BoundaryPolynomial poly_empty(int n);
// B(Kn) = (x+y)^n + 1 - x^n  (n = 0 gives the constant 1)
BoundaryPolynomial poly_complete(int n);
// Adding an isolated vertex multiplies by (y+1).
BoundaryPolynomial poly_vertex_addition(const BoundaryPolynomial& p);
// B(G1+G2) = B(K_{n1+n2}) + x^{n2}(B(G1)-B(K_{n1})) + x^{n1}(B(G2)-B(K_{n2})).
// Throws std::domain_error if the final grid has a negative coefficient.
BoundaryPolynomial poly_join(const BoundaryPolynomial& p1, int n1, const BoundaryPolynomial& p2,
                             int n2);
// The E1 + G specialization of the join.
BoundaryPolynomial poly_cone(const BoundaryPolynomial& p, int n);
// B(Wn) = x B(C_{n-1}) - x + y(x+y)^{n-1} + 1, n >= 4
BoundaryPolynomial poly_wheel(int n);
BoundaryPolynomial poly_complete_bipartite(int n, int m);
// B(Sn) = (x+y)^n + 1 + x((1+y)^{n-1} - (x+y)^{n-1} - 1), n >= 2
BoundaryPolynomial poly_star(int n);
// B(Kn - e) = B(Kn) + 2x^{n-2}y(1-x), n >= 3
BoundaryPolynomial poly_complete_minus_edge(int n);
// B(S_{r,t}) = B(S_r)B(S_t) + y(x-1)((x+y)^{r-1} + (x+y)^{t-1}), r,t >= 2
BoundaryPolynomial poly_double_star(int r, int t);

// One pendant step: the restricted vector of G at v becomes the restricted
// vector of G plus a pendant neighbor u of v, classified at u.
TransferVector pendant_transfer(const TransferVector& vec);

// B(Pn) = (1 1 1 1) M^n (0 1 0 0)^T via iterated matrix-vector products.
BoundaryPolynomial poly_path(int n);

// B(Cn) = B(Pn) + 2(x-1) R where R sums over subsets of the path with
// v1 and v2 outside S and vn inside; R is built by a constrained transfer
// pass, never by raw enumeration. n >= 3.
BoundaryPolynomial poly_cycle(int n);

// Edge-removal identity: for an edge uv of g,
//   B(G) = B(G-e) + (x-1)(B(G-e)^{0,1}_{u0,v} + B(G-e)^{1,0}_{u,v0});
// the restricted terms are enumerated on g minus the edge.
BoundaryPolynomial edge_removal_identity(const Graph& g, int u, int v,
                                         const BoundaryPolynomial& p_minus_e,
                                         const EnumerationOptions& opt = {});

// Restricted 3-vector (B1_u, B0_{u0}, B0_{u1}) used by the bridge product.
std::array<BoundaryPolynomial, 3> bridge_vector(const Graph& g, int u,
                                                const EnumerationOptions& opt = {});

// Polynomial of G1 (+) G2 plus the single edge uv, as the row-matrix-column
// product with [[1,x,1],[x,1,1],[1,1,1]].
BoundaryPolynomial poly_bridge(const std::array<BoundaryPolynomial, 3>& at_u,
                               const std::array<BoundaryPolynomial, 3>& at_v);

// B(P2 (.) {G1,G2}) = B(E1+G1) B(E1+G2) + y(x-1)((x+y)^{n1} + (x+y)^{n2}).
BoundaryPolynomial poly_corona_p2(const BoundaryPolynomial& p1, int n1,
                                  const BoundaryPolynomial& p2, int n2);

// Polynomial of g with the edge uv subdivided once, from the 13-term
// identity over two-vertex restricted polynomials of g.
BoundaryPolynomial poly_subdivided(const Graph& g, int u, int v,
                                   const EnumerationOptions& opt = {});

}  // namespace boundary

#endif  // BOUNDARY_FORMULAS_HPP
