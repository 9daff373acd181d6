#ifndef BOUNDARY_ENUMERATOR_HPP
#define BOUNDARY_ENUMERATOR_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "boundary/graph.hpp"
#include "boundary/polynomial.hpp"

namespace boundary {

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exhaustive enumeration visits all 2^n subsets; the cap keeps that near a
// minute of work. Graphs beyond it need the closed-form formulas.
inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr int kHardEnumerationCap = 30;

struct EnumerationOptions {
    int max_n = kDefaultEnumerationCap;
    int threads = 1;
};

/// Outer boundary of S: vertices outside S adjacent to a vertex of S.
std::uint64_t boundary_set(const Graph& g, std::uint64_t s);

/// B(G;x,y) by exhaustive subset enumeration in reflected Gray-code order.
/// Each single-bit flip updates |B(S)| in O(d(v)) via per-vertex
/// neighbor-in-S counts. Work splits over 2^t membership-prefix blocks,
/// t = ceil(log2(4*threads)); the result is schedule-independent.
BoundaryPolynomial boundary_polynomial(const Graph& g, const EnumerationOptions& opt = {});

enum class NeighborCondition { Unconstrained, Empty, NonEmpty };

struct VertexConstraint {
    int vertex = 0;
    int membership = 0;  // required value of 1_S(vertex)
    NeighborCondition condition = NeighborCondition::Unconstrained;
};

/// Membership and neighborhood conditions at one or two marked vertices.
/// With two constraints, each neighbor condition is evaluated with the
/// other marked vertex removed from S; with one, against N(v) and S as is.
struct RestrictedSpec {
    std::vector<VertexConstraint> constraints;
};

BoundaryPolynomial restricted_polynomial(const Graph& g, const RestrictedSpec& spec,
                                         const EnumerationOptions& opt = {});

/// The four conditional polynomials at a vertex v, in the order
/// (B0_v0, B0_v1, B1_v0, B1_v1): superscript is 1_S(v), subscript is
/// whether N(v) meets S. Their sum is the full polynomial.
struct TransferVector {
    std::array<BoundaryPolynomial, 4> parts;

    BoundaryPolynomial sum() const { return parts[0] + parts[1] + parts[2] + parts[3]; }
    bool operator==(const TransferVector& o) const { return parts == o.parts; }
};

TransferVector restricted_vector(const Graph& g, int v, const EnumerationOptions& opt = {});

/// One enumeration pass over G binning every subset by the membership
/// pattern at (u, v) and the two masked neighbor conditions
/// [(S\{v}) meets N(u)] and [(S\{u}) meets N(v)]. The two-vertex
/// restricted polynomials used by the edge and subdivision identities are
/// sums of these 16 cells.
class TwoVertexProfile {
public:
    TwoVertexProfile(const Graph& g, int u, int v, const EnumerationOptions& opt = {});

    // cu/cv: 1 when the masked neighborhood intersection is nonempty.
    const BoundaryPolynomial& cell(int iu, int iv, int cu, int cv) const;
    BoundaryPolynomial membership(int iu, int iv) const;          // B^{iu,iv}_{u,v}
    BoundaryPolynomial restricted_u(int iu, int iv, int cu) const;  // B^{iu,iv}_{u^cu,v}
    BoundaryPolynomial restricted_v(int iu, int iv, int cv) const;  // B^{iu,iv}_{u,v^cv}

private:
    std::array<BoundaryPolynomial, 16> cells_;
};

}  // namespace boundary

#endif  // BOUNDARY_ENUMERATOR_HPP
