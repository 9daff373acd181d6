#ifndef BOUNDARY_INVARIANTS_HPP
#define BOUNDARY_INVARIANTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "boundary/graph.hpp"
#include "boundary/polynomial.hpp"

namespace boundary {

// --- extraction from the polynomial alone ---------------------------------

int order_from(const BoundaryPolynomial& p);             // sum_i B_{i,1}
int size_from(const BoundaryPolynomial& p);              // (1/2) sum_i i B_{i,1}
// Alternative size via the y^2 slice; requires n >= 3 (divides by n-2).
int size_from_alt(const BoundaryPolynomial& p);
std::vector<int> degree_sequence(const BoundaryPolynomial& p);  // ascending
// B_{0,1}; throws if it disagrees with the (y+1) multiplicity.
int isolated_count(const BoundaryPolynomial& p);

struct ComponentStructure {
    bool connected = false;
    int count = 0;
    std::vector<int> orders;  // ascending, recovered by peeling B(G;0,y)
};

ComponentStructure connectivity_and_components(const BoundaryPolynomial& p);

int p2_components(const BoundaryPolynomial& p);        // components isomorphic to P2
int p3_or_c3_components(const BoundaryPolynomial& p);  // components isomorphic to P3 or C3

int domination_number(const BoundaryPolynomial& p);  // min k with B_{n-k,k} != 0

struct DifferentialRoman {
    int differential = 0;
    int roman = 0;
};

// From the Laurent degrees; checks differential + roman == n.
DifferentialRoman differential_and_roman(const BoundaryPolynomial& p);

// Smallest k >= 1 with a monomial x^k y^j, k+j < n (its boundary is a
// vertex cut); n-1 when none exists, which is the complete graph. The
// input must come from a connected graph.
int vertex_connectivity(const BoundaryPolynomial& p);

// Coefficient structure forced by the minimum degree: for k <= delta the
// y^{n-k} slice is exactly C(n,k) x^k.
bool min_degree_check(const BoundaryPolynomial& p, int n);

/// Everything the polynomial encodes, in one pass. kv is absent for
/// disconnected graphs.
struct InvariantReport {
    int n = 0;
    int m = 0;
    std::vector<int> degree_seq;
    int isolated = 0;
    bool connected = false;
    int components = 0;
    std::vector<int> component_orders;
    int p2 = 0;
    int p3_c3 = 0;
    int gamma = 0;
    int differential = 0;
    int gamma_r = 0;
    std::optional<int> kv;
};

InvariantReport extract_report(const BoundaryPolynomial& p);
std::string report_to_json(const InvariantReport& r);

// --- independent graph-level oracles ---------------------------------------
// Exhaustive scans that never touch a polynomial; they validate every
// extractor above.

inline constexpr int kOracleCap = 16;       // subset scans
inline constexpr int kRomanOracleCap = 10;  // 3^n labeling scan

int oracle_gamma(const Graph& g);
int oracle_differential(const Graph& g);
int oracle_roman(const Graph& g);  // direct {0,1,2}-labeling scan
// A vertex cut either disconnects the graph further or reduces a component
// with >= 2 vertices to a single vertex; complete graphs get n-1.
int oracle_kv(const Graph& g);

// Cross-checks evaluated entirely with the oracles: parameter additivity
// over components, and the four case formulas for joined graphs.
bool check_component_additivity(const std::vector<Graph>& components);
bool check_join_identities(const Graph& g1, const Graph& g2);

}  // namespace boundary

#endif  // BOUNDARY_INVARIANTS_HPP
