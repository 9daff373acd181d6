#ifndef TEST_SUPPORT_HPP
#define TEST_SUPPORT_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <tuple>
#include <vector>

#include "boundary/enumerator.hpp"
#include "boundary/graph.hpp"
#include "boundary/polynomial.hpp"

namespace testsupport {

// Reference enumeration: recomputes B(S) from scratch for every subset,
// with no incremental state. Everything the library computes is checked
// against this.
inline boundary::BoundaryPolynomial naive_boundary_polynomial(const boundary::Graph& g) {
    const int n = g.order();
    const int stride = n + 1;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(stride) * stride, 0);
    for (std::uint64_t s = 0; s < (1ull << n); ++s) {
        std::uint64_t reach = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1ull) reach |= g.neighbors(v);
        const int b = std::popcount(reach & ~s);
        const int j = std::popcount(s);
        ++counts[static_cast<std::size_t>(b) * stride + j];
    }
    return boundary::BoundaryPolynomial::from_counts(counts, stride, n);
}

// Literal evaluation of a restricted spec, element by element.
inline bool naive_spec_holds(const boundary::Graph& g, const boundary::RestrictedSpec& spec,
                             std::uint64_t s) {
    for (std::size_t k = 0; k < spec.constraints.size(); ++k) {
        const auto& c = spec.constraints[k];
        const bool in_s = (s >> c.vertex) & 1ull;
        if (in_s != (c.membership == 1)) return false;
        if (c.condition == boundary::NeighborCondition::Unconstrained) continue;
        std::uint64_t set = s;
        if (spec.constraints.size() == 2)
            set &= ~(1ull << spec.constraints[1 - k].vertex);  // S \ {other}
        bool meets = false;
        for (int u = 0; u < g.order(); ++u)
            if (((set >> u) & 1ull) && g.has_edge(c.vertex, u)) meets = true;
        if (meets != (c.condition == boundary::NeighborCondition::NonEmpty)) return false;
    }
    return true;
}

inline boundary::BoundaryPolynomial naive_restricted_polynomial(
    const boundary::Graph& g, const boundary::RestrictedSpec& spec) {
    const int n = g.order();
    const int stride = n + 1;
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(stride) * stride, 0);
    for (std::uint64_t s = 0; s < (1ull << n); ++s) {
        if (!naive_spec_holds(g, spec, s)) continue;
        std::uint64_t reach = 0;
        for (int v = 0; v < n; ++v)
            if ((s >> v) & 1ull) reach |= g.neighbors(v);
        ++counts[static_cast<std::size_t>(std::popcount(reach & ~s)) * stride + std::popcount(s)];
    }
    return boundary::BoundaryPolynomial::from_counts(counts, stride, n);
}

// terms are (coefficient, x-exponent, y-exponent)
inline boundary::BoundaryPolynomial poly_from_terms(
    int order, std::initializer_list<std::tuple<long, int, int>> terms) {
    boundary::BoundaryPolynomial p = boundary::BoundaryPolynomial::zero();
    for (const auto& [c, i, j] : terms)
        p = p + boundary::BoundaryPolynomial::monomial(boundary::BigInt(c), i, j);
    return p.with_order(order);
}

}  // namespace testsupport

#endif  // TEST_SUPPORT_HPP
