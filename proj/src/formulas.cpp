#include "boundary/formulas.hpp"

#include <stdexcept>
#include <string>

namespace boundary {

namespace {

// (x+y)^n
BoundaryPolynomial binomial_xy(int n) {
    BoundaryPolynomial p = BoundaryPolynomial::zero();
    for (int i = 0; i <= n; ++i) p = p + BoundaryPolynomial::monomial(binomial(n, i), i, n - i);
    return p.with_order(n);
}

BoundaryPolynomial one() { return BoundaryPolynomial::constant(1); }

BoundaryPolynomial x_power(int n) { return BoundaryPolynomial::monomial(1, n, 0); }

// x - 1, order hint 0 (scratch factor)
BoundaryPolynomial x_minus_one() { return x_power(1) - one(); }

void ensure_nonnegative(const BoundaryPolynomial& p, const char* what) {
    if (!p.nonnegative())
        throw std::domain_error(std::string(what) +
                                " produced a negative coefficient; inconsistent inputs");
}

}  // namespace

const TransferMatrix& TransferMatrix::pendant() {
    static const TransferMatrix m = [] {
        TransferMatrix t;
        auto set = [&t](int r, int c, int dx, int dy) {
            t.entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = {true, dx, dy};
        };
        set(0, 0, 0, 0);  // 1
        set(0, 1, 0, 0);  // 1
        set(1, 2, 1, 0);  // x
        set(1, 3, 1, 0);  // x
        set(2, 0, 1, 1);  // xy
        set(2, 1, 0, 1);  // y
        set(3, 2, 0, 1);  // y
        set(3, 3, 0, 1);  // y
        return t;
    }();
    return m;
}

TransferVector TransferMatrix::apply(const TransferVector& vec) const {
    int order = 0;
    for (const auto& p : vec.parts) order = std::max(order, p.order());
    TransferVector out;
    for (int r = 0; r < 4; ++r) {
        BoundaryPolynomial acc = BoundaryPolynomial::zero();
        for (int c = 0; c < 4; ++c) {
            const Entry& e = entries_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (!e.present) continue;
            acc = acc + vec.parts[static_cast<std::size_t>(c)].shifted(e.dx, e.dy);
        }
        out.parts[static_cast<std::size_t>(r)] = acc.with_order(order + 1);
    }
    return out;
}

TransferVector pendant_transfer(const TransferVector& vec) {
    return TransferMatrix::pendant().apply(vec);
}

BoundaryPolynomial poly_empty(int n) {
    if (n < 0) throw std::invalid_argument("order must be non-negative");
    BoundaryPolynomial p = BoundaryPolynomial::zero();
    for (int j = 0; j <= n; ++j) p = p + BoundaryPolynomial::monomial(binomial(n, j), 0, j);
    return p.with_order(n);
}

BoundaryPolynomial poly_complete(int n) {
    if (n < 0) throw std::invalid_argument("order must be non-negative");
    if (n == 0) return one();
    return (binomial_xy(n) + one() - x_power(n)).with_order(n);
}

BoundaryPolynomial poly_vertex_addition(const BoundaryPolynomial& p) {
    BoundaryPolynomial y_plus_one = BoundaryPolynomial::monomial(1, 0, 1) + one();
    return (p * y_plus_one).with_order(p.order() + 1);
}

BoundaryPolynomial poly_join(const BoundaryPolynomial& p1, int n1, const BoundaryPolynomial& p2,
                             int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("join operands must have order >= 1");
    BoundaryPolynomial r = poly_complete(n1 + n2) + (p1 - poly_complete(n1)).shifted(n2, 0) +
                           (p2 - poly_complete(n2)).shifted(n1, 0);
    ensure_nonnegative(r, "join formula");
    return r.with_order(n1 + n2);
}

BoundaryPolynomial poly_cone(const BoundaryPolynomial& p, int n) {
    return poly_join(poly_empty(1), 1, p, n);
}

BoundaryPolynomial poly_wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel requires n >= 4");
    BoundaryPolynomial r = poly_cycle(n - 1).shifted(1, 0) - x_power(1) +
                           binomial_xy(n - 1).shifted(0, 1) + one();
    ensure_nonnegative(r, "wheel formula");
    return r.with_order(n);
}

BoundaryPolynomial poly_complete_bipartite(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("complete bipartite parts must be >= 1");
    BoundaryPolynomial r = binomial_xy(n + m) +
                           (poly_empty(m) - binomial_xy(m)).shifted(n, 0) +
                           (poly_empty(n) - binomial_xy(n)).shifted(m, 0) +
                           (x_power(n) - one()) * (x_power(m) - one());
    ensure_nonnegative(r, "complete bipartite formula");
    return r.with_order(n + m);
}

BoundaryPolynomial poly_star(int n) {
    if (n < 2) throw std::invalid_argument("star requires n >= 2");
    BoundaryPolynomial r = binomial_xy(n) + one() +
                           (poly_empty(n - 1) - binomial_xy(n - 1) - one()).shifted(1, 0);
    ensure_nonnegative(r, "star formula");
    return r.with_order(n);
}

BoundaryPolynomial poly_complete_minus_edge(int n) {
    if (n < 3) throw std::invalid_argument("complete minus edge requires n >= 3");
    // 2 x^{n-2} y (1 - x)
    BoundaryPolynomial correction =
        BoundaryPolynomial::monomial(2, n - 2, 1) - BoundaryPolynomial::monomial(2, n - 1, 1);
    BoundaryPolynomial r = poly_complete(n) + correction;
    ensure_nonnegative(r, "complete minus edge formula");
    return r.with_order(n);
}

BoundaryPolynomial poly_double_star(int r, int t) {
    if (r < 2 || t < 2) throw std::invalid_argument("double star requires r, t >= 2");
    BoundaryPolynomial res = poly_star(r) * poly_star(t) +
                             x_minus_one().shifted(0, 1) * (binomial_xy(r - 1) + binomial_xy(t - 1));
    ensure_nonnegative(res, "double star formula");
    return res.with_order(r + t);
}

BoundaryPolynomial poly_path(int n) {
    if (n < 0) throw std::invalid_argument("order must be non-negative");
    TransferVector vec{{BoundaryPolynomial::zero(), one(), BoundaryPolynomial::zero(),
                        BoundaryPolynomial::zero()}};
    for (int k = 0; k < n; ++k) vec = pendant_transfer(vec);
    return vec.sum().with_order(n);
}

BoundaryPolynomial poly_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    // Constrained transfer: on a path N(v1) = {v2}, so the restriction
    // (S\{vn}) & N(v1) = 0 is exactly v2 outside S. Start from the P1
    // vector with v1 forced out, advance to P2, zero the "v2 in S" slots,
    // then advance to Pn and keep the "vn in S" slots.
    TransferVector vec{{one(), BoundaryPolynomial::zero(), BoundaryPolynomial::zero(),
                        BoundaryPolynomial::zero()}};
    vec.parts[0] = vec.parts[0].with_order(1);
    vec = pendant_transfer(vec);
    vec.parts[2] = BoundaryPolynomial::zero();
    vec.parts[3] = BoundaryPolynomial::zero();
    for (int k = 0; k < n - 2; ++k) vec = pendant_transfer(vec);
    BoundaryPolynomial restricted = vec.parts[2] + vec.parts[3];
    BoundaryPolynomial r = poly_path(n) + x_minus_one().scaled(2) * restricted;
    ensure_nonnegative(r, "cycle formula");
    return r.with_order(n);
}

BoundaryPolynomial edge_removal_identity(const Graph& g, int u, int v,
                                         const BoundaryPolynomial& p_minus_e,
                                         const EnumerationOptions& opt) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("uv must be an edge of the graph");
    const Graph reduced = g.delete_edge(u, v);
    TwoVertexProfile profile(reduced, u, v, opt);
    BoundaryPolynomial r = p_minus_e + x_minus_one() * (profile.restricted_u(0, 1, 0) +
                                                        profile.restricted_v(1, 0, 0));
    ensure_nonnegative(r, "edge-removal identity");
    return r.with_order(g.order());
}

std::array<BoundaryPolynomial, 3> bridge_vector(const Graph& g, int u,
                                                const EnumerationOptions& opt) {
    TransferVector vec = restricted_vector(g, u, opt);
    return {vec.parts[2] + vec.parts[3], vec.parts[0], vec.parts[1]};
}

BoundaryPolynomial poly_bridge(const std::array<BoundaryPolynomial, 3>& at_u,
                               const std::array<BoundaryPolynomial, 3>& at_v) {
    // [[1,x,1],[x,1,1],[1,1,1]] sandwiched between the two 3-vectors.
    int order = 0;
    for (const auto& p : at_u) order = std::max(order, p.order());
    int order_v = 0;
    for (const auto& p : at_v) order_v = std::max(order_v, p.order());
    order += order_v;
    BoundaryPolynomial r = at_u[0] * (at_v[0] + at_v[1].shifted(1, 0) + at_v[2]) +
                           at_u[1] * (at_v[0].shifted(1, 0) + at_v[1] + at_v[2]) +
                           at_u[2] * (at_v[0] + at_v[1] + at_v[2]);
    return r.with_order(order);
}

BoundaryPolynomial poly_corona_p2(const BoundaryPolynomial& p1, int n1,
                                  const BoundaryPolynomial& p2, int n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("corona operands must have order >= 1");
    BoundaryPolynomial r = poly_cone(p1, n1) * poly_cone(p2, n2) +
                           x_minus_one().shifted(0, 1) * (binomial_xy(n1) + binomial_xy(n2));
    ensure_nonnegative(r, "corona formula");
    return r.with_order(n1 + n2 + 2);
}

BoundaryPolynomial poly_subdivided(const Graph& g, int u, int v, const EnumerationOptions& opt) {
    if (!g.has_edge(u, v)) throw std::invalid_argument("uv must be an edge of the graph");
    TwoVertexProfile p(g, u, v, opt);
    const BoundaryPolynomial x = x_power(1);
    const BoundaryPolynomial y = BoundaryPolynomial::monomial(1, 0, 1);
    const BoundaryPolynomial xy = BoundaryPolynomial::monomial(1, 1, 1);
    const BoundaryPolynomial xxy = BoundaryPolynomial::monomial(1, 2, 1);
    BoundaryPolynomial r = p.membership(0, 0)                    //
                           + p.restricted_v(1, 0, 0)             //
                           + x * p.restricted_v(1, 0, 1)         //
                           + p.restricted_u(0, 1, 0)             //
                           + x * p.restricted_u(0, 1, 1)         //
                           + x * p.membership(1, 1)              //
                           + xxy * p.cell(0, 0, 0, 0)            //
                           + xy * p.cell(0, 0, 1, 0)             //
                           + xy * p.cell(0, 0, 0, 1)             //
                           + y * p.cell(0, 0, 1, 1)              //
                           + y * p.membership(1, 1)              //
                           + y * p.membership(1, 0)              //
                           + y * p.membership(0, 1);
    return r.with_order(g.order() + 1);
}

}  // namespace boundary
