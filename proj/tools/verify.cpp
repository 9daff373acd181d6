#include "verify.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "boundary/formulas.hpp"
#include "boundary/graph_io.hpp"
#include "boundary/invariants.hpp"
#include "boundary/polynomial.hpp"

namespace bpoly {

using namespace boundary;

namespace {

std::string describe(const Graph& g) { return "graph6 " + emit_graph6(g); }

struct Failure {
    std::string detail;
};

// Each checker throws Failure with the first counterexample.

void check_factors(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs) {
        BoundaryPolynomial whole = boundary_polynomial(g, ctx.opt);
        BoundaryPolynomial product = BoundaryPolynomial::constant(1);
        for (const std::uint64_t mask : component_masks(g))
            product = product * boundary_polynomial(induced_subgraph(g, mask), ctx.opt);
        if (whole != product) throw Failure{describe(g)};
    }
}

void check_eval(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs) {
        const int n = g.order();
        BoundaryPolynomial p = boundary_polynomial(g, ctx.opt);
        for (int j = 0; j <= n; ++j) {
            BigInt row = 0;
            for (int i = 0; i <= n; ++i) row += p.coefficient(i, j);
            if (row != binomial(n, j))
                throw Failure{describe(g) + ": row sum at y^" + std::to_string(j)};
        }
        if (p.evaluate(1, 1) != Rational(BigInt(1) << n))
            throw Failure{describe(g) + ": B(1,1) != 2^n"};
        if (n >= 1 && p.evaluate(1, -1) != 0) throw Failure{describe(g) + ": B(1,-1) != 0"};
        const auto comps = component_masks(g);
        if (p.evaluate(0, 1) != Rational(BigInt(1) << comps.size()))
            throw Failure{describe(g) + ": B(0,1) != 2^k"};
        // expected B(G;0,y) = prod over components of (1 + y^{n_i})
        UnivariatePolynomial expected({BigInt(1)});
        for (const std::uint64_t mask : comps) {
            const int ni = std::popcount(mask);
            std::vector<BigInt> prod(static_cast<std::size_t>(expected.degree() + ni + 1));
            for (int a = 0; a <= expected.degree(); ++a) {
                prod[static_cast<std::size_t>(a)] += expected.coefficient(a);
                prod[static_cast<std::size_t>(a + ni)] += expected.coefficient(a);
            }
            expected = UnivariatePolynomial(std::move(prod));
        }
        if (!(p.substitute_x0() == expected))
            throw Failure{describe(g) + ": B(0,y) factorization"};
        if (n >= 3 && size_from_alt(p) != g.size())
            throw Failure{describe(g) + ": slice-derivative size formula"};
    }
}

void check_isolated(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs) {
        int isolated = 0;
        for (int v = 0; v < g.order(); ++v)
            if (g.degree(v) == 0) ++isolated;
        BoundaryPolynomial p = boundary_polynomial(g, ctx.opt);
        if (p.y_plus_one_multiplicity() != isolated)
            throw Failure{describe(g) + ": (y+1) multiplicity"};
        if (p.coefficient(0, 1) != isolated)
            throw Failure{describe(g) + ": B_{0,1}"};
    }
}

void check_coefficients(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs) {
        const int n = g.order();
        if (n == 0) continue;
        BoundaryPolynomial p = boundary_polynomial(g, ctx.opt);
        auto fail = [&](const std::string& what) { return Failure{describe(g) + ": " + what}; };

        for (int j = 0; j <= n; ++j)
            if (p.coefficient(0, j) != p.coefficient(0, n - j)) throw fail("B_{0,j} symmetry");
        if (p.coefficient(0, 0) != 1 || p.coefficient(0, n) != 1) throw fail("B_{0,0}, B_{0,n}");

        bool no_closed_sets = true;
        for (int j = 1; j <= n - 1; ++j)
            if (p.coefficient(0, j) != 0) no_closed_sets = false;
        if (no_closed_sets != is_connected(g)) throw fail("connectivity criterion");

        if (order_from(p) != n) throw fail("order");
        if (size_from(p) != g.size()) throw fail("size");
        if (degree_sequence(p) != g.degree_sequence()) throw fail("degree sequence");

        int isolated = 0, p2 = 0, q3 = 0;
        for (const std::uint64_t mask : component_masks(g)) {
            const int size = std::popcount(mask);
            if (size == 1) ++isolated;
            if (size == 2) ++p2;
            if (size == 3) ++q3;  // connected on 3 vertices: P3 or C3
        }
        if (isolated_count(p) != isolated) throw fail("isolated count");
        if (p2_components(p) != p2) throw fail("P2 components");
        if (p3_or_c3_components(p) != q3) throw fail("P3/C3 components");

        if (domination_number(p) != oracle_gamma(g)) throw fail("domination number");
        if (is_connected(g) && vertex_connectivity(p) != oracle_kv(g))
            throw fail("vertex connectivity");
        if (!min_degree_check(p, n)) throw fail("minimum-degree coefficients");
    }
}

std::vector<std::pair<std::size_t, std::size_t>> pair_indices(const VerifyContext& ctx,
                                                              std::size_t count) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    const std::size_t n = ctx.graphs.size();
    if (n == 0) return pairs;
    if (n <= 3) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) pairs.emplace_back(a, b);
        return pairs;
    }
    std::mt19937_64 rng(ctx.seed);
    for (std::size_t k = 0; k < count; ++k)
        pairs.emplace_back(rng() % n, rng() % n);
    return pairs;
}

void check_join(const VerifyContext& ctx) {
    for (auto [a, b] : pair_indices(ctx, 100)) {
        const Graph &g1 = ctx.graphs[a], &g2 = ctx.graphs[b];
        if (g1.order() < 1 || g2.order() < 1 ||
            g1.order() + g2.order() > ctx.opt.max_n)
            continue;
        BoundaryPolynomial lhs =
            poly_join(boundary_polynomial(g1, ctx.opt), g1.order(),
                      boundary_polynomial(g2, ctx.opt), g2.order());
        if (lhs != boundary_polynomial(join(g1, g2), ctx.opt))
            throw Failure{describe(g1) + " joined with " + describe(g2)};
    }
}

void check_pendant(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs) {
        if (g.order() + 1 > ctx.opt.max_n || g.order() + 1 > kMaxVertices) continue;
        for (int v = 0; v < g.order(); ++v) {
            Graph extended = g.add_isolated_vertex().add_edge(g.order(), v);
            if (!(pendant_transfer(restricted_vector(g, v, ctx.opt)) ==
                  restricted_vector(extended, g.order(), ctx.opt)))
                throw Failure{describe(g) + " pendant at vertex " + std::to_string(v)};
        }
    }
}

void check_path(const VerifyContext& ctx) {
    std::vector<int> sizes;
    if (ctx.family && ctx.family->name == "path")
        sizes.push_back(ctx.family->n);
    else
        for (int n = 0; n <= 10; ++n) sizes.push_back(n);
    for (int n : sizes)
        if (poly_path(n) != boundary_polynomial(path_graph(n), ctx.opt))
            throw Failure{"path of order " + std::to_string(n)};
}

void check_cycle(const VerifyContext& ctx) {
    std::vector<int> sizes;
    if (ctx.family && ctx.family->name == "cycle")
        sizes.push_back(ctx.family->n);
    else
        for (int n = 3; n <= 10; ++n) sizes.push_back(n);
    for (int n : sizes)
        if (poly_cycle(n) != boundary_polynomial(cycle_graph(n), ctx.opt))
            throw Failure{"cycle of order " + std::to_string(n)};
}

void check_double_star(const VerifyContext& ctx) {
    std::vector<std::pair<int, int>> params;
    if (ctx.family && ctx.family->name == "double_star")
        params.emplace_back(ctx.family->r, ctx.family->t);
    else
        for (int r = 2; r <= 5; ++r)
            for (int t = 2; t <= 5; ++t) params.emplace_back(r, t);
    for (auto [r, t] : params)
        if (poly_double_star(r, t) != boundary_polynomial(double_star_graph(r, t), ctx.opt))
            throw Failure{"double star (" + std::to_string(r) + "," + std::to_string(t) + ")"};
}

void check_edge_delete(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs)
        for (auto [u, v] : g.edges()) {
            BoundaryPolynomial reduced = boundary_polynomial(g.delete_edge(u, v), ctx.opt);
            if (edge_removal_identity(g, u, v, reduced, ctx.opt) !=
                boundary_polynomial(g, ctx.opt))
                throw Failure{describe(g) + " edge (" + std::to_string(u) + "," +
                              std::to_string(v) + ")"};
        }
}

void check_bridge(const VerifyContext& ctx) {
    std::mt19937_64 rng(ctx.seed + 1);
    for (auto [a, b] : pair_indices(ctx, 100)) {
        const Graph &g1 = ctx.graphs[a], &g2 = ctx.graphs[b];
        if (g1.order() < 1 || g2.order() < 1 ||
            g1.order() + g2.order() > ctx.opt.max_n)
            continue;
        const int u = static_cast<int>(rng() % g1.order());
        const int v = static_cast<int>(rng() % g2.order());
        BoundaryPolynomial lhs =
            poly_bridge(bridge_vector(g1, u, ctx.opt), bridge_vector(g2, v, ctx.opt));
        if (lhs != boundary_polynomial(bridge(g1, u, g2, v), ctx.opt))
            throw Failure{describe(g1) + " bridged to " + describe(g2)};
    }
}

void check_corona(const VerifyContext& ctx) {
    for (auto [a, b] : pair_indices(ctx, 100)) {
        const Graph &g1 = ctx.graphs[a], &g2 = ctx.graphs[b];
        if (g1.order() < 1 || g2.order() < 1 ||
            g1.order() + g2.order() + 2 > ctx.opt.max_n)
            continue;
        BoundaryPolynomial lhs =
            poly_corona_p2(boundary_polynomial(g1, ctx.opt), g1.order(),
                           boundary_polynomial(g2, ctx.opt), g2.order());
        if (lhs != boundary_polynomial(corona_p2(g1, g2), ctx.opt))
            throw Failure{describe(g1) + " corona with " + describe(g2)};
    }
}

void check_subdivision(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs) {
        if (g.order() + 1 > ctx.opt.max_n || g.order() + 1 > kMaxVertices) continue;
        for (auto [u, v] : g.edges())
            if (poly_subdivided(g, u, v, ctx.opt) !=
                boundary_polynomial(g.subdivide_edge(u, v), ctx.opt))
                throw Failure{describe(g) + " subdividing (" + std::to_string(u) + "," +
                              std::to_string(v) + ")"};
    }
}

void check_subgraph(const VerifyContext& ctx) {
    for (const Graph& g : ctx.graphs) {
        BoundaryPolynomial whole = boundary_polynomial(g, ctx.opt);
        for (auto [u, v] : g.edges()) {
            BoundaryPolynomial reduced = boundary_polynomial(g.delete_edge(u, v), ctx.opt);
            BoundaryPolynomial quotient;
            if (whole == reduced || !(whole - reduced).divide_by_x_minus_one(quotient) ||
                !quotient.nonnegative())
                throw Failure{describe(g) + " minus (" + std::to_string(u) + "," +
                              std::to_string(v) + ")"};
        }
        for (int v = 0; v < g.order(); ++v) {
            Graph smaller = induced_subgraph(g, g.vertex_mask() & ~(1ull << v));
            if (whole == boundary_polynomial(smaller, ctx.opt))
                throw Failure{describe(g) + " minus vertex " + std::to_string(v)};
        }
    }
}

}  // namespace

std::vector<std::string> all_check_names() {
    return {"factors", "eval",        "isolated", "coefficients", "join",
            "pendant", "path",        "cycle",    "edge-delete",  "bridge",
            "corona",  "double-star", "subdivision", "subgraph"};
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyContext& ctx) {
    std::vector<std::string> selected;
    for (const std::string& name : names) {
        if (name == "all") {
            auto all = all_check_names();
            selected.insert(selected.end(), all.begin(), all.end());
        } else {
            selected.push_back(name);
        }
    }
    std::vector<CheckResult> results;
    for (const std::string& name : selected) {
        CheckResult result{name, true, ""};
        try {
            if (name == "factors")
                check_factors(ctx);
            else if (name == "eval")
                check_eval(ctx);
            else if (name == "isolated")
                check_isolated(ctx);
            else if (name == "coefficients")
                check_coefficients(ctx);
            else if (name == "join")
                check_join(ctx);
            else if (name == "pendant")
                check_pendant(ctx);
            else if (name == "path")
                check_path(ctx);
            else if (name == "cycle")
                check_cycle(ctx);
            else if (name == "edge-delete")
                check_edge_delete(ctx);
            else if (name == "bridge")
                check_bridge(ctx);
            else if (name == "corona")
                check_corona(ctx);
            else if (name == "double-star")
                check_double_star(ctx);
            else if (name == "subdivision")
                check_subdivision(ctx);
            else if (name == "subgraph")
                check_subgraph(ctx);
            else
                throw std::invalid_argument("unknown check: " + name);
        } catch (const Failure& f) {
            result.pass = false;
            result.detail = f.detail;
        }
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace bpoly
