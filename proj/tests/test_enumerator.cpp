#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "boundary/catalog.hpp"
#include "boundary/enumerator.hpp"
#include "boundary/graph.hpp"
#include "test_support.hpp"

using namespace boundary;
using testsupport::naive_boundary_polynomial;
using testsupport::naive_restricted_polynomial;
using testsupport::poly_from_terms;

TEST_CASE("outer boundary of a subset") {
    Graph p3 = path_graph(3);
    CHECK(boundary_set(p3, 0b010) == 0b101);  // the center reaches both ends
    CHECK(boundary_set(p3, 0) == 0);
    Graph k4 = complete_graph(4);
    CHECK(boundary_set(k4, 0b0011) == 0b1100);
    CHECK(boundary_set(k4, k4.vertex_mask()) == 0);
}

TEST_CASE("boundary polynomial of small graphs") {
    CHECK(boundary_polynomial(complete_graph(4)) ==
          poly_from_terms(4, {{1, 0, 0}, {4, 3, 1}, {6, 2, 2}, {4, 1, 3}, {1, 0, 4}}));
    CHECK(boundary_polynomial(empty_graph(2)) ==
          poly_from_terms(2, {{1, 0, 0}, {2, 0, 1}, {1, 0, 2}}));
    CHECK(boundary_polynomial(path_graph(3)) ==
          poly_from_terms(3, {{1, 0, 0}, {2, 1, 1}, {1, 2, 1}, {3, 1, 2}, {1, 0, 3}}));
    CHECK(boundary_polynomial(empty_graph(0)) == BoundaryPolynomial::constant(1));
}

TEST_CASE("incremental enumeration equals the from-scratch reference") {
    for (int n = 0; n <= 4; ++n)
        for (const Graph& g : all_graphs(n))
            CHECK(boundary_polynomial(g) == naive_boundary_polynomial(g));
    for (int n : {6, 7}) {
        std::mt19937_64 rng(42);
        for (int rep = 0; rep < 25; ++rep) {
            Graph g = random_graph(n, rng);
            CHECK(boundary_polynomial(g) == naive_boundary_polynomial(g));
        }
    }
    for (const Graph& g :
         {path_graph(12), cycle_graph(11), complete_bipartite_graph(5, 6), wheel_graph(10)})
        CHECK(boundary_polynomial(g) == naive_boundary_polynomial(g));
}

TEST_CASE("enumeration output satisfies the grid invariants") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        Graph g = random_graph(7, rng);
        BoundaryPolynomial p = boundary_polynomial(g);
        CHECK(is_valid_graph_polynomial(p));
        CHECK(p.order() == 7);
    }
}

TEST_CASE("parallel enumeration is deterministic") {
    Graph g = complete_bipartite_graph(6, 7);
    EnumerationOptions seq{.max_n = 24, .threads = 1};
    EnumerationOptions par{.max_n = 24, .threads = 4};
    BoundaryPolynomial a = boundary_polynomial(g, seq);
    BoundaryPolynomial b = boundary_polynomial(g, par);
    CHECK(a == b);
    CHECK(emit(a, OutputFormat::Json) == emit(b, OutputFormat::Json));
}

TEST_CASE("enumeration cap") {
    Graph big(25);
    CHECK_THROWS_AS(boundary_polynomial(big), CapExceededError);
    EnumerationOptions raised{.max_n = 30, .threads = 1};
    CHECK(boundary_polynomial(Graph(25), raised) ==
          naive_boundary_polynomial(Graph(12)) * naive_boundary_polynomial(Graph(13)));
    EnumerationOptions over{.max_n = 40, .threads = 1};
    CHECK_THROWS_AS(boundary_polynomial(Graph(31), over), CapExceededError);
}

TEST_CASE("restricted polynomial, single vertex") {
    Graph e1 = empty_graph(1);
    RestrictedSpec in{{{0, 1, NeighborCondition::Unconstrained}}};
    RestrictedSpec out{{{0, 0, NeighborCondition::Unconstrained}}};
    CHECK(restricted_polynomial(e1, in) == poly_from_terms(1, {{1, 0, 1}}));
    CHECK(restricted_polynomial(e1, out) == BoundaryPolynomial::constant(1));

    // membership restrictions partition the subset space
    std::mt19937_64 rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_graph(6, rng);
        for (int v = 0; v < 6; ++v) {
            RestrictedSpec member{{{v, 1, NeighborCondition::Unconstrained}}};
            RestrictedSpec non_member{{{v, 0, NeighborCondition::Unconstrained}}};
            CHECK(restricted_polynomial(g, member) + restricted_polynomial(g, non_member) ==
                  boundary_polynomial(g));
            // ... and so do the neighbor conditions within one membership class
            RestrictedSpec touched{{{v, 1, NeighborCondition::NonEmpty}}};
            RestrictedSpec untouched{{{v, 1, NeighborCondition::Empty}}};
            CHECK(restricted_polynomial(g, touched) + restricted_polynomial(g, untouched) ==
                  restricted_polynomial(g, member));
        }
    }
}

TEST_CASE("restricted polynomial, two vertices") {
    // B(P3)^{0,1}_{v1^0, v3}: v1 out, v3 in, (S \ {v3}) misses N(v1) = {v2}
    Graph p3 = path_graph(3);
    RestrictedSpec spec{{{0, 0, NeighborCondition::Empty}, {2, 1, NeighborCondition::Unconstrained}}};
    CHECK(restricted_polynomial(p3, spec) == poly_from_terms(3, {{1, 1, 1}}));

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_graph(5, rng);
        for (auto spec2 : {RestrictedSpec{{{0, 1, NeighborCondition::Empty},
                                           {3, 0, NeighborCondition::NonEmpty}}},
                           RestrictedSpec{{{1, 0, NeighborCondition::Empty},
                                           {2, 0, NeighborCondition::Empty}}}})
            CHECK(restricted_polynomial(g, spec2) == naive_restricted_polynomial(g, spec2));
    }
}

TEST_CASE("restricted spec validation") {
    Graph g = path_graph(3);
    RestrictedSpec same{{{1, 0, {}}, {1, 1, {}}}};
    CHECK_THROWS_AS(restricted_polynomial(g, same), std::invalid_argument);
    RestrictedSpec out_of_range{{{7, 0, {}}}};
    CHECK_THROWS_AS(restricted_polynomial(g, out_of_range), std::invalid_argument);
}

TEST_CASE("restricted vector") {
    TransferVector e1 = restricted_vector(empty_graph(1), 0);
    CHECK(e1.parts[0] == BoundaryPolynomial::constant(1));
    CHECK(e1.parts[1] == BoundaryPolynomial::zero());
    CHECK(e1.parts[2] == poly_from_terms(1, {{1, 0, 1}}));
    CHECK(e1.parts[3] == BoundaryPolynomial::zero());

    TransferVector p2 = restricted_vector(path_graph(2), 0);
    CHECK(p2.parts[0] == BoundaryPolynomial::constant(1));
    CHECK(p2.parts[1] == poly_from_terms(2, {{1, 1, 1}}));
    CHECK(p2.parts[2] == poly_from_terms(2, {{1, 1, 1}}));
    CHECK(p2.parts[3] == poly_from_terms(2, {{1, 0, 2}}));

    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_graph(6, rng);
        for (int v = 0; v < 6; ++v)
            CHECK(restricted_vector(g, v).sum() == boundary_polynomial(g));
    }
}

TEST_CASE("two-vertex profile partitions the polynomial") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = random_graph(6, rng);
        TwoVertexProfile profile(g, 0, 4);
        BoundaryPolynomial total = profile.membership(0, 0) + profile.membership(0, 1) +
                                   profile.membership(1, 0) + profile.membership(1, 1);
        CHECK(total == boundary_polynomial(g));
        // conditional splits within a fixed membership pattern
        CHECK(profile.membership(1, 0) ==
              profile.restricted_v(1, 0, 0) + profile.restricted_v(1, 0, 1));
        CHECK(profile.membership(0, 1) ==
              profile.restricted_u(0, 1, 0) + profile.restricted_u(0, 1, 1));
        // profile cells match the dedicated restricted enumeration
        RestrictedSpec spec{{{0, 0, NeighborCondition::Empty}, {4, 1, NeighborCondition::Unconstrained}}};
        CHECK(profile.restricted_u(0, 1, 0) == restricted_polynomial(g, spec));
    }
}
