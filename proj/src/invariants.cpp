#include "boundary/invariants.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace boundary {

int order_from(const BoundaryPolynomial& p) {
    BigInt n = 0;
    for (int i = 0; i <= p.max_x_degree(); ++i) n += p.coefficient(i, 1);
    if (!n.fits_sint_p()) throw std::domain_error("order out of range");
    return static_cast<int>(n.get_si());
}

int size_from(const BoundaryPolynomial& p) {
    BigInt twice = 0;
    for (int i = 0; i <= p.max_x_degree(); ++i) twice += i * p.coefficient(i, 1);
    if (twice % 2 != 0) throw std::domain_error("degree sum is odd; not a graph polynomial");
    BigInt m = twice / 2;
    return static_cast<int>(m.get_si());
}

int size_from_alt(const BoundaryPolynomial& p) {
    const int n = order_from(p);
    if (n <= 2) throw std::domain_error("size_from_alt requires n >= 3");
    // The y^2-slice derivative at 1 is sum_{|S|=2} |B(S)| =
    // 2m(n-2) - sum_v C(d(v),2), and half the second derivative of the
    // y-slice is sum_v C(d(v),2); their sum over 2(n-2) is m.
    BigInt d_y2 = 0;
    for (int i = 0; i <= p.max_x_degree(); ++i) d_y2 += i * p.coefficient(i, 2);
    BigInt dd_y1 = 0;
    for (int i = 0; i <= p.max_x_degree(); ++i)
        dd_y1 += BigInt(i) * (i - 1) * p.coefficient(i, 1);
    BigInt num = 2 * d_y2 + dd_y1;  // twice the quotient's numerator
    BigInt den = 4 * (n - 2);
    if (num % den != 0) throw std::domain_error("size formula is not integral");
    return static_cast<int>(BigInt(num / den).get_si());
}

std::vector<int> degree_sequence(const BoundaryPolynomial& p) {
    std::vector<int> ds;
    for (int d = 0; d <= p.max_x_degree(); ++d) {
        const BigInt& c = p.coefficient(d, 1);
        for (BigInt k = 0; k < c; ++k) ds.push_back(d);
    }
    return ds;
}

int isolated_count(const BoundaryPolynomial& p) {
    const BigInt& c = p.coefficient(0, 1);
    const int count = static_cast<int>(c.get_si());
    if (count != p.y_plus_one_multiplicity())
        throw std::domain_error("isolated-vertex count disagrees with the (y+1) multiplicity");
    return count;
}

ComponentStructure connectivity_and_components(const BoundaryPolynomial& p) {
    const int n = order_from(p);
    ComponentStructure cs;
    cs.connected = true;
    for (int j = 1; j <= n - 1; ++j)
        if (p.coefficient(0, j) != 0) cs.connected = false;

    UnivariatePolynomial running = p.substitute_x0();
    BigInt total = 0;
    for (int j = 0; j <= running.degree(); ++j) total += running.coefficient(j);
    if (total <= 0 || mpz_popcount(total.get_mpz_t()) != 1)
        throw std::domain_error("B(G;0,1) is not a power of two; not a graph polynomial");
    cs.count = static_cast<int>(mpz_sizeinbase(total.get_mpz_t(), 2)) - 1;

    // Peel factors (1 + y^{n_i}) smallest order first.
    for (int step = 0; step < cs.count; ++step) {
        int ni = -1;
        for (int j = 1; j <= running.degree(); ++j)
            if (running.coefficient(j) != 0) {
                ni = j;
                break;
            }
        if (ni < 0) throw std::domain_error("component peeling ran out of factors");
        std::vector<BigInt> factor(static_cast<std::size_t>(ni) + 1);
        factor[0] = 1;
        factor[static_cast<std::size_t>(ni)] = 1;
        UnivariatePolynomial quotient;
        if (!running.divide_exact(UnivariatePolynomial(std::move(factor)), quotient))
            throw std::domain_error("component peeling left a remainder; not a graph polynomial");
        running = quotient;
        cs.orders.push_back(ni);
    }
    if (!(running == UnivariatePolynomial({BigInt(1)})))
        throw std::domain_error("component peeling did not terminate at 1");
    int order_sum = 0;
    for (int ni : cs.orders) order_sum += ni;
    if (order_sum != n) throw std::domain_error("component orders do not sum to the order");
    return cs;
}

int p2_components(const BoundaryPolynomial& p) {
    const BigInt iso = p.coefficient(0, 1);
    BigInt c2;
    mpz_bin_ui(c2.get_mpz_t(), iso.get_mpz_t(), 2);
    BigInt count = p.coefficient(0, 2) - c2;
    if (count < 0) throw std::domain_error("negative P2-component count; not a graph polynomial");
    return static_cast<int>(count.get_si());
}

int p3_or_c3_components(const BoundaryPolynomial& p) {
    const BigInt iso = p.coefficient(0, 1);
    BigInt c3;
    mpz_bin_ui(c3.get_mpz_t(), iso.get_mpz_t(), 3);
    BigInt count = p.coefficient(0, 3) - c3 - BigInt(p2_components(p)) * iso;
    if (count < 0)
        throw std::domain_error("negative P3/C3-component count; not a graph polynomial");
    return static_cast<int>(count.get_si());
}

int domination_number(const BoundaryPolynomial& p) {
    const int n = order_from(p);
    if (n == 0) return 0;
    // B_{0,n} = 1 guarantees k = n qualifies, which covers gamma(G) = n.
    for (int k = 1; k <= n; ++k)
        if (p.coefficient(n - k, k) != 0) return k;
    throw std::domain_error("no dominating coefficient found; not a graph polynomial");
}

DifferentialRoman differential_and_roman(const BoundaryPolynomial& p) {
    const int n = order_from(p);
    const LaurentProfile prof = p.laurent_profile();
    DifferentialRoman dr;
    dr.differential = prof.degree_diff;
    dr.roman = prof.degree_sum - prof.degree_diff;
    if (dr.differential + dr.roman != n)
        throw std::domain_error("differential + roman != n; not a graph polynomial");
    return dr;
}

int vertex_connectivity(const BoundaryPolynomial& p) {
    const ComponentStructure cs = connectivity_and_components(p);
    if (!cs.connected)
        throw std::domain_error("vertex connectivity requires a connected graph");
    const int n = order_from(p);
    if (n == 0) throw std::domain_error("vertex connectivity requires a non-empty graph");
    for (int k = 1; k <= n - 1; ++k)
        for (int j = 1; k + j < n; ++j)
            if (p.coefficient(k, j) != 0) return k;
    return n - 1;
}

bool min_degree_check(const BoundaryPolynomial& p, int n) {
    const std::vector<int> ds = degree_sequence(p);
    const int delta = ds.empty() ? 0 : ds.front();
    for (int k = 0; k <= delta; ++k) {
        if (p.coefficient(k, n - k) != binomial(n, k)) return false;
        for (int r = 0; r <= p.max_x_degree(); ++r)
            if (r != k && p.coefficient(r, n - k) != 0) return false;
    }
    return true;
}

InvariantReport extract_report(const BoundaryPolynomial& p) {
    InvariantReport r;
    r.n = order_from(p);
    r.m = size_from(p);
    if (r.n >= 3 && size_from_alt(p) != r.m)
        throw std::domain_error("size computations disagree; not a graph polynomial");
    r.degree_seq = degree_sequence(p);
    r.isolated = isolated_count(p);
    const ComponentStructure cs = connectivity_and_components(p);
    r.connected = cs.connected;
    r.components = cs.count;
    r.component_orders = cs.orders;
    r.p2 = p2_components(p);
    r.p3_c3 = p3_or_c3_components(p);
    r.gamma = domination_number(p);
    const DifferentialRoman dr = differential_and_roman(p);
    r.differential = dr.differential;
    r.gamma_r = dr.roman;
    if (cs.connected && r.n >= 1) r.kv = vertex_connectivity(p);
    return r;
}

std::string report_to_json(const InvariantReport& r) {
    nlohmann::ordered_json doc;
    doc["n"] = r.n;
    doc["m"] = r.m;
    doc["degree_sequence"] = r.degree_seq;
    doc["isolated"] = r.isolated;
    doc["connected"] = r.connected;
    doc["components"] = r.components;
    doc["component_orders"] = r.component_orders;
    doc["p2_components"] = r.p2;
    doc["p3_c3_components"] = r.p3_c3;
    doc["gamma"] = r.gamma;
    doc["differential"] = r.differential;
    doc["gamma_r"] = r.gamma_r;
    if (r.kv)
        doc["kv"] = *r.kv;
    else {
        doc["kv"] = nullptr;
        doc["note"] = "vertex connectivity is defined here for connected graphs only";
    }
    return doc.dump();
}

// ---------------------------------------------------------------------------
// Oracles

namespace {

void check_oracle_cap(const Graph& g, int cap) {
    if (g.order() > cap)
        throw std::invalid_argument("graph too large for the exhaustive oracle (cap " +
                                    std::to_string(cap) + ")");
}

std::uint64_t closed_neighborhood(const Graph& g, std::uint64_t s) {
    std::uint64_t reach = s;
    std::uint64_t rest = s;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        reach |= g.neighbors(v);
    }
    return reach;
}

}  // namespace

int oracle_gamma(const Graph& g) {
    check_oracle_cap(g, kOracleCap);
    const int n = g.order();
    if (n == 0) return 0;
    const std::uint64_t all = g.vertex_mask();
    int best = n;
    for (std::uint64_t s = 1; s < (1ull << n); ++s) {
        if (std::popcount(s) >= best) continue;
        if (closed_neighborhood(g, s) == all) best = std::popcount(s);
    }
    return best;
}

int oracle_differential(const Graph& g) {
    check_oracle_cap(g, kOracleCap);
    const int n = g.order();
    int best = 0;
    for (std::uint64_t s = 1; s < (n == 0 ? 1 : (1ull << n)); ++s) {
        std::uint64_t reach = closed_neighborhood(g, s);
        const int gain = std::popcount(reach & ~s) - std::popcount(s);
        best = std::max(best, gain);
    }
    return best;
}

int oracle_roman(const Graph& g) {
    check_oracle_cap(g, kRomanOracleCap);
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<int> label(static_cast<std::size_t>(n), 0);
    int best = 2 * n;
    for (;;) {
        std::uint64_t twos = 0;
        int weight = 0;
        for (int v = 0; v < n; ++v) {
            weight += label[static_cast<std::size_t>(v)];
            if (label[static_cast<std::size_t>(v)] == 2) twos |= 1ull << v;
        }
        if (weight < best) {
            bool valid = true;
            for (int v = 0; v < n && valid; ++v)
                if (label[static_cast<std::size_t>(v)] == 0 && !(g.neighbors(v) & twos))
                    valid = false;
            if (valid) best = weight;
        }
        // next ternary word
        int pos = 0;
        while (pos < n && label[static_cast<std::size_t>(pos)] == 2)
            label[static_cast<std::size_t>(pos++)] = 0;
        if (pos == n) break;
        ++label[static_cast<std::size_t>(pos)];
    }
    return best;
}

namespace {

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

// Removing a vertex cut either increases the number of components or
// shrinks a component with >= 2 vertices down to a single vertex.
bool is_vertex_cut(const Graph& g, std::uint64_t w, int base_components) {
    if (w == g.vertex_mask()) return false;
    const Graph reduced = induced_subgraph(g, g.vertex_mask() & ~w);
    const auto comps = component_masks(reduced);
    if (static_cast<int>(comps.size()) > base_components) return true;
    // map reduced labels back to original ones
    std::vector<int> original;
    for (int v = 0; v < g.order(); ++v)
        if (!((w >> v) & 1ull)) original.push_back(v);
    const auto base = component_masks(g);
    for (const std::uint64_t comp : comps) {
        if (std::popcount(comp) != 1) continue;
        const int survivor = original[static_cast<std::size_t>(std::countr_zero(comp))];
        for (const std::uint64_t b : base)
            if (((b >> survivor) & 1ull) && std::popcount(b) >= 2) return true;
    }
    return false;
}

}  // namespace

int oracle_kv(const Graph& g) {
    check_oracle_cap(g, kOracleCap);
    const int n = g.order();
    if (n == 0) throw std::invalid_argument("vertex connectivity of the empty graph is undefined");
    if (is_complete(g)) return n - 1;  // includes kv(K1) = 0
    // A single-vertex component pins the component minimum at kv(K1) = 0.
    for (const std::uint64_t comp : component_masks(g))
        if (std::popcount(comp) == 1) return 0;
    const int base = static_cast<int>(component_masks(g).size());
    for (int k = 1; k <= n - 1; ++k)
        for (std::uint64_t w = 0; w < (1ull << n); ++w)
            if (std::popcount(w) == k && is_vertex_cut(g, w, base)) return k;
    return n - 1;
}

bool check_component_additivity(const std::vector<Graph>& components) {
    if (components.empty()) return false;
    Graph whole = components.front();
    for (std::size_t k = 1; k < components.size(); ++k)
        whole = disjoint_union(whole, components[k]);
    int gamma_sum = 0, diff_sum = 0, roman_sum = 0, kv_min = whole.order();
    for (const Graph& c : components) {
        gamma_sum += oracle_gamma(c);
        diff_sum += oracle_differential(c);
        roman_sum += oracle_roman(c);
        kv_min = std::min(kv_min, oracle_kv(c));
    }
    return oracle_gamma(whole) == gamma_sum && oracle_differential(whole) == diff_sum &&
           oracle_roman(whole) == roman_sum && oracle_kv(whole) == kv_min;
}

bool check_join_identities(const Graph& g1, const Graph& g2) {
    const Graph j = join(g1, g2);
    const int n1 = g1.order(), n2 = g2.order();

    const int d1 = oracle_differential(g1), d2 = oracle_differential(g2);
    const int expected_diff =
        (d1 == n1 - 2 || d2 == n2 - 2) ? n1 + n2 - 2 : n1 + n2 - 4;
    if (oracle_differential(j) != expected_diff) return false;

    const int r1 = oracle_roman(g1), r2 = oracle_roman(g2);
    const int expected_roman = (r1 <= 2 || r2 <= 2) ? 2 : 4;
    if (oracle_roman(j) != expected_roman) return false;

    const int expected_gamma = (oracle_gamma(g1) == 1 || oracle_gamma(g2) == 1) ? 1 : 2;
    if (oracle_gamma(j) != expected_gamma) return false;

    const int expected_kv = std::min(oracle_kv(g1) + n2, oracle_kv(g2) + n1);
    return oracle_kv(j) == expected_kv;
}

}  // namespace boundary
