#include "boundary/enumerator.hpp"

#include <atomic>
#include <bit>
#include <string>
#include <thread>

namespace boundary {

std::uint64_t boundary_set(const Graph& g, std::uint64_t s) {
    std::uint64_t reached = 0;
    std::uint64_t rest = s;
    while (rest) {
        const int v = std::countr_zero(rest);
        rest &= rest - 1;
        reached |= g.neighbors(v);
    }
    return reached & ~s;
}

namespace {

void check_cap(const Graph& g, const EnumerationOptions& opt) {
    const int cap = std::min(opt.max_n, kHardEnumerationCap);
    if (g.order() > cap)
        throw CapExceededError("graph order " + std::to_string(g.order()) +
                               " exceeds the enumeration cap " + std::to_string(cap) +
                               "; raise the cap (hard limit " +
                               std::to_string(kHardEnumerationCap) +
                               ") or use a closed-form formula");
}

// Per-block enumeration state. A block fixes the membership of the top
// t vertices; the free (low) vertices run through reflected Gray-code
// order so that consecutive subsets differ in one vertex.
struct GrayState {
    const Graph* g = nullptr;
    std::uint64_t s = 0;
    int set_size = 0;
    int boundary_size = 0;
    std::array<std::uint8_t, kMaxVertices> nbr{};  // |N(v) & S| per vertex

    void reset(const Graph& graph, std::uint64_t initial) {
        g = &graph;
        s = initial;
        set_size = std::popcount(s);
        boundary_size = 0;
        nbr.fill(0);
        for (int v = 0; v < g->order(); ++v) {
            nbr[static_cast<std::size_t>(v)] =
                static_cast<std::uint8_t>(std::popcount(g->neighbors(v) & s));
            if (!((s >> v) & 1ull) && nbr[static_cast<std::size_t>(v)] > 0) ++boundary_size;
        }
    }

    void flip(int v) {
        const std::uint64_t bit = 1ull << v;
        if (!(s & bit)) {
            // v enters S: it leaves the boundary if it was there, and each
            // outside neighbor gaining its first S-neighbor enters it.
            if (nbr[static_cast<std::size_t>(v)] > 0) --boundary_size;
            s |= bit;
            ++set_size;
            std::uint64_t rest = g->neighbors(v);
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                if (nbr[static_cast<std::size_t>(u)]++ == 0 && !((s >> u) & 1ull))
                    ++boundary_size;
            }
        } else {
            s &= ~bit;
            --set_size;
            std::uint64_t rest = g->neighbors(v);
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                if (--nbr[static_cast<std::size_t>(u)] == 0 && !((s >> u) & 1ull))
                    --boundary_size;
            }
            if (nbr[static_cast<std::size_t>(v)] > 0) ++boundary_size;
        }
    }
};

// Runs the full enumeration, calling classify(s, |B(S)|, |S|) on every
// subset and bumping the returned bin's count grid (bins < 0 are skipped).
// Returns n_bins grids of (n+1)x(n+1) counters, counts[j][i] indexed as
// grid[bsize*(n+1)+ssize].
template <typename Classifier>
std::vector<std::vector<std::uint64_t>> count_bins(const Graph& g, const EnumerationOptions& opt,
                                                   int n_bins, Classifier classify) {
    check_cap(g, opt);
    const int n = g.order();
    const int stride = n + 1;
    const std::size_t grid_len = static_cast<std::size_t>(stride) * stride;
    const int threads = std::max(1, opt.threads);

    int t = 0;
    while ((1 << t) < 4 * threads) ++t;
    if (t > n) t = n;
    const int free_bits = n - t;
    const std::uint64_t n_blocks = 1ull << t;

    auto run_block = [&](std::uint64_t block, std::vector<std::vector<std::uint64_t>>& bins) {
        GrayState st;
        st.reset(g, block << free_bits);
        auto visit = [&]() {
            const int bin = classify(st.s, st.boundary_size, st.set_size);
            if (bin >= 0)
                ++bins[static_cast<std::size_t>(bin)]
                      [static_cast<std::size_t>(st.boundary_size) * stride + st.set_size];
        };
        visit();
        for (std::uint64_t k = 1; k < (1ull << free_bits); ++k) {
            st.flip(std::countr_zero(k));
            visit();
        }
    };

    auto make_bins = [&] {
        return std::vector<std::vector<std::uint64_t>>(
            static_cast<std::size_t>(n_bins), std::vector<std::uint64_t>(grid_len, 0));
    };

    auto result = make_bins();
    if (threads == 1 || n_blocks == 1) {
        for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b, result);
        return result;
    }

    std::atomic<std::uint64_t> next_block{0};
    std::vector<std::vector<std::vector<std::uint64_t>>> partials(
        static_cast<std::size_t>(threads));
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) {
        partials[static_cast<std::size_t>(w)] = make_bins();
        pool.emplace_back([&, w] {
            for (;;) {
                const std::uint64_t b = next_block.fetch_add(1);
                if (b >= n_blocks) break;
                run_block(b, partials[static_cast<std::size_t>(w)]);
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& part : partials)
        for (int bin = 0; bin < n_bins; ++bin)
            for (std::size_t k = 0; k < grid_len; ++k)
                result[static_cast<std::size_t>(bin)][k] += part[static_cast<std::size_t>(bin)][k];
    return result;
}

void validate_spec(const Graph& g, const RestrictedSpec& spec) {
    if (spec.constraints.size() > 2)
        throw std::invalid_argument("at most two constrained vertices are supported");
    for (const auto& c : spec.constraints) {
        if (c.vertex < 0 || c.vertex >= g.order())
            throw std::invalid_argument("constrained vertex out of range");
        if (c.membership != 0 && c.membership != 1)
            throw std::invalid_argument("membership must be 0 or 1");
    }
    if (spec.constraints.size() == 2 &&
        spec.constraints[0].vertex == spec.constraints[1].vertex)
        throw std::invalid_argument("constrained vertices must be distinct");
}

}  // namespace

BoundaryPolynomial boundary_polynomial(const Graph& g, const EnumerationOptions& opt) {
    auto bins = count_bins(g, opt, 1, [](std::uint64_t, int, int) { return 0; });
    return BoundaryPolynomial::from_counts(bins[0], g.order() + 1, g.order());
}

BoundaryPolynomial restricted_polynomial(const Graph& g, const RestrictedSpec& spec,
                                         const EnumerationOptions& opt) {
    validate_spec(g, spec);
    struct Test {
        std::uint64_t vbit;
        std::uint64_t want;        // vbit when membership = 1, else 0
        std::uint64_t nbr_masked;  // N(v) minus the other constrained vertex
        NeighborCondition cond;
    };
    std::vector<Test> tests;
    for (std::size_t k = 0; k < spec.constraints.size(); ++k) {
        const auto& c = spec.constraints[k];
        std::uint64_t excl = 0;
        if (spec.constraints.size() == 2)
            excl = 1ull << spec.constraints[1 - k].vertex;
        tests.push_back({1ull << c.vertex, c.membership ? (1ull << c.vertex) : 0,
                         g.neighbors(c.vertex) & ~excl, c.condition});
    }
    auto classify = [&](std::uint64_t s, int, int) -> int {
        for (const Test& t : tests) {
            if ((s & t.vbit) != t.want) return -1;
            if (t.cond == NeighborCondition::Empty && (s & t.nbr_masked) != 0) return -1;
            if (t.cond == NeighborCondition::NonEmpty && (s & t.nbr_masked) == 0) return -1;
        }
        return 0;
    };
    auto bins = count_bins(g, opt, 1, classify);
    return BoundaryPolynomial::from_counts(bins[0], g.order() + 1, g.order());
}

TransferVector restricted_vector(const Graph& g, int v, const EnumerationOptions& opt) {
    if (v < 0 || v >= g.order()) throw std::invalid_argument("vertex out of range");
    const std::uint64_t vbit = 1ull << v;
    const std::uint64_t nbrs = g.neighbors(v);
    auto classify = [&](std::uint64_t s, int, int) -> int {
        const int membership = (s & vbit) ? 1 : 0;
        const int touched = (s & nbrs) ? 1 : 0;
        return membership * 2 + touched;
    };
    auto bins = count_bins(g, opt, 4, classify);
    TransferVector vec;
    for (int k = 0; k < 4; ++k)
        vec.parts[static_cast<std::size_t>(k)] =
            BoundaryPolynomial::from_counts(bins[static_cast<std::size_t>(k)], g.order() + 1,
                                            g.order());
    return vec;
}

TwoVertexProfile::TwoVertexProfile(const Graph& g, int u, int v, const EnumerationOptions& opt) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order() || u == v)
        throw std::invalid_argument("profile requires two distinct vertices of the graph");
    const std::uint64_t ubit = 1ull << u, vbit = 1ull << v;
    const std::uint64_t nu = g.neighbors(u) & ~vbit;  // (S\{v}) & N(u) uses this mask
    const std::uint64_t nv = g.neighbors(v) & ~ubit;
    auto classify = [&](std::uint64_t s, int, int) -> int {
        const int iu = (s & ubit) ? 1 : 0;
        const int iv = (s & vbit) ? 1 : 0;
        const int cu = (s & nu) ? 1 : 0;
        const int cv = (s & nv) ? 1 : 0;
        return iu | (iv << 1) | (cu << 2) | (cv << 3);
    };
    auto bins = count_bins(g, opt, 16, classify);
    for (int k = 0; k < 16; ++k)
        cells_[static_cast<std::size_t>(k)] = BoundaryPolynomial::from_counts(
            bins[static_cast<std::size_t>(k)], g.order() + 1, g.order());
}

const BoundaryPolynomial& TwoVertexProfile::cell(int iu, int iv, int cu, int cv) const {
    return cells_[static_cast<std::size_t>(iu | (iv << 1) | (cu << 2) | (cv << 3))];
}

BoundaryPolynomial TwoVertexProfile::membership(int iu, int iv) const {
    return cell(iu, iv, 0, 0) + cell(iu, iv, 0, 1) + cell(iu, iv, 1, 0) + cell(iu, iv, 1, 1);
}

BoundaryPolynomial TwoVertexProfile::restricted_u(int iu, int iv, int cu) const {
    return cell(iu, iv, cu, 0) + cell(iu, iv, cu, 1);
}

BoundaryPolynomial TwoVertexProfile::restricted_v(int iu, int iv, int cv) const {
    return cell(iu, iv, 0, cv) + cell(iu, iv, 1, cv);
}

}  // namespace boundary
