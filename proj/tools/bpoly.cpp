#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "boundary/catalog.hpp"
#include "boundary/enumerator.hpp"
#include "boundary/formulas.hpp"
#include "boundary/graph.hpp"
#include "boundary/graph_io.hpp"
#include "boundary/invariants.hpp"
#include "boundary/polynomial.hpp"
#include "verify.hpp"

namespace {

using namespace boundary;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;  // failed verification / unequal comparison
constexpr int kExitParse = 2;
constexpr int kExitCap = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One graph source: a file path or a family request.
struct Source {
    std::optional<std::string> path;
    std::optional<FamilySpec> family;
};

struct SourceFlags {
    std::vector<std::string> inputs;
    std::string family;
    int n = -1, m = -1, r = -1, t = -1;

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", inputs, "graph file (edge-list JSON or graph6)");
        cmd->add_option("--family", family,
                        "family name: empty, complete, path, cycle, wheel, star, "
                        "complete_bipartite, complete_minus_edge, double_star, prism");
        cmd->add_option("--n", n, "family order (first part size for complete_bipartite)");
        cmd->add_option("--m", m, "second part size for complete_bipartite");
        cmd->add_option("--r", r, "first star order for double_star");
        cmd->add_option("--t", t, "second star order for double_star");
    }

    std::vector<Source> sources() const {
        std::vector<Source> out;
        for (const std::string& path : inputs) out.push_back({path, std::nullopt});
        if (!family.empty()) {
            FamilySpec spec;
            spec.name = family;
            spec.n = n;
            spec.m = m;
            spec.r = r;
            spec.t = t;
            out.push_back({std::nullopt, spec});
        }
        return out;
    }
};

Graph realize(const Source& src) {
    if (src.path) return load_graph_file(*src.path);
    return make_family(*src.family);
}

bool family_has_formula(const std::string& name) { return name != "prism"; }

BoundaryPolynomial family_formula(const FamilySpec& spec) {
    const std::string& f = spec.name;
    if (f == "empty") return poly_empty(spec.n);
    if (f == "complete") return poly_complete(spec.n);
    if (f == "path") return poly_path(spec.n);
    if (f == "cycle") return poly_cycle(spec.n);
    if (f == "wheel") return poly_wheel(spec.n);
    if (f == "star") return poly_star(spec.n);
    if (f == "complete_bipartite") return poly_complete_bipartite(spec.n, spec.m);
    if (f == "complete_minus_edge") return poly_complete_minus_edge(spec.n);
    if (f == "double_star") return poly_double_star(spec.r, spec.t);
    throw UsageError("no closed form for family: " + f);
}

BoundaryPolynomial compute_polynomial(const Source& src, const std::string& method,
                                      const EnumerationOptions& opt) {
    if (method == "formula") {
        if (!src.family) throw UsageError("--method formula requires a --family source");
        return family_formula(*src.family);
    }
    if (method == "auto" && src.family && family_has_formula(src.family->name))
        return family_formula(*src.family);
    return boundary_polynomial(realize(src), opt);
}

// "n<=K" or "n=K"; exhaustive catalogs through order 5, seeded uniform
// samples (1000 per order) above that.
std::vector<Graph> catalog_graphs(const std::string& spec, std::uint64_t seed) {
    int low = 1, high = 0;
    if (spec.rfind("n<=", 0) == 0)
        high = std::stoi(spec.substr(3));
    else if (spec.rfind("n=", 0) == 0)
        low = high = std::stoi(spec.substr(2));
    else
        throw UsageError("catalog spec must look like n<=5 or n=6");
    if (high < low || low < 1 || high > 7)
        throw UsageError("catalog orders must fall within 1..7");
    std::vector<Graph> out;
    for (int n = low; n <= high; ++n) {
        if (n <= 5) {
            auto batch = all_graphs(n);
            out.insert(out.end(), batch.begin(), batch.end());
        } else {
            auto batch = sample_graphs(n, 1000, seed + static_cast<std::uint64_t>(n));
            out.insert(out.end(), batch.begin(), batch.end());
        }
    }
    return out;
}

int cmd_compute(const SourceFlags& flags, const std::string& method, const std::string& format,
                const EnumerationOptions& opt) {
    auto sources = flags.sources();
    if (sources.size() != 1) throw UsageError("compute needs exactly one graph source");
    BoundaryPolynomial p = compute_polynomial(sources[0], method, opt);
    std::cout << emit(p, parse_output_format(format)) << "\n";
    return kExitOk;
}

int cmd_invariants(const SourceFlags& flags, const std::string& method,
                   const EnumerationOptions& opt) {
    auto sources = flags.sources();
    if (sources.size() != 1) throw UsageError("invariants needs exactly one graph source");
    BoundaryPolynomial p = compute_polynomial(sources[0], method, opt);
    InvariantReport report = extract_report(p);
    std::cout << report_to_json(report) << "\n";
    // a missing field means the extractor's precondition failed
    return report.kv || report.n == 0 ? kExitOk : kExitCap;
}

int cmd_verify(const SourceFlags& flags, const std::string& catalog, const std::string& checks,
               std::uint64_t seed, const EnumerationOptions& opt) {
    bpoly::VerifyContext ctx;
    ctx.seed = seed;
    ctx.opt = opt;
    for (const Source& src : flags.sources()) {
        ctx.graphs.push_back(realize(src));
        if (src.family) ctx.family = src.family;
    }
    if (!catalog.empty()) {
        auto batch = catalog_graphs(catalog, seed);
        ctx.graphs.insert(ctx.graphs.end(), batch.begin(), batch.end());
    }
    if (ctx.graphs.empty()) throw UsageError("verify needs --input, --family or --catalog");

    std::vector<std::string> names;
    std::string token;
    for (char c : checks + ",") {
        if (c == ',') {
            if (!token.empty()) names.push_back(token);
            token.clear();
        } else {
            token.push_back(c);
        }
    }
    bool all_pass = true;
    for (const bpoly::CheckResult& r : bpoly::run_checks(names, ctx)) {
        if (r.pass) {
            std::cout << "PASS " << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
            all_pass = false;
        }
    }
    return all_pass ? kExitOk : kExitMismatch;
}

int cmd_compare(const SourceFlags& flags, const std::string& method, const std::string& format,
                const EnumerationOptions& opt) {
    auto sources = flags.sources();
    if (sources.size() != 2) throw UsageError("compare needs exactly two graph sources");
    BoundaryPolynomial a = compute_polynomial(sources[0], method, opt);
    BoundaryPolynomial b = compute_polynomial(sources[1], method, opt);
    if (a == b) {
        std::cout << "EQUAL " << emit(a, parse_output_format(format)) << "\n";
        return kExitOk;
    }
    const int nx = std::max(a.max_x_degree(), b.max_x_degree());
    const int ny = std::max(a.max_y_degree(), b.max_y_degree());
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            if (a.coefficient(i, j) != b.coefficient(i, j)) {
                std::cout << "DIFFERENT at coefficient (" << i << "," << j << "): "
                          << a.coefficient(i, j).get_str() << " vs "
                          << b.coefficient(i, j).get_str() << "\n";
                return kExitMismatch;
            }
    return kExitMismatch;  // unreachable: a != b implies a differing cell
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boundary polynomial toolkit: compute B(G;x,y), extract graph "
                 "parameters from it, and verify the algebraic identities"};
    app.require_subcommand(1);

    std::string method = "auto", format = "plain", checks = "all", catalog;
    std::uint64_t seed = kDefaultCatalogSeed;
    EnumerationOptions opt;

    auto add_common = [&](CLI::App* cmd, SourceFlags& flags) {
        flags.attach(cmd);
        cmd->add_option("--max-n", opt.max_n, "enumeration cap (hard limit 30)")
            ->default_val(kDefaultEnumerationCap)
            ->check(CLI::Range(1, kHardEnumerationCap));
        cmd->add_option("--threads", opt.threads, "enumeration worker count")
            ->default_val(1)
            ->check(CLI::PositiveNumber);
    };

    SourceFlags compute_flags, invariant_flags, verify_flags, compare_flags;

    CLI::App* compute = app.add_subcommand("compute", "print the boundary polynomial");
    add_common(compute, compute_flags);
    compute->add_option("--method", method, "auto, enumerate or formula")->default_val("auto");
    compute->add_option("--format", format, "plain, latex or json")->default_val("plain");

    CLI::App* invariants = app.add_subcommand(
        "invariants", "extract graph parameters from the boundary polynomial");
    add_common(invariants, invariant_flags);
    invariants->add_option("--method", method, "auto, enumerate or formula")->default_val("auto");

    CLI::App* verify = app.add_subcommand("verify", "check the algebraic identities");
    add_common(verify, verify_flags);
    verify->add_option("--check", checks, "comma-separated check names or all")
        ->default_val("all");
    verify->add_option("--catalog", catalog, "graph catalog spec: n<=K or n=K (K <= 7)");
    verify->add_option("--seed", seed, "seed for sampled catalogs and pairings")
        ->default_val(kDefaultCatalogSeed);

    CLI::App* compare = app.add_subcommand("compare", "compare two boundary polynomials");
    add_common(compare, compare_flags);
    compare->add_option("--method", method, "auto, enumerate or formula")->default_val("auto");
    compare->add_option("--format", format, "plain, latex or json")->default_val("plain");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitParse;
    }

    try {
        if (compute->parsed()) return cmd_compute(compute_flags, method, format, opt);
        if (invariants->parsed()) return cmd_invariants(invariant_flags, method, opt);
        if (verify->parsed()) return cmd_verify(verify_flags, catalog, checks, seed, opt);
        return cmd_compare(compare_flags, method, format, opt);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
