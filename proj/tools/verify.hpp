#ifndef BPOLY_VERIFY_HPP
#define BPOLY_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "boundary/catalog.hpp"
#include "boundary/enumerator.hpp"
#include "boundary/graph.hpp"

namespace bpoly {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string detail;  // first counterexample when pass is false
};

struct VerifyContext {
    std::vector<boundary::Graph> graphs;
    // set when the run set came from a --family request; family sweeps then
    // target exactly the requested parameters
    std::optional<boundary::FamilySpec> family;
    std::uint64_t seed = boundary::kDefaultCatalogSeed;
    boundary::EnumerationOptions opt;
};

// The individual identity checks: factors, eval, isolated, coefficients,
// join, pendant, path, edge-delete, cycle, bridge, corona, double-star,
// subdivision, subgraph. "all" expands to every one of them.
std::vector<std::string> all_check_names();

std::vector<CheckResult> run_checks(const std::vector<std::string>& names,
                                    const VerifyContext& ctx);

}  // namespace bpoly

#endif  // BPOLY_VERIFY_HPP
