#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#ifndef BPOLY_PATH
#error "BPOLY_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string("\"") + BPOLY_PATH + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(out.good());
    out << content;
}

}  // namespace

TEST_CASE("compute renders families and files") {
    RunResult k4 = run("compute --family complete --n 4 --format plain");
    CHECK(k4.exit_code == 0);
    CHECK(k4.out == "1 + 4*x^3*y + 6*x^2*y^2 + 4*x*y^3 + y^4\n");

    write_file("cli_e1.json", R"({"n":1,"edges":[]})");
    RunResult e1 = run("compute --input cli_e1.json");
    CHECK(e1.exit_code == 0);
    CHECK(e1.out == "1 + y\n");

    RunResult p4 = run("compute --family path --n 4");
    CHECK(p4.exit_code == 0);
    CHECK(p4.out == "1 + 2*x*y + 2*x^2*y + 2*x*y^2 + 4*x^2*y^2 + 4*x*y^3 + y^4\n");

    write_file("cli_k3.g6", "Bw\n");
    RunResult k3 = run("compute --input cli_k3.g6");
    CHECK(k3.exit_code == 0);
    CHECK(k3.out == "1 + 3*x^2*y + 3*x*y^2 + y^3\n");

    RunResult latex = run("compute --family empty --n 1 --format latex");
    CHECK(latex.out == "1 + y\n");

    RunResult json = run("compute --family complete --n 2 --format json");
    CHECK(json.out ==
          R"({"n":2,"coefficients":[{"x":0,"y":0,"c":"1"},{"x":1,"y":1,"c":"2"},{"x":0,"y":2,"c":"1"}]})"
          "\n");
}

TEST_CASE("compute methods agree") {
    RunResult formula = run("compute --family wheel --n 7 --method formula");
    RunResult enumerated = run("compute --family wheel --n 7 --method enumerate");
    CHECK(formula.exit_code == 0);
    CHECK(enumerated.exit_code == 0);
    CHECK(formula.out == enumerated.out);
    RunResult threaded = run("compute --family wheel --n 7 --method enumerate --threads 3");
    CHECK(threaded.out == enumerated.out);
}

TEST_CASE("identical invocations are byte identical") {
    const std::string args = "compute --family complete_bipartite --n 3 --m 4 --format json";
    CHECK(run(args).out == run(args).out);
    const std::string verify_args = "verify --catalog n=6 --check factors --seed 99";
    CHECK(run(verify_args).out == run(verify_args).out);
}

TEST_CASE("invariants report") {
    RunResult k4 = run("invariants --family complete --n 4");
    CHECK(k4.exit_code == 0);
    auto doc = nlohmann::json::parse(k4.out);
    CHECK(doc["gamma"] == 1);
    CHECK(doc["differential"] == 2);
    CHECK(doc["gamma_r"] == 2);
    CHECK(doc["kv"] == 3);
    CHECK(doc["m"] == 6);

    RunResult e3 = run("invariants --family empty --n 3");
    CHECK(e3.exit_code == 3);  // vertex connectivity unavailable
    auto edoc = nlohmann::json::parse(e3.out);
    CHECK(edoc["gamma"] == 3);
    CHECK(edoc["isolated"] == 3);
    CHECK(edoc["components"] == 3);
    CHECK(edoc["kv"].is_null());

    write_file("cli_p2p3.json", R"({"n":5,"edges":[[0,1],[2,3],[3,4]]})");
    RunResult mix = run("invariants --input cli_p2p3.json");
    auto mdoc = nlohmann::json::parse(mix.out);
    CHECK(mdoc["components"] == 2);
    CHECK(mdoc["component_orders"] == nlohmann::json({2, 3}));
    CHECK(mdoc["p2_components"] == 1);
    CHECK(mdoc["p3_c3_components"] == 1);
}

TEST_CASE("verify subcommand") {
    RunResult all = run("verify --family cycle --n 6 --check all");
    CHECK(all.exit_code == 0);
    CHECK(all.out.find("PASS factors") != std::string::npos);
    CHECK(all.out.find("FAIL") == std::string::npos);

    RunResult catalog = run("verify --catalog \"n<=4\" --check edge-delete,subdivision");
    CHECK(catalog.exit_code == 0);
    CHECK(catalog.out == "PASS edge-delete\nPASS subdivision\n");

    write_file("cli_k4.json", R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    RunResult eval = run("verify --input cli_k4.json --check eval");
    CHECK(eval.exit_code == 0);
    CHECK(eval.out == "PASS eval\n");

    RunResult unknown = run("verify --family path --n 3 --check nonsense");
    CHECK(unknown.exit_code == 2);
}

TEST_CASE("compare subcommand") {
    write_file("cli_prism.json",
               R"({"n":6,"edges":[[0,1],[1,2],[2,0],[3,4],[4,5],[5,3],[0,3],[1,4],[2,5]]})");
    RunResult equal = run("compare --family complete_bipartite --n 3 --m 3 --input cli_prism.json");
    CHECK(equal.exit_code == 0);
    CHECK(equal.out ==
          "EQUAL 1 + 6*x^3*y + 6*x^3*y^2 + 9*x^4*y^2 + 20*x^3*y^3 + 15*x^2*y^4 + 6*x*y^5 + "
          "y^6\n");

    write_file("cli_w4.json", R"({"n":4,"edges":[[0,1],[0,2],[0,3],[1,2],[2,3],[3,1]]})");
    RunResult w4 = run("compare --family complete --n 4 --input cli_w4.json");
    CHECK(w4.exit_code == 0);

    write_file("cli_k4e.json", R"({"n":4,"edges":[[0,2],[0,3],[1,2],[1,3],[2,3]]})");
    RunResult diff = run("compare --family complete --n 4 --input cli_k4e.json");
    CHECK(diff.exit_code == 1);
    CHECK(diff.out == "DIFFERENT at coefficient (2,1): 2 vs 0\n");

    RunResult missing = run("compare --family complete --n 4");
    CHECK(missing.exit_code == 2);
}

TEST_CASE("error exit codes") {
    write_file("cli_bad.json", "no json here");
    CHECK(run("compute --input cli_bad.json").exit_code == 2);
    CHECK(run("compute --family path --n 28 --method enumerate").exit_code == 3);
    // the cap is a configuration value in both directions
    CHECK(run("compute --family path --n 12 --method enumerate --max-n 10").exit_code == 3);
    CHECK(run("compute --family path --n 12 --method enumerate --max-n 12").exit_code == 0);
    CHECK(run("compute --family prism --method formula").exit_code == 2);
    CHECK(run("compute --family nosuch --n 3").exit_code == 2);
    CHECK(run("compute").exit_code == 2);
    write_file("cli_trunc.g6", "B");
    CHECK(run("compute --input cli_trunc.g6").exit_code == 2);
}
