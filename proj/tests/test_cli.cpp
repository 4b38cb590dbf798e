#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "inmatch/cli.hpp"
#include "inmatch/families.hpp"
#include "inmatch/graph_io.hpp"

using namespace inmatch;

namespace {

struct outcome {
    int code;
    std::string out;
    std::string err;
};

outcome run(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("bound as JSON") {
    auto r = run({"bound", "--g6", "Bw", "--json"});
    CHECK(r.code == exit_ok);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["n"] == 3);
    CHECK(doc["m"] == 3);
    CHECK(doc["matching_size"] == 1);
    CHECK(doc["guarantee_ok"] == true);
    CHECK(doc["conjecture_ratio"].get<double>() == doctest::Approx(17.0 / 3.0));

    CHECK(run({"bound", "--family", "doubleh", "--json"}).out ==
          run({"bound", "--family", "doubleh", "--json"}).out);
    auto a = run({"bound", "--family", "random", "--n", "40", "--seed", "5", "--json"});
    auto b = run({"bound", "--family", "random", "--n", "40", "--seed", "5", "--json"});
    CHECK(a.code == exit_ok);
    CHECK(a.out == b.out);
}

TEST_CASE("bound on a C5^2 component and on input files") {
    auto r = run({"bound", "--family", "c5sq", "--json"});
    CHECK(r.code == exit_ok);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["c5sq_components"] == 1);
    CHECK(doc["conjecture_ratio"].is_null());
    CHECK(doc["trace"][0]["kind"] == "c5sq");

    r = run({"bound", "--file", "-", "--format", "edges", "--json"}, "3 2\n0 1\n1 2\n");
    CHECK(r.code == exit_ok);
    CHECK(nlohmann::json::parse(r.out)["m"] == 2);

    r = run({"bound", "--g6", "-"}, "Bw\n");
    CHECK(r.code == exit_ok);
    CHECK(r.out.find("n=3") != std::string::npos);
}

TEST_CASE("exact and verify") {
    auto r = run({"exact", "--family", "doubleh", "--json"});
    CHECK(r.code == exit_ok);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["matching_size"] == 2);

    CHECK(run({"verify", "--g6", "Bw", "--edges", "0 1"}).code == exit_ok);
    CHECK(run({"verify", "--g6", "Bw", "--edges", "0 1,1 2"}).code == exit_input);
    CHECK(run({"verify", "--g6", "Bw", "--edges", "0 q"}).code == exit_input);
}

TEST_CASE("gen") {
    auto r = run({"gen", "--family", "c5sq"});
    CHECK(r.code == exit_ok);
    CHECK(r.out == encode_graph6(c5_squared()) + "\n");
    r = run({"gen", "--family", "blown:1,1,1,3,3", "--out-format", "edges"});
    CHECK(r.code == exit_ok);
    CHECK(parse_edge_list(r.out) == h_graph());
}

TEST_CASE("scan") {
    std::string lines = encode_graph6(double_h()) + "\n" + encode_graph6(triangle_pendants()) + "\n" +
                        encode_graph6(c5_squared()) + "\n";
    auto r = run({"scan", "--file", "-", "--json"}, lines);
    CHECK(r.code == exit_ok);
    auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["scanned"] == 2);
    CHECK(doc["skipped"] == 1);
    CHECK(doc["min_ratio_exact"] == "1/1");
    CHECK(doc["counterexample"] == false);
}

TEST_CASE("exit codes") {
    CHECK(run({"bound", "--g6", "B"}).code == exit_input);
    CHECK(run({"bound"}).code == exit_input);
    CHECK(run({"bound", "--family", "nosuch"}).code == exit_input);
    CHECK(run({"bound", "--family", "blown:1,0,1,1,1"}).code == exit_input);
    CHECK(run({"nosuch"}).code == exit_input);
    CHECK(run({"exact", "--family", "doubleh", "--node-budget", "1"}).code == exit_budget);
    CHECK(run({"--help"}).code == exit_ok);
    auto r = run({"bound", "--g6", "~~"});
    CHECK(r.code == exit_input);
    CHECK_FALSE(r.err.empty());
}
