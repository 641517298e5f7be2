#include "hermspec/cli.hpp"
#include "hermspec/constructions.hpp"
#include "hermspec/graph_io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hermspec;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "hermspec-cli-test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("spectrum") {
    const Run t = cli({"spectrum", "directed-triangle", "--k", "6", "--json"});
    REQUIRE(t.code == 0);
    const json j = json::parse(t.out);
    REQUIRE(j["clusters"].size() == 2);
    CHECK(j["clusters"][0][0].get<double>() == doctest::Approx(1));
    CHECK(j["clusters"][0][1] == 2);
    CHECK(j["clusters"][1][0].get<double>() == doctest::Approx(-2));
    CHECK(j["clusters"][1][1] == 1);

    const json k33 = json::parse(cli({"spectrum", "oriented-K33", "--json"}).out);
    CHECK(k33["clusters"][0][0].get<double>() == doctest::Approx(std::sqrt(3.0)));
    CHECK(k33["clusters"][0][1] == 3);
    const json c4 = json::parse(cli({"spectrum", "mixed-C4", "--json"}).out);
    CHECK(c4["clusters"][1][0].get<double>() == doctest::Approx(-std::sqrt(2.0)));
    CHECK(c4["clusters"][1][1] == 2);

    const Run plain = cli({"spectrum", "directed-edge"});
    CHECK(plain.out == "eigenvalues: 1 -1\nclusters: 1 (x1), -1 (x1)\n");
}

TEST_CASE("certify") {
    const Run k55 = cli({"certify", "oriented-K55-M", "--k", "6", "--json"});
    REQUIRE(k55.code == 0);
    const json j = json::parse(k55.out);
    CHECK(j["verdict"] == "yes");
    CHECK(j["pair"][0] == json{{"int", 2}});
    CHECK(j["pair"][1] == json{{"int", -2}});

    CHECK(cli({"certify", "oriented-K33"}).out.rfind("yes: r = sqrt(3)", 0) == 0);
    CHECK(cli({"certify", "regular-tournament-5"}).code == 0);
    CHECK(cli({"certify", "regular-tournament-5", "--expect-yes"}).code == 1);
    CHECK(cli({"certify", "directed-triangle", "--expect-yes"}).code == 0);
    CHECK(json::parse(cli({"certify", "directed-edge", "--k", "10", "--json"}).out)["method"] == "float-cluster");
    CHECK(json::parse(cli({"certify", "directed-triangle", "--float", "--json"}).out)["method"] == "float-cluster");
}

TEST_CASE("certify and spectrum agree") {
    for (const char* name : {"directed-edge", "directed-triangle", "oriented-K33", "mixed-C4", "regular-tournament-5", "cube"}) {
        for (const char* k : {"3", "4", "6", "10"}) {
            const json c = json::parse(cli({"certify", name, "--k", k, "--json"}).out);
            const json s = json::parse(cli({"spectrum", name, "--k", k, "--json"}).out);
            if (c["verdict"] == "yes") CHECK_MESSAGE(s["clusters"].size() == 2, name << " k=" << k);
        }
    }
}

TEST_CASE("construct and certify a Paley tournament") {
    const auto path = scratch("t7.txt");
    REQUIRE(cli({"construct", "tournament", "7", "-o", path.string()}).code == 0);
    const Run r = cli({"certify", path.string(), "--three-ev", "--expect-yes"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("yes", 0) == 0);
    CHECK(cli({"certify", "regular-tournament-5", "--three-ev", "--expect-yes"}).code == 1);
    CHECK(cli({"certify", "mixed-C4", "--three-ev"}).code == 2);

    const Run h = cli({"construct", "skew-hadamard", path.string()});
    REQUIRE(h.code == 0);
    CHECK(skew_hadamard_from_text(h.out).order() == 8);
    CHECK(cli({"construct", "paley", "7"}).out == to_sign_text(paley_skew_hadamard(7)));
    CHECK(cli({"construct", "paley", "5"}).code == 2);
    CHECK(cli({"construct", "paley", "seven"}).code == 2);
    CHECK(cli({"construct", "directed-triangle"}).out == "&BP_\n");
    CHECK(json::parse(cli({"construct", "mixed-C4", "--json"}).out)["text"] == to_mixed_text(named_graph("mixed-C4")));
}

TEST_CASE("construct hypercubes and convert") {
    const auto signed_path = scratch("q3-signed.txt");
    REQUIRE(cli({"construct", "hypercube", "3", "--signed", "-o", signed_path.string()}).code == 0);
    const Run oriented = cli({"convert", signed_path.string()});
    REQUIRE(oriented.code == 0);
    CHECK(oriented.out == cli({"construct", "hypercube", "3"}).out);
    const auto oriented_path = scratch("q3-oriented.txt");
    std::ofstream(oriented_path) << oriented.out;
    CHECK(cli({"convert", oriented_path.string()}).out == slurp(signed_path));
    CHECK(cli({"certify", oriented_path.string(), "--k", "4", "--expect-yes"}).code == 0);
    CHECK(cli({"convert", "directed-triangle"}).code == 2);
    CHECK(cli({"convert", "mixed-C4"}).code == 2);
}

TEST_CASE("search") {
    const json k6 = json::parse(cli({"search", "K6", "--mode", "oriented", "--k", "4", "--json"}).out);
    CHECK(k6["space_size"] == 32768);
    CHECK(k6["hit_count"] == 0);

    const json c4 = json::parse(cli({"search", "C4", "--mode", "mixed", "--json", "--threads", "2"}).out);
    CHECK(c4["hit_count"] == 8);
    CHECK(c4["class_count"] == 1);

    const json k2 = json::parse(cli({"search", "K2", "--mode", "signed", "--json"}).out);
    CHECK(k2["hit_count"] == 2);

    const json k3 = json::parse(cli({"search", "K3", "--mode", "mixed", "--filter", "complete-spectrum", "--json"}).out);
    CHECK(k3["hits"][0] == to_mixed_text(named_graph("complete-K3")));

    const auto dir = scratch("search-export");
    std::filesystem::remove_all(dir);
    REQUIRE(cli({"search", "K3,3", "--export", dir.string()}).code == 0);
    CHECK(read_graphs(slurp(dir / "hits.txt")).size() == 12);
    CHECK(read_graphs(slurp(dir / "classes.txt")).size() == 1);
    CHECK(json::parse(slurp(dir / "report.json"))["class_count"] == 1);

    // A graph file is accepted as the underlying graph.
    const auto file = scratch("k55.txt");
    std::ofstream(file) << encode(named_graph("oriented-K55-M"));
    CHECK(json::parse(cli({"search", file.string(), "--json", "--threads", "0"}).out)["class_count"] == 1);

    CHECK(cli({"search", "K8"}).code == 2);
    CHECK(cli({"search", "K4", "--mode", "sideways"}).code == 2);
    CHECK(cli({"search", "K4", "--mode", "signed", "--filter", "complete-spectrum"}).code == 2);
}

TEST_CASE("thread count from the environment") {
    ::setenv("HERMSPEC_THREADS", "2", 1);
    CHECK(json::parse(cli({"search", "K3,3", "--json"}).out)["class_count"] == 1);
    ::setenv("HERMSPEC_THREADS", "many", 1);
    CHECK(cli({"search", "K3,3"}).code == 2);
    ::unsetenv("HERMSPEC_THREADS");
}

TEST_CASE("desk check") {
    const json j = json::parse(cli({"desk-check", "--k", "10", "--n-max", "4", "--json"}).out);
    CHECK(j["class_count"] == 1);
    CHECK(cli({"desk-check", "--k", "6"}).code == 2);
    CHECK(cli({"desk-check", "--k", "6", "--n-max", "3", "--allow-any-k"}).code == 0);
}

TEST_CASE("verify-paper") {
    const Run r = cli({"verify-paper", "--scale", "quick", "--only", "1", "3", "--json"});
    CHECK(r.code == 0);
    const json j = json::parse(r.out);
    CHECK(j["passed"] == true);
    CHECK(j["checks"].size() == 2);
    const Run plain = cli({"verify-paper", "--scale", "quick", "--only", "2"});
    CHECK(plain.code == 0);
    CHECK(plain.out.find("[skipped] 2b") != std::string::npos);
    CHECK(cli({"verify-paper", "--scale", "huge"}).code == 2);
}

TEST_CASE("usage and input errors") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({"spectrum"}).code == 2);
    CHECK(cli({"spectrum", "no-such-graph"}).code == 2);
    CHECK(cli({"spectrum", "directed-edge", "--k", "2"}).code == 2);
    const auto bad = scratch("bad.txt");
    std::ofstream(bad) << "mixed 2\n0 > 5\n";
    const Run r = cli({"spectrum", bad.string()});
    CHECK(r.code == 2);
    CHECK_FALSE(r.err.empty());
    CHECK(cli({"certify", "directed-edge", "--k", "4", "--three-ev"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"search", "--help"}).code == 0);
}

TEST_CASE("executable exit codes") {
    const char* tool = std::getenv("HERMSPEC_TOOL");
    if (tool == nullptr) return;
    auto status = [&](const std::string& args) {
        const int s = std::system((std::string(tool) + " " + args + " > /dev/null 2>&1").c_str());
        return WIFEXITED(s) ? WEXITSTATUS(s) : -1;
    };
    CHECK(status("certify directed-triangle --expect-yes") == 0);
    CHECK(status("certify regular-tournament-5 --expect-yes") == 1);
    CHECK(status("spectrum") == 2);
    CHECK(status("verify-paper --scale quick --only 1") == 0);
}
