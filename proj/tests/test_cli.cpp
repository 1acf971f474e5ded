#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "ctw/cli.hpp"
#include "ctw/generators.hpp"
#include "ctw/io.hpp"

using namespace ctw;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = 0;
    std::string out, err;
    nlohmann::json report() const { return nlohmann::json::parse(out); }
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "ctw");
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

struct Workdir {
    fs::path dir = fs::temp_directory_path() / "ctw_cli_test";
    Workdir() { fs::create_directories(dir); }
    ~Workdir() { fs::remove_all(dir); }
    std::string put(const std::string& name, const std::string& content) const {
        std::string p = (dir / name).string();
        write_file(p, content);
        return p;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

}  // namespace

TEST_CASE("cutwidth command") {
    Workdir w;
    std::string p4 = w.put("p4.graph", format_graph_text(path_graph(4)));
    std::string id4 = w.put("id4.layout", "1 2 3 4\n");
    std::string k4 = w.put("k4.graph", format_graph_text(complete_graph(4)));

    Run a = run({"cutwidth", p4, id4});
    CHECK(a.code == exit_code::ok);
    auto rep = a.report();
    CHECK(rep["schema"] == 1);
    CHECK(rep["command"] == "cutwidth");
    CHECK(rep["result"]["width"] == 1);
    CHECK(rep["inputs"]["graph"]["fnv1a64"] == fnv1a_hex(read_file(p4)));

    CHECK(run({"cutwidth", k4, "--exact"}).report()["result"]["width"] == 4);
    CHECK(run({"cutwidth", k4}).report()["result"]["mode"] == "heuristic");

    std::string bad = w.put("bad.graph", "p 3 1\ne 1 q\n");
    Run b = run({"cutwidth", bad});
    CHECK(b.code == exit_code::parse);
    CHECK(b.err.find("line 2") != std::string::npos);

    std::string big = w.put("big.graph", format_graph_text(path_graph(20)));
    CHECK(run({"cutwidth", big, "--exact"}).code == exit_code::resource);
    CHECK(run({"cutwidth", w.path("missing.graph")}).code == exit_code::parse);
    CHECK(run({"frobnicate"}).code == exit_code::parse);
    CHECK(run({"--help"}).code == exit_code::ok);
}

TEST_CASE("planarize command") {
    Workdir w;
    std::string k4 = w.put("k4.graph", format_graph_text(complete_graph(4)));
    std::string id = w.put("id.layout", "1 2 3 4\n");
    std::string prefix = w.path("out");
    Run r = run({"planarize", k4, id, "--problem", "is", "--t", "1", "--verify", "-o", prefix});
    CHECK(r.code == exit_code::ok);
    auto res = r.report()["result"];
    CHECK(res["t_prime"] == 10);
    CHECK(res["crossings_replaced"] == 1);
    CHECK(res["width_out"].get<int>() <= res["width_bound"].get<int>());
    CHECK(res["verification"]["passed"] == true);
    Graph gp = load_graph_file(prefix + ".graph");
    CHECK(gp.vertex_count() == 26);
    load_layout_file(prefix + ".layout").check_for(gp);
    CHECK(nlohmann::json::parse(read_file(prefix + ".json"))["result"]["t_prime"] == 10);

    std::string id3 = w.put("id3.layout", "1 2 3\n");
    CHECK(run({"planarize", k4, id3, "--t", "1", "-o", prefix}).code == exit_code::precondition);

    std::string k5 = w.put("k5.graph", format_graph_text(complete_graph(5)));
    std::string id5 = w.put("id5.layout", "1 2 3 4 5\n");
    auto ds = run({"planarize", k5, id5, "--problem", "ds", "--t", "1", "-o", prefix}).report()["result"];
    CHECK(ds["crossings_replaced"] == 5);
    CHECK(ds["t_prime"] == 241);
}

TEST_CASE("solve command") {
    Workdir w;
    std::string c5 = w.put("c5.graph", format_graph_text(cycle_graph(5)));
    CHECK(run({"solve", c5, "--problem", "ds", "--algo", "brute"}).report()["result"]["optimum"] == 2);
    auto dp = run({"solve", c5, "--problem", "ds", "--algo", "dp"}).report()["result"];
    CHECK(dp["optimum"] == 2);
    CHECK(dp.contains("max_live_states"));
    std::string big = w.put("big.graph", format_graph_text(path_graph(30)));
    CHECK(run({"solve", big, "--problem", "is", "--algo", "brute"}).code == exit_code::resource);
    std::string k = w.put("k.graph", format_graph_text(complete_graph(14)));
    CHECK(run({"solve", k, "--algo", "dp", "--memory-mib", "0.001"}).code == exit_code::resource);
}

TEST_CASE("certify and gadget commands") {
    Workdir w;
    Run is = run({"certify", "--builtin", "is", "--hosts", "4"});
    CHECK(is.code == exit_code::ok);
    CHECK(is.report()["result"]["shift"] == 9);
    CHECK(is.report()["seed"] == 0);
    CHECK(is.err.find("C1: PASS") != std::string::npos);

    std::string path = w.path("is.json");
    CHECK(run({"gadget", "--problem", "is", "-o", path}).code == exit_code::ok);
    CHECK(run({"certify", path, "--hosts", "2"}).code == exit_code::ok);

    nlohmann::json edgeless = {{"problem", "is"},
                               {"graph", {{"n", 4}, {"edges", nlohmann::json::array()}}},
                               {"terminals", {1, 2, 3, 4}}, {"shift", 4}};
    std::string e = w.put("edgeless.json", edgeless.dump());
    Run bad = run({"certify", e, "--hosts", "0"});
    CHECK(bad.code == exit_code::verification);
    CHECK(bad.err.find("C1: FAIL") != std::string::npos);
    CHECK(bad.report()["result"]["verdict"] == "FAIL");

    CHECK(run({"certify"}).code == exit_code::parse);
}

TEST_CASE("certify is deterministic for a fixed seed") {
    auto a = run({"certify", "--builtin", "is", "--hosts", "3", "--seed", "5"}).report()["result"];
    auto b = run({"certify", "--builtin", "is", "--hosts", "3", "--seed", "5"}).report()["result"];
    CHECK(a == b);
}

TEST_CASE("export command") {
    Workdir w;
    std::string p3 = w.put("p3.graph", format_graph_text(path_graph(3)));
    Run svg = run({"export", p3, "--format", "svg"});
    CHECK(svg.code == exit_code::ok);
    CHECK(svg.out.rfind("<svg", 0) == 0);
    CHECK(svg.out == run({"export", p3, "--format", "svg"}).out);
    Run dot = run({"export", p3, "--format", "dot"});
    CHECK(parse_dot(dot.out) == path_graph(3));
    std::string file = w.path("k4.svg");
    std::string k4 = w.put("k4.graph", format_graph_text(complete_graph(4)));
    CHECK(run({"export", k4, "--format", "svg", "-o", file}).code == exit_code::ok);
    CHECK(read_file(file).find("class=\"crossing\"") != std::string::npos);
}
