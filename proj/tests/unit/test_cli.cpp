#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "bnscope/andnet.hpp"
#include "bnscope/constructions.hpp"
#include "bnscope/expr.hpp"
#include "bnscope/sweep.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using bnscope::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "bnscope_cli_tests";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"analyze"}).code == 2);
  CHECK(call({"analyze", "x.bn", "--no-such-flag"}).code == 2);
  CHECK(call({"analyze", "/nonexistent/file.bn"}).code == 2);
  CHECK(call({"verify", "theorem-b", "--n", "3"}).code == 2);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("parse errors exit with 2 and name the position") {
  const fs::path p = scratch_dir() / "broken.bn";
  write(p, "n = 2\nf0 = x1 &\nf1 = x0\n");
  const auto r = call({"analyze", p.string()});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("construct and analyze the three-dimensional example") {
  const fs::path p = scratch_dir() / "fig1.bn";
  REQUIRE(call({"construct", "fig1", "-o", p.string()}).code == 0);
  CHECK(bnscope::parse_network(slurp(p)) == bnscope::cyclic_example_network());
  const auto r = call({"analyze", p.string(), "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["network"]["n"] == 3);
  CHECK(j["fixed_points"].empty());
  REQUIRE(j["attractors"].size() == 1);
  CHECK(j["attractors"][0]["size"] == 7);
  CHECK(j["attractors"][0]["is_cyclic"] == true);
  CHECK(j["attractors"][0]["is_attractive_cycle"] == false);
  CHECK(j["attractors"][0]["states"][1]["state"] == "100");
  CHECK(j["attractors"][0]["states"][1]["word"] == 1);
  CHECK(j["nonexpansive"] == false);
  CHECK_FALSE(j.contains("timings"));
  CHECK(call({"analyze", p.string(), "--json", "--timings"}).out.find("\"timings\"") != std::string::npos);
}

TEST_CASE("report sections follow the flags") {
  const fs::path p = scratch_dir() / "seed.anet";
  REQUIRE(call({"construct", "thma-seed", "-o", p.string()}).code == 0);
  const auto only_fixed = nlohmann::json::parse(call({"analyze", p.string(), "--json", "--fixed-points"}).out);
  CHECK(only_fixed.contains("fixed_points"));
  CHECK_FALSE(only_fixed.contains("attractors"));
  CHECK_FALSE(only_fixed.contains("nonexpansive"));
  CHECK(only_fixed.contains("global_graph"));
  const auto neg = nlohmann::json::parse(call({"analyze", p.string(), "--json", "--local-cycles", "neg"}).out);
  CHECK(neg["cycles"]["filter"] == "negative");
  CHECK(neg["cycles"]["local"]["positive"].is_null());
  CHECK(neg["cycles"]["nonlocal"]["positive"].is_null());
  CHECK(neg["cycles"]["global"]["negative"] == 4);
  for (const auto& c : neg["cycles"]["local_cycles"]) CHECK(c["sign"] == "-");
  CHECK(call({"analyze", p.string(), "--local-cycles", "sideways"}).code == 2);
}

TEST_CASE("fixed points agree with singleton attractors in every report") {
  const fs::path dir = scratch_dir();
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const fs::path p = dir / ("random" + std::to_string(seed) + ".bn");
    write(p, bnscope::render_network(bnscope::random_network(4, seed)));
    const auto j = nlohmann::json::parse(call({"analyze", p.string(), "--json"}).out);
    std::size_t singletons = 0;
    for (const auto& a : j["attractors"]) singletons += a["is_fixed_point"].get<bool>() ? 1 : 0;
    CHECK(j["fixed_points"].size() == singletons);
  }
}

TEST_CASE("JSON reports do not depend on the worker count") {
  const fs::path p = scratch_dir() / "thma.anet";
  REQUIRE(call({"construct", "thma", "-o", p.string()}).code == 0);
  const auto one = call({"--threads", "1", "analyze", p.string(), "--json"});
  const auto four = call({"--threads", "4", "analyze", p.string(), "--json"});
  const auto again = call({"analyze", p.string(), "--json", "--threads", "3"});
  CHECK(one.out == four.out);
  CHECK(one.out == again.out);
  bnscope::set_thread_count(1);
}

TEST_CASE("expand-delocalize rebuilds the twelve-dimensional and-net") {
  const fs::path dir = scratch_dir();
  REQUIRE(call({"construct", "thma-seed", "-o", (dir / "seed.anet").string()}).code == 0);
  const auto r = call({"expand-delocalize", (dir / "seed.anet").string(), "-o", (dir / "g.anet").string(),
                       "--trace", (dir / "trace.json").string()});
  REQUIRE(r.code == 0);
  CHECK(bnscope::parse_andnet(slurp(dir / "g.anet")) == bnscope::fixed_point_free_andnet());
  CHECK(nlohmann::json::parse(slurp(dir / "trace.json"))["vertices"].size() == 8);
  // The three-dimensional example has positive inputs.
  REQUIRE(call({"construct", "fig1", "-o", (dir / "fig1.anet").string()}).code == 0);
  CHECK(call({"expand-delocalize", (dir / "fig1.anet").string()}).code == 1);
}

TEST_CASE("reduce") {
  const fs::path dir = scratch_dir();
  write(dir / "red.bn", "f0 = !x1\nf1 = x0\nf2 = x0 ^ x1\n");
  const auto r = call({"reduce", (dir / "red.bn").string(), "--var", "2", "-o", (dir / "out.bn").string()});
  REQUIRE(r.code == 0);
  CHECK(bnscope::parse_network(slurp(dir / "out.bn")) == bnscope::parse_network("f0 = !x1\nf1 = x0\n"));
  CHECK(r.out.find("0->0 1->1") != std::string::npos);
  write(dir / "loop.bn", "f0 = x0\n");
  CHECK(call({"reduce", (dir / "loop.bn").string(), "--var", "0"}).code == 1);
  CHECK(call({"reduce", (dir / "loop.bn").string(), "--var", "4"}).code == 2);
}

TEST_CASE("export") {
  const fs::path dir = scratch_dir();
  REQUIRE(call({"construct", "fig1", "-o", (dir / "f.bn").string()}).code == 0);
  const auto async = call({"export", (dir / "f.bn").string(), "--what", "async"});
  REQUIRE(async.code == 0);
  CHECK(async.out.find("\"111\" -> \"011\"") != std::string::npos);
  const auto local = call({"export", (dir / "f.bn").string(), "--what", "local:000", "--dot",
                           (dir / "local.dot").string()});
  REQUIRE(local.code == 0);
  CHECK(slurp(dir / "local.dot").find("digraph local") == 0);
  CHECK(call({"export", (dir / "f.bn").string(), "--what", "local:0"}).code == 2);
  CHECK(call({"export", (dir / "f.bn").string(), "--what", "everything"}).code == 2);
}

TEST_CASE("construct writes each format") {
  const fs::path dir = scratch_dir();
  REQUIRE(call({"construct", "thmb", "--n", "7", "-o", (dir / "b.bn").string()}).code == 0);
  CHECK(bnscope::parse_network(slurp(dir / "b.bn")) == bnscope::padded_cycle_network(7));
  CHECK(call({"construct", "thmb", "--n", "7", "-o", (dir / "b.anet").string()}).code == 1);
  REQUIRE(call({"construct", "antipodal", "--n", "4", "-o", (dir / "p.dot").string()}).code == 0);
  CHECK(slurp(dir / "p.dot").find("digraph") == 0);
  REQUIRE(call({"construct", "antipodal", "--n", "4", "--variant", "padded"}).code == 0);
  CHECK(call({"construct", "thmb", "--n", "6"}).code == 2);
}

TEST_CASE("verify subcommands") {
  const auto a = call({"verify", "theorem-a"});
  CHECK(a.code == 0);
  CHECK(a.out.find("[FAIL]") == std::string::npos);
  CHECK(call({"verify", "prop1", "--samples", "50", "--seed", "3"}).code == 0);
  CHECK(call({"verify", "prop2", "--samples", "50"}).code == 0);
  CHECK(call({"verify", "prop4", "--samples", "50"}).code == 0);
  CHECK(call({"verify", "parity", "--samples", "50"}).code == 0);
  CHECK(call({"verify", "isometries"}).code == 0);
  CHECK(call({"verify", "neighbor-lists", "--n", "7"}).code == 0);
  CHECK(call({"verify", "theorem-b", "--n", "7"}).code == 0);
}

TEST_CASE("analyze --dot writes graph files") {
  const fs::path dir = scratch_dir() / "dots";
  fs::remove_all(dir);
  REQUIRE(call({"construct", "fig1", "-o", (scratch_dir() / "d.bn").string()}).code == 0);
  REQUIRE(call({"analyze", (scratch_dir() / "d.bn").string(), "--dot", dir.string()}).code == 0);
  CHECK(fs::exists(dir / "global.dot"));
  CHECK(fs::exists(dir / "async.dot"));
}
