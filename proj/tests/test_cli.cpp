#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct CmdResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs the built CLI with shell redirections.
CmdResult run_cli(const std::string& args, const std::string& stdin_data = "") {
  static int counter = 0;
  fs::path dir = fs::temp_directory_path() / "gsp_cli_test";
  fs::create_directories(dir);
  fs::path in = dir / ("in" + std::to_string(counter));
  fs::path out = dir / ("out" + std::to_string(counter));
  fs::path err = dir / ("err" + std::to_string(counter));
  ++counter;
  {
    std::ofstream f(in);
    f << stdin_data;
  }

  std::string cmd = std::string(GSP_CLI_PATH) + " " + args + " < " + in.string() + " > " +
                    out.string() + " 2> " + err.string();
  int rc = std::system(cmd.c_str());
  CmdResult r;
  r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace

TEST_CASE("gen emits the documented edge-list format") {
  auto r = run_cli("gen --family path --n 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "# path n=4\n4\n0 1\n1 2\n2 3\n");

  auto starlike = run_cli("gen --family starlike --parts 3,3,3");
  CHECK(starlike.exit_code == 0);
  CHECK(starlike.out.find("10\n") != std::string::npos);

  auto cube = run_cli("gen --family cube");
  CHECK(cube.exit_code == 0);
  CHECK(cube.out.find("8\n") != std::string::npos);
}

TEST_CASE("compute reports the quoted values on P5 and the cube") {
  auto gen = run_cli("gen --family path --n 5");
  auto r = run_cli("compute --what a,b,gamma", gen.out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["graph"]["n"] == 5);
  CHECK(j["b"]["value"] == "5/12");
  CHECK(j["b"]["exact"] == true);
  CHECK(j["b"]["witness"]["side"] == json::array({0, 1}));
  CHECK(j["a"].get<double>() == doctest::Approx(0.3819660).epsilon(1e-6));
  CHECK(j["gamma"]["value"].get<double>() == doctest::Approx(0.5).epsilon(1e-7));

  auto cube = run_cli("gen --family cube");
  auto rc = run_cli("compute --what b", cube.out);
  REQUIRE(rc.exit_code == 0);
  CHECK(json::parse(rc.out)["b"]["value"] == "1");
}

TEST_CASE("compute --what gamma on P6") {
  auto gen = run_cli("gen --family path --n 6");
  auto r = run_cli("compute --what gamma", gen.out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["gamma"]["value"].get<double>() == doctest::Approx(0.4).epsilon(1e-7));
  CHECK_FALSE(j.contains("b"));
  CHECK_FALSE(j.contains("bounds"));
}

TEST_CASE("output is byte-identical across runs") {
  auto gen1 = run_cli("gen --rgg --n 12 --radius 0.5 --seed 7");
  auto gen2 = run_cli("gen --rgg --n 12 --radius 0.5 --seed 7");
  CHECK(gen1.out == gen2.out);
  CHECK(gen1.out.find("# rgg n=12") != std::string::npos);

  auto c1 = run_cli("compute", gen1.out);
  auto c2 = run_cli("compute", gen1.out);
  REQUIRE(c1.exit_code == 0);
  CHECK(c1.out == c2.out);

  // bounds section is present by default and every record holds
  json j = json::parse(c1.out);
  CHECK(j["bounds"]["all_hold"] == true);
}

TEST_CASE("exit codes") {
  CHECK(run_cli("definitely-not-a-command").exit_code == 1);
  CHECK(run_cli("gen").exit_code == 1);  // neither --family nor --rgg
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("compute --help").exit_code == 0);
  CHECK(run_cli("gen --family pentagon --n 4").exit_code == 2);
  CHECK(run_cli("gen --family cube --n 5").exit_code == 1);
  CHECK(run_cli("compute --what b,nonsense", "2\n0 1\n").exit_code == 1);

  CHECK(run_cli("compute", "2\n0 0\n").exit_code == 2);       // self-loop
  CHECK(run_cli("compute", "4\n0 1\n2 3\n").exit_code == 2);  // disconnected
  CHECK(run_cli("compute", "not a graph").exit_code == 2);

  auto big = run_cli("gen --family cycle --n 30");
  CHECK(run_cli("compute --what b", big.out).exit_code == 3);
  CHECK(run_cli("partition --method l1", big.out).exit_code == 3);
  CHECK(run_cli("bounds", big.out).exit_code == 3);
  auto heur = run_cli("compute --what b --heuristic", big.out);
  CHECK(heur.exit_code == 0);
  json j = json::parse(heur.out);
  CHECK(j["b"]["exact"] == false);
  CHECK(j["b"].contains("upper_bound"));

  // l2 partitioning has no cap; the heuristic bounds report degrades
  CHECK(run_cli("partition --method l2", big.out).exit_code == 0);
  auto hb = run_cli("bounds --heuristic", big.out);
  CHECK(hb.exit_code == 0);
  CHECK(json::parse(hb.out)["b"]["exact"] == false);
}

TEST_CASE("disconnected input names the connectivity assumption") {
  auto r = run_cli("compute", "4\n0 1\n2 3\n");
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("connected") != std::string::npos);
}

TEST_CASE("partition emits DOT with dashed cut edges") {
  auto gen = run_cli("gen --family path --n 4");
  auto r = run_cli("partition --method l1", gen.out);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.substr(0, 9) == "graph G {");
  CHECK(r.out.find("1 -- 2 [style=dashed];") != std::string::npos);
  CHECK(r.out.find("parts=2|2") != std::string::npos);
  CHECK(r.out.find("density=1/4") != std::string::npos);
  CHECK(r.err.find("cut_edges=1") != std::string::npos);

  // the sparsest cut of a star is a pendant edge
  auto star = run_cli("gen --family star --n 5");
  auto rs = run_cli("partition --method l1", star.out);
  REQUIRE(rs.exit_code == 0);
  CHECK(rs.err.find("cut_edges=1") != std::string::npos);
  CHECK(rs.err.find("parts=4|1") != std::string::npos);

  // l2 on a tree: still a syntactically complete DOT document
  auto rt = run_cli("partition --method l2", star.out);
  REQUIRE(rt.exit_code == 0);
  CHECK(rt.out.substr(0, 9) == "graph G {");
  CHECK(rt.out.back() == '\n');
  CHECK(rt.out.find("}\n") != std::string::npos);

  CHECK(run_cli("partition --method l7", gen.out).exit_code == 1);
}

TEST_CASE("compare on K5 reports equal densities") {
  auto gen = run_cli("gen --family complete --n 5");
  auto r = run_cli("compare", gen.out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["l1"]["density"] == "1");
  CHECK(j["l2"]["density"] == "1");
  CHECK(j["density_l1_le_l2"] == true);
}

TEST_CASE("compare on P4: both methods find the balanced split") {
  auto gen = run_cli("gen --family path --n 4");
  auto r = run_cli("compare", gen.out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["l1"]["density"] == "1/4");
  CHECK(j["l2"]["density"] == "1/4");
  CHECK(j["l1"]["part_sizes"] == json::array({2, 2}));
}

TEST_CASE("compare on a connected rgg instance") {
  auto gen = run_cli("gen --rgg --n 15 --radius 0.45 --seed 1");
  auto r = run_cli("compare", gen.out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["density_l1_le_l2"] == true);
  CHECK(j["l1"]["density_float"].get<double>() <=
        j["l2"]["density_float"].get<double>() + 1e-12);
}

TEST_CASE("export-model output carries the documented sections") {
  auto r = run_cli("export-model", "2\n0 1\n");
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("VARIABLES\n") == 0);
  CHECK(r.out.find("MINIMIZE\n") != std::string::npos);
  CHECK(r.out.find("SUBJECT_TO\n") != std::string::npos);
  CHECK(r.out.find("COMPLEMENTARITY\n") != std::string::npos);
  CHECK(r.out.find("BOUNDS\n") != std::string::npos);
  CHECK(r.out.find("+ x1_0 + x1_1 = 1/2\n") != std::string::npos);
}

TEST_CASE("bounds subcommand and --timings") {
  auto gen = run_cli("gen --family star --n 5");
  auto r = run_cli("bounds", gen.out);
  REQUIRE(r.exit_code == 0);
  json j = json::parse(r.out);
  CHECK(j["b"]["value"] == "5/8");
  CHECK(j["all_hold"] == true);
  CHECK(j["xi_min"] == "1/4");
  CHECK(j["records"].size() > 5);

  auto timed = run_cli("compute --what a --timings", gen.out);
  REQUIRE(timed.exit_code == 0);
  json jt = json::parse(timed.out);
  CHECK(jt.contains("timings_ms"));
  CHECK(jt["timings_ms"].contains("a"));

  // default output carries no timings, keeping it reproducible
  auto plain = run_cli("compute --what a", gen.out);
  CHECK_FALSE(json::parse(plain.out).contains("timings_ms"));
}

TEST_CASE("files round-trip through --output") {
  fs::path dir = fs::temp_directory_path() / "gsp_cli_test";
  fs::create_directories(dir);
  fs::path graph_file = dir / "wheel.txt";
  auto gen = run_cli("gen --family wheel --n 6 --output " + graph_file.string());
  CHECK(gen.exit_code == 0);
  auto r = run_cli("compute --what b --input " + graph_file.string());
  REQUIRE(r.exit_code == 0);
  CHECK(json::parse(r.out)["b"]["value"] == "3/2");
}
