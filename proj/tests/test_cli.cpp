#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "munarini/cli.hpp"
#include "munarini/error.hpp"
#include "munarini/io.hpp"
#include "munarini/verify.hpp"

using namespace munarini;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t lines(const std::string& s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "munarini-cli-test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("gen") {
  const auto r = run({"gen", "--family", "munarini", "-n", "2", "-k", "3",
                      "--format", "json"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["vertices"].size() == 10);
  CHECK(doc["edges"].size() == 13);

  const auto star = run({"gen", "--family", "star", "-k", "4", "--format", "edgelist"});
  CHECK(star.code == 0);
  CHECK(lines(star.out) == 3);

  const auto bad = run({"gen", "--family", "genpell", "-n", "1", "-k", "1"});
  CHECK(bad.code == 2);
  CHECK_FALSE(bad.err.empty());
  CHECK(run({"gen", "--family", "nope"}).code == 2);
  CHECK(run({"gen", "-n", "2", "-k", "3", "--format", "csv"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("output is deterministic") {
  for (const char* fmt : {"json", "dot", "edgelist", "text"}) {
    const std::vector<std::string> args{"gen", "--family", "genpell", "-n", "3",
                                        "-k", "3", "--format", fmt};
    CHECK(run(args).out == run(args).out);
  }
  const std::vector<std::string> census{"census", "dcubes", "-n", "4", "-k", "3"};
  CHECK(run(census).out == run(census).out);
}

TEST_CASE("dot output") {
  const auto r = run({"gen", "-n", "1", "-k", "3", "--format", "dot"});
  CHECK(r.out ==
        "graph \"munarini_n1_k3\" {\n  \"0\";\n  \"1\";\n  \"2\";\n"
        "  \"0\" -- \"1\";\n  \"0\" -- \"2\";\n}\n");
}

TEST_CASE("poly") {
  CHECK(run({"poly", "weight", "-n", "2", "-k", "3"}).out == "1 + 5*x + 4*x^2\n");
  CHECK(run({"poly", "cube", "-n", "2", "-k", "3"}).out == "10 + 13*x + 4*x^2\n");
  CHECK(run({"poly", "qnum", "-k", "2", "-N", "4"}).out == "1 3 11 39 139\n");
  CHECK(run({"poly", "qnum", "-n", "2", "-k", "2"}).out == "11\n");
  CHECK(run({"poly", "maxcube", "-n", "1", "-k", "5"}).out == "4*x\n");
  CHECK(run({"poly", "maxcube", "-n", "3", "-k", "1"}).code == 2);
  const auto table = run({"poly", "weight", "-k", "2", "-N", "3"});
  CHECK(lines(table.out) == 4);
  CHECK(run({"poly", "weight", "-n", "2", "-k", "3", "--format", "csv"}).out ==
        "2,3,0,1\n2,3,1,5\n2,3,2,4\n");
  CHECK(run({"poly", "dcube", "-n", "1", "-k", "3", "--format", "csv"}).out ==
        "1,3,0,0,1\n1,3,0,1,2\n1,3,1,0,2\n");
  CHECK(run({"poly", "bogus"}).code == 2);
}

TEST_CASE("census") {
  CHECK(run({"census", "cubes", "--family", "munarini", "-n", "2", "-k", "3"}).out ==
        "0,10\n1,13\n2,4\n");
  CHECK(run({"census", "maxcubes", "--family", "munarini", "-n", "3", "-k", "2"}).out ==
        "2,2\n3,1\n");
  CHECK(run({"census", "dcubes", "--family", "munarini", "-n", "0", "-k", "1"}).out ==
        "0,0,1\n");
  // Generalized Pell graphs share the cube census.
  CHECK(run({"census", "cubes", "--family", "genpell", "-n", "2", "-k", "3"}).out ==
        "0,10\n1,13\n2,4\n");
  const auto j = run({"census", "cubes", "-n", "2", "-k", "3", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)[2]["count"] == 4);
}

TEST_CASE("verify") {
  const auto all = run({"verify", "all", "--n-max", "5", "--k-max", "3", "--quiet"});
  CHECK(all.code == 0);
  CHECK(all.out.find("FAIL") == std::string::npos);

  const auto daisy = run({"verify", "daisy", "--family", "genpell", "-n", "2", "-k", "3"});
  CHECK(daisy.code == 1);
  CHECK(daisy.out.find("FAIL") != std::string::npos);
  CHECK(daisy.out.find("no lower neighbour") != std::string::npos);

  CHECK(run({"verify", "daisy", "--family", "pell", "-n", "4"}).code == 0);
  CHECK(run({"verify", "identities", "--n-max", "0", "--k-max", "1"}).code == 0);
  CHECK(run({"verify", "median", "--family", "munarini", "-n", "3", "-k", "3"}).code == 0);

  const auto j = run({"verify", "isometry", "--n-max", "2", "--k-max", "2",
                      "--format", "json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["failures"] == 0);
  CHECK(!doc["checks"].empty());
}

TEST_CASE("verify all touches every library operation") {
  const auto report = verify_bounds(Suite::All, 5, 3);
  CHECK(report.ok());
  for (const auto& op : library_operations()) {
    INFO(op);
    CHECK(report.exercised.contains(op));
  }
}

TEST_CASE("vertex cap") {
  CHECK(run({"gen", "-n", "12", "-k", "4"}).code == 2);
  CHECK(run({"--max-vertices", "5", "gen", "-n", "3", "-k", "3"}).code == 2);
  CHECK(run({"--max-vertices", "50", "gen", "-n", "3", "-k", "3"}).code == 0);
  setenv("MUNARINI_MAX_VERTICES", "20", 1);
  CHECK(run({"gen", "-n", "3", "-k", "3"}).code == 2);
  CHECK(run({"--max-vertices", "40", "gen", "-n", "3", "-k", "3"}).code == 0);
  unsetenv("MUNARINI_MAX_VERTICES");
  CHECK(run({"verify", "all", "--n-max", "12", "--k-max", "4"}).code == 2);
}

TEST_CASE("JSON round trip") {
  for (auto params : {FamilyParams{Family::Munarini, 3, 3},
                      FamilyParams{Family::GeneralizedPell, 3, 2},
                      FamilyParams{Family::FibonacciCube, 4, 1},
                      FamilyParams{Family::Hypercube, 3, 1},
                      FamilyParams{Family::Star, 0, 5},
                      FamilyParams{Family::Munarini, 2, 12}}) {
    const auto g = build(params);
    CHECK(graph_from_json(to_json(g)) == g);
  }
  CHECK_THROWS_AS(graph_from_json("{"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"family":"munarini","n":1,"k":2,)"
                                  R"("vertices":["0","1"],"edges":[[0,5]]})"),
                  InputError);

  const auto path = scratch("g.json");
  CHECK(run({"gen", "-n", "3", "-k", "2", "--format", "json", "-o", path.string()}).code == 0);
  std::ifstream in(path);
  std::stringstream saved;
  saved << in.rdbuf();
  const auto again = run({"export", "graph", "--input", path.string()});
  CHECK(again.code == 0);
  CHECK(again.out == saved.str());
  const auto dot = run({"export", "graph", "--input", path.string(), "--format", "dot"});
  CHECK(dot.out == run({"gen", "-n", "3", "-k", "2", "--format", "dot"}).out);
}

TEST_CASE("export cubes") {
  const auto r = run({"export", "maxcubes", "-n", "2", "-k", "2"});
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["bottom"] == "00");
  CHECK(doc[0]["top"] == "22");
  const auto all = nlohmann::json::parse(run({"export", "cubes", "-n", "2", "-k", "3"}).out);
  CHECK(all.size() == 27);
  CHECK(run({"export", "cubes", "-n", "2", "-k", "3", "--format", "dot"}).code == 2);
}

TEST_CASE("config file") {
  const auto path = scratch("config.json");
  {
    std::ofstream f(path);
    f << R"({"command": "poly", "which": "weight", "n": 2, "k": 3})";
  }
  CHECK(run({"--config", path.string()}).out == "1 + 5*x + 4*x^2\n");
  // Flags on the command line override the file.
  CHECK(run({"--config", path.string(), "-n", "1"}).out == "1 + 2*x\n");
  {
    std::ofstream f(path);
    f << R"({"command": "gen", "order": 3})";
  }
  CHECK(run({"--config", path.string()}).code == 2);
  CHECK(run({"--config", "/nonexistent/config.json"}).code == 2);
}

TEST_CASE("census csv helpers") {
  CHECK(census_csv(IntPoly(std::vector<Integer>{0, 0, 2, 1})) == "2,2\n3,1\n");
  DistanceCensus d{{{0, 0}, 1}, {{1, 0}, 2}};
  CHECK(census_csv(d) == "0,0,1\n1,0,2\n");
}
