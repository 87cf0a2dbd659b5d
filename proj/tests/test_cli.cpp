#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eispart/cli.hpp"
#include "eispart/serialize.hpp"

using eispart::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = eispart::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expand prints a combination expansion") {
  CliResult r = run_cli({"expand", "--level", "1", "--k", "2", "--terms", "4"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  json j = json::parse(r.out);
  CHECK(j["precision"] == 4);
  CHECK(j["coeffs"] == json::array({"1", "240", "2160", "6720"}));

  // E_8(z) - E_8(2z) at level 2.
  CliResult d = run_cli({"expand", "--level", "2", "--k", "4", "--terms", "3",
                         "--coeffs", R"({"1": "1", "2": "-1"})"});
  REQUIRE(d.code == 0);
  json jd = json::parse(d.out);
  CHECK(jd["coeffs"] == json::array({"0", "480", "61440"}));
}

TEST_CASE("project recovers a combination from constants") {
  CliResult r = run_cli({"project", "--level", "6", "--k", "2", "--constants",
                         R"({"1": "1", "2": "1", "3": "1", "6": "1"})"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["level"] == 6);
  CHECK(j["k"] == 2);
  CHECK(j["coeffs"]["1"] == "1");
  CHECK(j["coeffs"]["2"] == "0");
  CHECK(j["coeffs"]["3"] == "0");
  CHECK(j["coeffs"]["6"] == "0");
}

TEST_CASE("json arguments can come from files") {
  const char* path = "cli_test_constants.json";
  {
    std::ofstream f(path);
    f << R"({"1": "1", "2": "1", "3": "1", "6": "1"})";
  }
  CliResult r = run_cli({"project", "--level", "6", "--k", "2", "--constants",
                         std::string("@") + path});
  std::remove(path);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["coeffs"]["1"] == "1");

  CliResult missing = run_cli({"project", "--level", "6", "--k", "2",
                               "--constants", "@no_such_file.json"});
  CHECK(missing.code == 1);
  CHECK(contains(missing.err, "cannot read file"));
}

TEST_CASE("output lands in a file with --out") {
  const char* path = "cli_test_expand.json";
  CliResult r = run_cli({"expand", "--level", "1", "--k", "2", "--terms", "2",
                         "--out", path});
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  REQUIRE(f.good());
  json j = json::parse(f);
  CHECK(j["coeffs"] == json::array({"1", "240"}));
  f.close();
  std::remove(path);
}

TEST_CASE("conv-table renders csv and json") {
  CliResult csv = run_cli({"conv-table", "--a", "1", "--b", "1", "--l", "2",
                           "--m", "2", "--nmax", "3"});
  REQUIRE(csv.code == 0);
  CHECK(csv.out ==
        "n,brute_force,formula,cusp_coefficient,match\n"
        "1,0,0,0,true\n"
        "2,1,1,0,true\n"
        "3,18,18,0,true\n");

  CliResult js = run_cli({"conv-table", "--a", "1", "--b", "2", "--l", "2",
                          "--m", "2", "--nmax", "2", "--level", "6",
                          "--format", "json"});
  REQUIRE(js.code == 0);
  json j = json::parse(js.out);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["match"] == true);
  CHECK(j[1]["match"] == true);
}

TEST_CASE("quad-table renders representation counts") {
  CliResult r = run_cli({"quad-table", "--level", "1", "--exponents",
                         R"({"1": 1})", "--nmax", "5", "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(contains(r.out, "n,brute_force,formula,cusp_coefficient,match\n"
                        "1,16,16,0,true\n"));
  CHECK(contains(r.out, "5,2016,2016,0,true"));
}

TEST_CASE("eta-orders reports cusp orders") {
  CliResult r = run_cli({"eta-orders", "--level", "2", "--exponents",
                         R"({"1": 16, "2": -8})"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["orders"]["1"] == "1");
  CHECK(j["orders"]["2"] == "0");
  CHECK(j["total"] == "1");
}

TEST_CASE("basis prints triangular basis elements") {
  CliResult all = run_cli({"basis", "--k", "2", "--terms", "6"});
  REQUIRE(all.code == 0);
  json j = json::parse(all.out);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 1);
  CHECK(j[0]["i"] == 1);
  CHECK(j[0]["series"]["coeffs"] ==
        json::array({"0", "1", "-2", "-3", "4", "6"}));

  CliResult one = run_cli({"basis", "--k", "3", "--i", "2", "--terms", "4"});
  REQUIRE(one.code == 0);
  json js = json::parse(one.out);
  CHECK(js["precision"] == 4);
  CHECK(js["coeffs"][0] == "0");
  CHECK(js["coeffs"][1] == "0");
  CHECK(js["coeffs"][2] == "1");
}

TEST_CASE("domain errors exit with code 1 and a diagnostic") {
  CliResult bad_level = run_cli({"expand", "--level", "12", "--k", "2"});
  CHECK(bad_level.code == 1);
  CHECK(contains(bad_level.err, "not square-free"));

  CliResult bad_weight = run_cli({"expand", "--level", "1", "--k", "1"});
  CHECK(bad_weight.code == 1);
  CHECK(contains(bad_weight.err, "weight 2k"));

  CliResult bad_index = run_cli({"basis", "--k", "2", "--i", "5"});
  CHECK(bad_index.code == 1);
  CHECK(contains(bad_index.err, "basis index"));

  CliResult even = run_cli({"quad-table", "--level", "2", "--exponents",
                            R"({"1": 1})"});
  CHECK(even.code == 1);
  CHECK(contains(even.err, "must be odd"));

  CliResult low = run_cli({"conv-table", "--a", "1", "--b", "1", "--l", "1",
                           "--m", "2"});
  CHECK(low.code == 1);
  CHECK(contains(low.err, "l >= 2"));
}

TEST_CASE("parse errors are CLI11's business") {
  CHECK(run_cli({"expand", "--bogus"}).code != 0);
  CHECK(run_cli({}).code != 0);                       // subcommand required
  CHECK(run_cli({"project", "--level", "6", "--k", "2"}).code != 0);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("verify subcommand") {
  CliResult list = run_cli({"verify", "--list"});
  REQUIRE(list.code == 0);
  CHECK(contains(list.out, "orthogonality\n"));
  CHECK(contains(list.out, "sign-identity\n"));
  long lines = 0;
  for (char ch : list.out)
    if (ch == '\n') ++lines;
  CHECK(lines == 12);

  CliResult one = run_cli({"verify", "--suite", "sign-identity"});
  REQUIRE(one.code == 0);
  CHECK(contains(one.out, "[PASS] sign-identity"));
  CHECK(contains(one.out, "1/1 checks passed"));

  CliResult unknown = run_cli({"verify", "--suite", "nope"});
  CHECK(unknown.code == 1);
  CHECK(contains(unknown.err, "unknown suite 'nope'"));
}

}  // TEST_SUITE
