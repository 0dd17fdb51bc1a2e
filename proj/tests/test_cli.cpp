#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "frieze/cli.hpp"
#include "frieze/io.hpp"
#include "testutil.hpp"

using namespace frieze;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv = {"friezekit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

// temporarily replaces std::cin for commands reading "-"
struct CinFeed {
  std::istringstream in;
  std::streambuf* saved;
  explicit CinFeed(std::string s) : in(std::move(s)) { saved = std::cin.rdbuf(in.rdbuf()); }
  ~CinFeed() { std::cin.rdbuf(saved); }
};

SLFrieze all_twos(int k, int w) {
  SLFrieze f;
  f.k = k;
  f.w = w;
  f.band.assign(k + w + 2, std::vector<Rat>(w, Rat(2)));
  return f;
}

}  // namespace

TEST_CASE("exit codes separate usage, domain, and success") {
  CHECK(run_cli({"coxeter", "build", "--quiddity", "1,2,2,1,3"}).code == 0);
  // unknown subcommand and unknown flag are usage errors
  auto r1 = run_cli({"hexagons"});
  CHECK(r1.code == 1);
  CHECK(r1.err.substr(0, 12) == "usage error:");
  CHECK(run_cli({"polygon", "enumerate", "--n", "6", "--frobnicate"}).code == 1);
  // missing required option
  CHECK(run_cli({"slk", "census", "--k", "2", "--w", "2"}).code == 1);
  // a structurally fine request that fails in the domain
  auto r2 = run_cli({"polygon", "frieze", "--quiddity", "2,2,2"});
  CHECK(r2.code == 2);
  CHECK(r2.err.substr(0, 13) == "NotAQuiddity:");
  CHECK(r2.out.empty());
}

TEST_CASE("help goes to stdout and succeeds") {
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("coxeter") != std::string::npos);
  CHECK(r.out.find("slk") != std::string::npos);
  CHECK(r.err.empty());
}

TEST_CASE("build then validate roundtrip through JSON") {
  auto built = run_cli({"coxeter", "build", "--quiddity", "4,1,2,2,2,1"});
  REQUIRE(built.code == 0);
  auto doc = Json::parse(built.out);
  CHECK(doc["kind"] == "coxeter");

  CinFeed feed(built.out);
  auto rep = run_cli({"coxeter", "validate", "-f", "-"});
  CHECK(rep.code == 0);
  auto j = Json::parse(rep.out);
  CHECK(j["unimodular"] == true);
  CHECK(j["tame"] == true);
  CHECK(j["glide"] == true);
  CHECK(j["positive_integral"] == true);
}

TEST_CASE("build refuses a first row that does not close up") {
  auto r = run_cli({"coxeter", "build", "--quiddity", "2,2,2,2"});
  CHECK(r.code == 2);
  CHECK(r.err.substr(0, 9) == "NotClosed");
}

TEST_CASE("validate rejects a tampered band with exit 2") {
  Json doc{{"kind", "coxeter"},
           {"width", 1},
           {"order", 4},
           {"entries", Json::array({Json::array({"1", "2", "1", "3"})})}};
  CinFeed feed(doc.dump());
  auto rep = run_cli({"coxeter", "validate", "-f", "-"});
  CHECK(rep.code == 2);
  CHECK(Json::parse(rep.out)["unimodular"] == false);
}

TEST_CASE("malformed JSON input is a parse error, not a crash") {
  CinFeed feed("{ this is not json");
  auto r = run_cli({"coxeter", "validate", "-f", "-"});
  CHECK(r.code == 1);
  CHECK(r.err.substr(0, 11) == "ParseError:");
}

TEST_CASE("count-only output is a bare number") {
  auto r = run_cli({"polygon", "enumerate", "--n", "7", "--count-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "42\n");
  auto c = run_cli({"slk", "census", "--k", "2", "--w", "2", "--bound", "6", "--count-only"});
  CHECK(c.code == 0);
  CHECK(c.out == "51\n");
}

TEST_CASE("pretty format staggers rows by half a cell") {
  auto r = run_cli({"coxeter", "build", "--quiddity", "1,2,2,1,3", "--format", "pretty"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "1   1   1   1   1\n"
        "  1   2   2   1   3\n"
        "2   1   3   1   2\n"
        "  1   1   1   1   1\n");
}

TEST_CASE("csv format emits one comma-separated line per row") {
  auto r = run_cli({"polygon", "bci", "--n", "5", "--diagonals", "1-3,3-5", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "0,1,2,1,1\n"
        "1,0,1,1,2\n"
        "2,1,0,1,3\n"
        "1,1,1,0,1\n"
        "1,2,3,1,0\n");
}

TEST_CASE("repeated runs are byte-identical") {
  std::vector<std::string> cmd = {"quiver", "enumerate", "--type", "A3", "--bound", "13"};
  auto a = run_cli(cmd), b = run_cli(cmd);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto j = Json::parse(a.out);
  CHECK(j["count"] == 14);
  CHECK(j["note"].get<std::string>().find("complete relative to bound 13") != std::string::npos);
}

TEST_CASE("quiver frieze reports the period and that many slices") {
  auto r = run_cli({"quiver", "frieze", "--type", "D4", "--slice", "1,2,3,4", "--rule",
                    "multiplicative"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["period"] == 4);
  CHECK(j["slices"].size() == 4);
  CHECK(j["slices"][0] == Json::array({"1", "2", "3", "4"}));
}

TEST_CASE("mutation flips arrows and applies the exchange relation") {
  auto r = run_cli({"quiver", "mutate", "--arrows", "1-2", "--values", "2,5", "--at", "1"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["values"] == Json::array({"3", "5"}));
  CHECK(j["quiver"]["arrows"] == Json::array({Json::array({2, 1})}));
}

TEST_CASE("slk pipeline: validate, equation, and gale through stdin") {
  std::string doc = to_json(all_twos(2, 2)).dump();
  {
    CinFeed feed(doc);
    auto r = run_cli({"slk", "validate", "-f", "-"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["unit_minors"] == true);
  }
  {
    CinFeed feed(doc);
    auto r = run_cli({"slk", "equation", "-f", "-"});
    CHECK(r.code == 0);
    auto j = Json::parse(r.out);
    CHECK(j["k"] == 2);
    CHECK(j["n"] == 6);
  }
  {
    CinFeed feed(doc);
    auto r = run_cli({"slk", "gale", "-f", "-"});
    CHECK(r.code == 0);
    SLFrieze gd = sl_frieze_of_json(Json::parse(r.out));
    CHECK(gd.k == 2);
    CHECK(gd.w == 2);
    CHECK(validate(gd).all());
  }
  {
    CinFeed feed(doc);
    auto r = run_cli({"slk", "tbox", "-f", "-"});
    CHECK(r.code == 0);
    CHECK(Json::parse(r.out)["residuals_zero"] == true);
  }
}

TEST_CASE("from-points builds a validating frieze") {
  auto built = run_cli({"coxeter", "from-points", "--points", "0,1,3,inf,-1"});
  REQUIRE(built.code == 0);
  CinFeed feed(built.out);
  auto rep = run_cli({"coxeter", "validate", "-f", "-"});
  CHECK(rep.code == 0);
}

TEST_CASE("antiperiodic block command matches the library") {
  auto r = run_cli({"slk", "block", "--q", "1,2,2,1,3", "--qp", "2,1,2,1", "--matrix",
                    "2,5,7,18"});
  CHECK(r.code == 0);
  auto j = Json::parse(r.out);
  CHECK(j["kind"] == "sl2_block");
  CHECK(j["block"][0] == Json::array({"2", "5", "8", "11", "3"}));
  CHECK(j["block"][1] == Json::array({"7", "18", "29", "40", "11"}));
}

TEST_CASE("dissection matrix command checks the cells") {
  auto bad = run_cli({"polygon", "dissection-matrix", "--cells", "1,2,3;1,3,4;1,4,5;2,3,4"});
  CHECK(bad.code == 2);
  CHECK(bad.err.substr(0, 18) == "InvalidDissection:");
  auto ok = run_cli({"polygon", "dissection-matrix", "--cells", "1,2,3,4", "--format", "csv"});
  CHECK(ok.code == 0);
  CHECK(ok.out ==
        "0,1,1,1\n"
        "1,0,1,1\n"
        "1,1,0,1\n"
        "1,1,1,0\n");
}
