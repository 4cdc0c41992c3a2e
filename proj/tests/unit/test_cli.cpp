#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "bdecat/io.hpp"
#include "bdecat_cli/cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = bdecat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& rel) { return fixtures::path(rel); }

}  // namespace

TEST_CASE("check exit codes") {
  CHECK(run({"check", data("typed/zigzag3.json")}).code == 0);
  CHECK(run({"check", data("typed/split2_chain.json")}).code == 0);
  CHECK(run({"check", data("ainf/m2_chain.json")}).code == 0);
  CHECK(run({"check", data("ainf/m3.json")}).code == 0);
  CHECK(run({"check", data("cfk/figure_eight.json")}).code == 0);
  CHECK(run({"check", data("diagrams/solid_torus.json")}).code == 0);
  CHECK(run({"check", data("pmc/antipodal2.json")}).code == 0);

  Run bad = run({"check", data("typed/rho1_loop.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("StructureEquationFails") != std::string::npos);
  CHECK(run({"check", data("ainf/m2_chain_bad.json")}).code == 1);
  CHECK(run({"check", data("ainf/m3_bad.json")}).code == 1);
  CHECK(run({"check", data("pmc/disconnected.json")}).code == 2);
  CHECK(run({"check", "/nonexistent.json"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"pair", data("ainf/core.json")}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"pair", data("ainf/core.json"), data("typed/split2_chain.json")}).code == 2);
  Run both = run({"pair", data("ainf/core.json"), data("typed/unknot_loop.json")});
  CHECK(both.code == 2);
  CHECK(both.err.find("BothUnbounded") != std::string::npos);
}

TEST_CASE("json output parses") {
  for (std::vector<std::string> args : {
           std::vector<std::string>{"--json", "algebra", "--pmc", "torus", "--gradings"},
           {"--json", "k0", data("typed/zigzag3.json")},
           {"--json", "pair", data("ainf/m2_chain.json"), data("typed/zigzag3.json")},
           {"--json", "satellite", data("ainf/core.json"), data("cfk/right_trefoil.json")},
           {"--json", "diagram-kernel", data("diagrams/twisted_p3.json")},
           {"--json", "check", data("typed/rho1_loop.json")},
       }) {
    Run r = run(args);
    CHECK(r.code <= 1);
    json j = json::parse(r.out);
    CHECK(j.is_object());
  }
  json a = json::parse(run({"--json", "algebra", "--pmc", "torus"}).out);
  CHECK(a["size"] == 8);
  json bad = json::parse(run({"--json", "check", data("typed/rho1_loop.json")}).out);
  CHECK(bad.dump().find("StructureEquationFails") != std::string::npos);
}

TEST_CASE("algebra listing") {
  Run r = run({"algebra", "--pmc", "torus", "--gradings"});
  CHECK(r.code == 0);
  CHECK(r.out.find("8 basis elements") != std::string::npos);
  CHECK(r.out.find("rho123") != std::string::npos);
  CHECK(run({"algebra", "--pmc", "split2", "--summand", "1"}).code == 0);
}

TEST_CASE("knot and satellite commands") {
  Run f8 = run({"cfd-from-cfk", data("cfk/figure_eight.json")});
  CHECK(f8.code == 0);
  CHECK(f8.out.find("-t + 3 - 1/t") != std::string::npos);
  CHECK(f8.out.find("normalization:") != std::string::npos);

  auto tmp = std::filesystem::temp_directory_path() / "bdecat_cli_test_cfd.json";
  CHECK(run({"cfd-from-cfk", data("cfk/right_trefoil.json"), "--out", tmp.string()}).code == 0);
  CHECK(run({"check", tmp.string()}).code == 0);
  std::filesystem::remove(tmp);

  Run s = run({"satellite", data("ainf/synthetic_p_pattern.json"), data("cfk/right_trefoil.json"), "--report"});
  CHECK(s.code == 0);
  CHECK(s.out.find("winding k       = 2") != std::string::npos);
  Run s1 = run({"satellite", data("ainf/synthetic_p_pattern.json"), data("cfk/right_trefoil.json"), "--report",
                "--winding", "1"});
  CHECK(s1.out.find("winding k       = 1") != std::string::npos);
}

TEST_CASE("pair weights") {
  CHECK(run({"pair", data("ainf/m3.json"), data("typed/zigzag3.json")}).code == 0);
  CHECK(run({"pair", data("ainf/m3.json"), data("typed/zigzag3.json"), "--weight", "2"}).code == 0);
}

TEST_CASE("diagram kernel orders") {
  Run p3 = run({"diagram-kernel", data("diagrams/twisted_p3.json")});
  CHECK(p3.code == 0);
  CHECK(p3.out.find("|H1(Y, dY)| = 3") != std::string::npos);
  Run rd = run({"--json", "diagram-kernel", data("diagrams/rank_deficient.json")});
  CHECK(rd.code == 0);
}

TEST_CASE("selftest") {
  Run r = run({"--selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("OK") != std::string::npos);
  CHECK(run({"algebra", "--pmc", "split2", "--selftest"}).code == 0);
}
