#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code;
  std::string out, err;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = liegc::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = std::string("cli_test_") + std::to_string(counter++) + ".json";
    std::ofstream f(path);
    f << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
  static int counter;
};
int TempFile::counter = 0;

}  // namespace

TEST_CASE("algebra subcommand") {
  RunResult a1 = run({"algebra", "--type", "A1"});
  CHECK(a1.code == 0);
  json j1 = json::parse(a1.out);
  CHECK(j1.at("root_system").at("roots").size() == 2);
  CHECK(j1.at("N").empty());

  RunResult a2 = run({"algebra", "--type", "A2"});
  CHECK(a2.code == 0);
  json j2 = json::parse(a2.out);
  CHECK(j2.at("root_system").at("roots").size() == 6);
  CHECK(j2.at("N").size() == 6);

  RunResult bad = run({"algebra", "--type", "H9"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("unknown Cartan type") != std::string::npos);

  RunResult txt = run({"algebra", "--type", "A1+A1", "--format", "text"});
  CHECK(txt.code == 0);
  CHECK(txt.out.find("4 roots") != std::string::npos);
}

TEST_CASE("verify subcommand") {
  // su(2) Borel triple per the inner-type description
  std::string good = R"({
    "vogan": {"type": [["A", 1]], "theta": [0], "painted": []},
    "h_k": "full",
    "R0": [0],
    "connection": "D0",
    "kind": "symmetric",
    "params": {"epsilon0": [["1 * i^1"]], "mu": {"0": "1/3"}}
  })";
  TempFile fgood(good);
  RunResult r = run({"verify", "--triple", fgood.path});
  CHECK(r.code == 0);
  json cert = json::parse(r.out);
  CHECK(cert.at("verdict") == "pass");

  // epsilon0 = 0 degenerates g_Delta
  std::string degen = R"({
    "vogan": {"type": [["A", 1]], "theta": [0], "painted": []},
    "h_k": "full",
    "R0": [0],
    "connection": "D0",
    "kind": "symmetric",
    "params": {"epsilon0": [["0"]]}
  })";
  TempFile fdegen(degen);
  RunResult rd = run({"verify", "--triple", fdegen.path});
  CHECK(rd.code == 1);
  json cd = json::parse(rd.out);
  CHECK(cd.at("verdict") == "fail");
  bool found = false;
  for (auto& c : cd.at("clauses"))
    if (c.at("clause") == "adm.g_delta_nondeg" && c.at("status") == "fail") found = true;
  CHECK(found);

  // malformed JSON reports the position and exits 2
  TempFile fbad("{ not json");
  RunResult rb = run({"verify", "--triple", fbad.path});
  CHECK(rb.code == 2);
  CHECK(rb.err.find("parse failure at byte") != std::string::npos);

  // hypothesis violation is inconclusive: (a1+a2)|_{h_k} = 0 on su(3)
  std::string inconclusive = R"({
    "vogan": {"type": [["A", 2]], "theta": [0, 1], "painted": []},
    "h_k": [["1"], ["-1"]],
    "R0": [0, 1, 2],
    "connection": "D0",
    "kind": "symmetric",
    "params": {"epsilon0": [["1 * i^1"]]}
  })";
  TempFile finc(inconclusive);
  RunResult ri = run({"verify", "--triple", finc.path});
  CHECK(ri.code == 3);
  CHECK(json::parse(ri.out).at("verdict") == "inconclusive");
}

TEST_CASE("search subcommand") {
  TempFile su2(R"({"type": [["A", 1]], "theta": [0], "painted": []})");
  RunResult r = run({"search", "--vogan", su2.path});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j.at("complete") == true);
  CHECK(j.at("verified").size() == 2);  // R0 = {a} and R0 = {-a}

  TempFile su3(R"({"type": [["A", 2]], "theta": [0, 1], "painted": []})");
  RunResult r3 = run({"search", "--vogan", su3.path});
  CHECK(r3.code == 0);
  json j3 = json::parse(r3.out);
  CHECK(j3.at("verified").size() == 6);  // one template per positive system

  // identical seed and input give byte-identical output
  RunResult s1 = run({"search", "--vogan", su3.path, "--seed", "9"});
  RunResult s2 = run({"search", "--vogan", su3.path, "--seed", "9"});
  CHECK(s1.out == s2.out);

  // every verified triple re-verifies
  for (auto& entry : json::parse(s1.out).at("verified")) {
    TempFile t(entry.at("triple").dump());
    RunResult rv = run({"verify", "--triple", t.path});
    CHECK(rv.code == 0);
  }

  // an undersized budget reports a partial scan instead of failing
  TempFile d4(R"({"type": [["D", 4]], "theta": [0, 1, 3, 2], "painted": []})");
  RunResult rp = run({"search", "--vogan", d4.path, "--budget", "64", "--max", "4"});
  CHECK(rp.code == 0);
  CHECK(json::parse(rp.out).at("complete") == false);
}
