#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "gpcert/algebra/catalog.hpp"

using namespace gpcert;
using namespace gpcert::cli;

namespace {

json free_z2() {
  return json::parse(R"({
    "presentation": {
      "graph": {"vertices": ["u", "v"], "edges": []},
      "groups": {"u": {"catalog": "Z2"}, "v": {"catalog": "Z2"}}
    },
    "words": {
      "abab": [["u", 1], ["v", 1], ["u", 1], ["v", 1]],
      "aa": [["u", 1], ["u", 1]]
    }
  })");
}

json path_z3() {
  return json::parse(R"({
    "presentation": {
      "graph": {"vertices": ["u", "v", "w"], "edges": [["u", "v"], ["v", "w"]]},
      "groups": {"u": {"catalog": "Z3"}, "v": {"catalog": "Z2"}, "w": {"catalog": "Z3"}}
    },
    "words": {
      "w1": [["u", 1], ["v", 1], ["u", 2], ["w", 1]],
      "w2": [["w", 1], ["u", 1], ["w", 2]]
    }
  })");
}

json lec_doc() {
  return json::parse(R"({
    "presentation": {"graph": {"vertices": ["u", "v"], "edges": []}},
    "charts": {"Z": {"interval": 2}},
    "almost_homs": {
      "u": {"chart": "Z", "K": ["-2", "-1", "0", "1", "2"], "target": {"catalog": "Z5"},
            "map": {"-2": 3, "-1": 4, "0": 0, "1": 1, "2": 2}},
      "v": {"chart": "Z", "K": ["-2", "-1", "0", "1", "2"], "target": {"catalog": "Z5"},
            "map": {"-2": 3, "-1": 4, "0": 0, "1": 1, "2": 2}}
    },
    "words": {
      "x": [["u", "1"]], "y": [["v", "1"]],
      "xy": [["u", "1"], ["v", "1"]], "yx": [["v", "1"], ["u", "1"]]
    }
  })");
}

Outcome run_with(const std::string& command, const json& input, Options o = {}) {
  return run(command, input, o);
}

}  // namespace

TEST_CASE("every command is registered") {
  CHECK(command_names().size() == 12);
  Outcome o = run_with("frobnicate", json::object());
  CHECK(o.exit_code == kInputError);
  CHECK(o.document.at("error").at("kind") == "UnknownCommand");
  CHECK(o.document.at("version") == "1");
}

TEST_CASE("nf, wp and supp") {
  Options trace;
  trace.trace = true;
  Outcome nf = run_with("nf", path_z3(), trace);
  REQUIRE(nf.exit_code == kOk);
  CHECK(nf.document.at("result").at("words").at("w1").at("normal_form") ==
        json::parse(R"([["v", 1], ["w", 1]])"));
  CHECK(nf.document.at("result").at("words").at("w1").at("trace").size() >= 2);
  CHECK(nf.document.at("params").at("trace") == true);

  Outcome wp = run_with("wp", free_z2());
  CHECK(wp.exit_code == kOk);
  CHECK(wp.document.at("result").at("words").at("aa").at("trivial") == true);
  CHECK(wp.document.at("result").at("words").at("abab").at("oracle_trivial") == false);
  Options expect;
  expect.expect_trivial = true;
  CHECK(run_with("wp", free_z2(), expect).exit_code == kVerdictFalse);
  expect.words = {"aa"};
  CHECK(run_with("wp", free_z2(), expect).exit_code == kOk);

  Outcome supp = run_with("supp", path_z3());
  CHECK(supp.document.at("result").at("words").at("w1") == json::parse(R"(["v", "w"])"));
  CHECK(supp.document.at("result").at("words").at("w2") == json::parse(R"(["u", "w"])"));
}

TEST_CASE("retract, split and amalgam") {
  Options o;
  o.subset = {"u", "v"};
  Outcome r = run_with("retract", path_z3(), o);
  REQUIRE(r.exit_code == kOk);
  CHECK(r.document.at("result").at("words").at("w1") == json::parse(R"([["v", 1]])"));

  Options no_vertex;
  CHECK(run_with("split", path_z3(), no_vertex).exit_code == kInputError);
  Options v;
  v.vertex = "v";
  Outcome s = run_with("split", path_z3(), v);
  CHECK(s.document.at("result").at("a") == json::parse(R"(["u", "w"])"));
  Outcome a = run_with("amalgam", path_z3(), v);
  REQUIRE(a.exit_code == kOk);
  CHECK(a.document.at("result").at("words").at("w1").at("n") == 1);
}

TEST_CASE("closure") {
  json doc = json::parse(R"({"group": {"catalog": "S3"}, "subgroup": []})");
  // A 3-cycle generates A3.
  FiniteGroup s3 = *catalog_group("S3");
  Element rotation = 1;
  while (s3.element_order(rotation) != 3) ++rotation;
  doc["subgroup"] = {rotation};
  Options two;
  two.tag = "pgroup:2";
  Outcome closed = run_with("closure", doc, two);
  CHECK(closed.exit_code == kOk);
  CHECK(closed.document.at("result").at("closed") == true);
  Options three;
  three.tag = "pgroup:3";
  Outcome open = run_with("closure", doc, three);
  CHECK(open.exit_code == kVerdictFalse);
  CHECK(open.document.at("result").contains("inseparable"));
}

TEST_CASE("separate and check-cert") {
  Options o;
  o.words = {"abab"};
  Outcome s = run_with("separate", free_z2(), o);
  REQUIRE(s.exit_code == kOk);
  json certs = s.document.at("certificates");
  REQUIRE(certs.size() == 1);
  Outcome ok = run_with("check-cert", json{{"certificates", certs}});
  CHECK(ok.exit_code == kOk);
  CHECK(ok.document.at("result").at("certificates")[0].at("diagnostic") == "Valid");

  json bad = certs;
  bad[0]["image"] = 0;
  Outcome rejected = run_with("check-cert", json{{"certificates", bad}});
  CHECK(rejected.exit_code == kVerdictFalse);
  CHECK(rejected.document.at("result").at("valid") == false);

  json malformed = certs;
  malformed[0].erase("target_table");
  CHECK(run_with("check-cert", json{{"certificates", malformed}})
            .document.at("result").at("certificates")[0].at("diagnostic") == "MalformedCertificate");

  o.words = {"aa"};
  Outcome trivial = run_with("separate", free_z2(), o);
  CHECK(trivial.exit_code == kVerdictFalse);
  CHECK(trivial.document.at("error").at("kind") == "TrivialElement");

  Options tiny;
  tiny.words = {"abab"};
  tiny.budget_order = 1;
  tiny.budget_candidates = 0;
  CHECK(run_with("separate", free_z2(), tiny).exit_code == kBudgetExceeded);
}

TEST_CASE("obstruct") {
  json doc = json::parse(R"({"amalgam": {"A": {"catalog": "S3"}, "B": [], "C": {"catalog": "Z3"}}})");
  FiniteGroup s3 = *catalog_group("S3");
  Element rotation = 1;
  while (s3.element_order(rotation) != 3) ++rotation;
  doc["amalgam"]["B"] = {rotation};
  Options three;
  three.tag = "pgroup:3";
  Outcome w = run_with("obstruct", doc, three);
  CHECK(w.exit_code == kOk);
  CHECK(w.document.at("result").at("verdict") == "ObstructionWitness");
  Options two;
  two.tag = "pgroup:2";
  Outcome none = run_with("obstruct", doc, two);
  CHECK(none.exit_code == kVerdictFalse);
  CHECK(none.document.at("result").at("verdict") == "NoneFound");
}

TEST_CASE("lec commands") {
  Outcome a = run_with("lec-assemble", lec_doc());
  REQUIRE(a.exit_code == kOk);
  CHECK(a.document.at("result").at("verified") == true);
  CHECK(a.document.at("result").at("K_v").at("u") == json::parse(R"(["0", "-1", "1"])"));

  Outcome f = run_with("lec-finitize", lec_doc());
  REQUIRE(f.exit_code == kOk);
  CHECK(f.document.at("result").at("verified") == true);
  auto images = f.document.at("result").at("K_images").get<std::vector<Element>>();
  CHECK(std::set<Element>(images.begin(), images.end()).size() == 4);

  json narrow = lec_doc();
  narrow["almost_homs"]["u"]["K"] = json::parse(R"(["0", "1"])");
  Outcome missing = run_with("lec-assemble", narrow);
  CHECK(missing.exit_code == kVerdictFalse);
  CHECK(missing.document.at("error").at("kind") == "CoverageMissing");

  json mod2 = lec_doc();
  for (const char* v : {"u", "v"}) {
    mod2["almost_homs"][v]["target"] = {{"catalog", "Z2"}};
    mod2["almost_homs"][v]["map"] = json::parse(R"({"-2": 0, "-1": 1, "0": 0, "1": 1, "2": 0})");
  }
  mod2["words"] = json::parse(R"({"x": [["u", "1"]], "xinv": [["u", "-1"]]})");
  Outcome violated = run_with("lec-assemble", mod2);
  CHECK(violated.exit_code == kVerdictFalse);
  CHECK(violated.document.at("error").at("kind") == "AlmostHomViolated");
}

TEST_CASE("input errors") {
  CHECK(run_with("nf", json::array()).exit_code == kInputError);
  json doc = free_z2();
  doc["words"]["bad"] = json::parse(R"([["z", 1]])");
  Outcome o = run_with("nf", doc);
  CHECK(o.exit_code == kInputError);
  CHECK(o.document.at("error").at("kind") == "UnknownVertex");
  doc = free_z2();
  doc["words"]["bad"] = json::parse(R"([["u", 7]])");
  CHECK(run_with("nf", doc).document.at("error").at("kind") == "IndexOutOfRange");
  Options bad_tag;
  bad_tag.tag = "amenable";
  CHECK(run_with("separate", free_z2(), bad_tag).exit_code == kInputError);
}

TEST_CASE("documents are deterministic and round-trip") {
  for (const std::string& command : {"nf", "wp", "supp", "separate"}) {
    Options o;
    o.words = {"w1", "w2"};
    Outcome a = run_with(command, path_z3(), o);
    Outcome b = run_with(command, path_z3(), o);
    CAPTURE(command);
    CHECK(a.exit_code == kOk);
    CHECK(a.document.dump(2) == b.document.dump(2));
    CHECK(json::parse(a.document.dump(2)) == a.document);
    CHECK(a.document.at("command") == command);
  }
}

#ifdef GPCERT_CLI_BINARY
TEST_CASE("separate output pipes into check-cert") {
  const std::string dir = GPCERT_TEST_TMPDIR;
  const std::string in = dir + "/pipe_in.json";
  const std::string cert = dir + "/pipe_cert.json";
  const std::string check = dir + "/pipe_check.json";
  {
    std::ofstream(in) << free_z2().dump();
  }
  const std::string bin = GPCERT_CLI_BINARY;
  int rc = std::system((bin + " separate " + in + " --word abab -o " + cert).c_str());
  REQUIRE(rc == 0);
  rc = std::system((bin + " check-cert " + cert + " -o " + check).c_str());
  CHECK(rc == 0);
  std::ifstream result(check);
  json out = json::parse(result);
  CHECK(out.at("result").at("valid") == true);
  rc = std::system((bin + " wp " + in + " --expect-trivial -o " + check).c_str());
  CHECK(WEXITSTATUS(rc) == 1);
}
#endif
