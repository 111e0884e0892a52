#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "mtlab/cli.hpp"
#include "mtlab/document.hpp"

using namespace mtlab;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = command_dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return std::string(MTLAB_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST_CASE("check exit codes and witnesses") {
  CHECK(run({"check", "--pred", "sober", fx("sierpinski.json")}).code == kExitTrue);
  const Run t1 = run({"check", "--pred", "t1", fx("sierpinski.json")});
  CHECK(t1.code == kExitFalse);
  CHECK(t1.out.find("witness: {1}") != std::string::npos);
  // FILE without its extension resolves to FILE.json
  CHECK(run({"check", "--pred", "sober", fx("sierpinski")}).code == kExitTrue);
  CHECK(run({"check", "--pred", "continuous", fx("chain3.json")}).code == kExitTrue);
  CHECK(run({"check", "--pred", "distributive", fx("m3.json")}).code == kExitFalse);
  CHECK(run({"check", "--pred", "no_such", fx("sierpinski.json")}).code == kExitInvalid);
}

TEST_CASE("invalid input exits 2") {
  CHECK(run({"validate", fx("broken_topology.json")}).code == kExitInvalid);
  CHECK(run({"validate", fx("broken_kuratowski.json")}).code == kExitInvalid);
  CHECK(run({"validate", fx("invalid/truncated.json")}).code == kExitInvalid);
  CHECK(run({"validate", fx("invalid/unknown_kind.json")}).code == kExitInvalid);
  CHECK(run({"validate", fx("does_not_exist.json")}).code == kExitInvalid);
  CHECK(run({"frobnicate"}).code == kExitInvalid);
  CHECK(run({}).code == kExitInvalid);
  CHECK(run({"construct", "--op", "nope", fx("sierpinski.json")}).code == kExitInvalid);
  CHECK(run({"gen", "--kind", "topology", "--size", "5"}).code == kExitInvalid);
  CHECK(run({"validate", fx("sierpinski.json")}).code == kExitTrue);
}

TEST_CASE("hm and roundtrip report vacuous hypotheses with exit 1") {
  const Run hm = run({"hm", fx("sierpinski.json")});
  CHECK(hm.code == kExitTrue);
  CHECK(hm.out.find("KS(M) 3 <-> SFilt(M) 3") != std::string::npos);
  const Run vac = run({"hm", fx("indiscrete2.json")});
  CHECK(vac.code == kExitFalse);
  CHECK(vac.out.find("vacuous") != std::string::npos);
  CHECK(run({"roundtrip", "--which", "t_half_iso", fx("sierpinski.json")}).code == kExitTrue);
  const Run th = run({"roundtrip", "--which", "t_half_iso", fx("indiscrete2.json")});
  CHECK(th.code == kExitFalse);
  CHECK(th.out.find("vacuous") != std::string::npos);
  CHECK(run({"roundtrip", "--which", "stone_path", fx("bool8.json")}).code == kExitTrue);
  CHECK(run({"roundtrip", "--which", "nowhere", fx("sierpinski.json")}).code == kExitInvalid);
}

TEST_CASE("construct emits valid canonical documents") {
  const Run p = run({"construct", "--op", "pspace", fx("sierpinski.json")});
  REQUIRE(p.code == kExitTrue);
  const Document d = parse_document(p.out);
  CHECK(serialize(d) == p.out);
  CHECK(to_mt(d).opens().count() == 3);

  const Run pts = run({"construct", "--op", "points", fx("chain3.json")});
  REQUIRE(pts.code == kExitTrue);
  CHECK(homeomorphism(to_space(parse_document(pts.out)), to_space(load_document(fx("sierpinski.json")))));

  for (const char* op : {"opens", "atoms"}) CHECK(run({"construct", "--op", op, fx("sierpinski_mt.json")}).code == 0);
  CHECK(run({"construct", "--op", "boolext", fx("diamond.json")}).code == kExitTrue);
  CHECK(run({"construct", "--op", "canonical", fx("bool4.json")}).code == kExitTrue);
  CHECK(run({"construct", "--op", "canonical", fx("chain3.json")}).code == kExitInvalid);
}

TEST_CASE("hom checks") {
  CHECK(run({"hom", "--check", "map", fx("sierpinski.json"), fx("point.json"), fx("to_point.json")}).code == 0);
  CHECK(run({"hom", "--check", "map", fx("sierpinski.json"), fx("discrete2.json"), fx("identity_sierpinski.json")})
            .code == kExitFalse);
  CHECK(run({"hom", "--check", "mt", fx("sierpinski.json"), fx("sierpinski_mt.json"),
             fx("identity_sierpinski_mt.json")})
            .code == kExitTrue);
  CHECK(run({"hom", "--check", "mt", fx("sierpinski_mt.json"), fx("sierpinski_mt.json"),
             fx("swap_sierpinski_mt.json")})
            .code == kExitFalse);
  CHECK(run({"hom", "--check", "frame", fx("chain3.json"), fx("chain3.json"), fx("chain3_identity.json")}).code == 0);
  CHECK(run({"hom", "--check", "frame", fx("chain3.json"), fx("chain3.json"), fx("chain3_to_top.json")}).code ==
        kExitFalse);
  CHECK(run({"hom", "--check", "map", fx("sierpinski.json"), fx("point.json"), fx("swap.json")}).code ==
        kExitInvalid);
}

TEST_CASE("gen is deterministic and exhaustive without a seed") {
  const Run a = run({"gen", "--kind", "mt_table", "--size", "3", "--seed", "17"});
  const Run b = run({"gen", "--kind", "mt_table", "--size", "3", "--seed", "17"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const Run all = run({"gen", "--kind", "topology", "--size", "4"});
  CHECK(nlohmann::json::parse(all.out).size() == 355);
  CHECK(nlohmann::json::parse(run({"gen", "--kind", "topology", "--size", "1"}).out).size() == 1);
}

TEST_CASE("sweep --json is byte-identical across runs") {
  const std::vector<std::string> args{"sweep", "--suite", "separation", "--size", "5", "--seed", "3",
                                      "--count", "20", "--json"};
  const Run a = run(args), b = run(args);
  CHECK(a.code == kExitTrue);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["accounting"] == true);
  CHECK(j["corpus"]["items"] == 390 + 20);
}

TEST_CASE("--json output parses") {
  const Run r = run({"--json", "check", "--pred", "t1", fx("sierpinski.json")});
  CHECK(r.code == kExitFalse);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["witness"][0] == "{1}");
  CHECK(nlohmann::json::parse(run({"hm", "--json", fx("sierpinski.json")}).out)["ks"] == 3);
}
