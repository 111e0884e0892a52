#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "mtlab/document.hpp"

using namespace mtlab;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<fs::path> fixtures() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(MTLAB_FIXTURE_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("serialize(parse(d)) = d on every fixture") {
  const auto files = fixtures();
  REQUIRE(files.size() >= 15);
  for (const auto& f : files) {
    CAPTURE(f.filename().string());
    const std::string text = slurp(f);
    CHECK(serialize(parse_document(text)) == text);
  }
}

TEST_CASE("parse canonicalizes order-insensitive input") {
  const Document a = parse_document(R"({"opens":[["1"],[],["1","0"]],"points":["1","0"],"kind":"space"})");
  const Document b = parse_document(serialize(a));
  CHECK(a == b);
  CHECK(a.points == std::vector<std::string>{"0", "1"});
  CHECK(a.opens.back() == std::vector<std::string>{"1"});
}

TEST_CASE("mt with a space payload is the powerset algebra of that space") {
  const Document s = load_document(std::string(MTLAB_FIXTURE_DIR) + "/sierpinski.json");
  const Document m = load_document(std::string(MTLAB_FIXTURE_DIR) + "/sierpinski_space_mt.json");
  const MTAlgebra a = to_mt(m), b = powerset_mt(to_space(s));
  CHECK(a.box_table() == b.box_table());
  CHECK(a.lattice().poset().labels() == b.lattice().poset().labels());

  const MTAlgebra table = to_mt(load_document(std::string(MTLAB_FIXTURE_DIR) + "/sierpinski_mt.json"));
  CHECK(mt_isomorphism(table, a).has_value());
}

TEST_CASE("document_of round trips through the validators") {
  const FiniteSpace x = test::sierpinski();
  CHECK(to_space(document_of(x)).opens() == x.opens());
  const MTAlgebra m = powerset_mt(x);
  const MTAlgebra back = to_mt(parse_document(serialize(document_of(m))));
  CHECK(mt_isomorphism(back, m).has_value());
  const Frame l = Frame::from_lattice(test::chain3());
  const Frame l2 = to_frame(parse_document(serialize(document_of(l.lattice().poset(), DocKind::Frame))));
  CHECK(order_isomorphism(l.lattice().poset(), l2.lattice().poset()).has_value());
}

TEST_CASE("malformed documents raise ParseError with a location") {
  CHECK(code_of([] { parse_document(R"({"kind": "space", "points": ["0",)"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_document(R"({"kind": "torus"})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_document(R"([1, 2])"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_document(R"({"kind": "space", "points": ["0"]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_document(R"({"kind": "space", "points": [0], "opens": []})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_document(R"({"kind": "map", "pairs": [["a"]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_document(R"({"kind": "poset", "elements": [], "order": [], "leq": []})"); }) ==
        ErrorCode::ParseError);
  try {
    parse_document(R"({"kind": "space", "points": ["0"], "opens": [[], ["0", 3]]})");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/opens/1/1") != std::string::npos);
  }
}

TEST_CASE("validation errors are delegated to the module validators") {
  auto space = [](const char* text) { return to_space(parse_document(text)); };
  CHECK(code_of([&] { space(R"({"kind":"space","points":["0","1"],"opens":[[],["0"],["1"]]})"); }) ==
        ErrorCode::NotATopology);
  CHECK(code_of([&] { space(R"({"kind":"space","points":["0","0"],"opens":[[],["0"]]})"); }) ==
        ErrorCode::DuplicateLabel);
  CHECK(code_of([&] { space(R"({"kind":"space","points":["0"],"opens":[[],["0","x"]]})"); }) ==
        ErrorCode::UnknownLabel);
  CHECK(code_of([] {
          to_frame(load_document(std::string(MTLAB_FIXTURE_DIR) + "/m3.json"));
        }) == ErrorCode::NotDistributive);
  CHECK(code_of([] {
          to_mt(load_document(std::string(MTLAB_FIXTURE_DIR) + "/broken_kuratowski.json"));
        }) == ErrorCode::KuratowskiViolation);
  CHECK(code_of([] {
          to_boolean(load_document(std::string(MTLAB_FIXTURE_DIR) + "/chain3.json"));
        }) == ErrorCode::NotBooleanAlgebra);
  CHECK(code_of([] {
          to_mt(parse_document(R"({"kind":"mt","elements":["0","1"],"leq":[["0","1"]],"box":[["0","0"]]})"));
        }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("map documents resolve against source and target labels") {
  const Document d = parse_document(R"({"kind":"map","pairs":[["0","p"],["1","p"]]})");
  CHECK(to_map(d, {"0", "1"}, {"p"}) == std::vector<Elem>{0, 0});
  CHECK(code_of([&] { to_map(d, {"0", "1", "2"}, {"p"}); }) == ErrorCode::ShapeMismatch);
  CHECK(code_of([&] { to_map(d, {"0", "1"}, {"q"}); }) == ErrorCode::UnknownLabel);
  const Document back = map_document({0, 0}, {"0", "1"}, {"p"});
  CHECK(back.pairs == d.pairs);
}
