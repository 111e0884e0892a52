#include "doctest.h"
#include "helpers.hpp"

using namespace mtlab;
using namespace mtlab::test;

TEST_CASE("validate_space") {
  CHECK(sierpinski().opens().size() == 3);
  try {
    space({"0", "1"}, {{}, {0}, {1}});
    FAIL("missing X accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotATopology);
  }
  try {
    space({"0", "1", "2"}, {{}, {0}, {1}, {0, 1, 2}});
    FAIL("missing union accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotATopology);
    CHECK(e.witness().size() == 2);
  }
}

TEST_CASE("specialization") {
  auto s = specialization(sierpinski());
  CHECK(s.antisymmetric);
  CHECK(s.up[0] == pts(2, {0, 1}));
  CHECK(s.up[1] == pts(2, {1}));
  auto d = specialization(discrete(3));
  for (Elem p = 0; p < 3; ++p) CHECK(d.up[p] == pts(3, {p}));
  auto i = specialization(indiscrete(2));
  CHECK_FALSE(i.antisymmetric);
  CHECK(i.up[0] == pts(2, {0, 1}));
}

TEST_CASE("space predicates") {
  auto s = sierpinski();
  CHECK(space_predicate(s, SpacePredicate::Sober).holds);
  CHECK_FALSE(space_predicate(s, SpacePredicate::Hausdorff).holds);
  for (const auto& x : {sierpinski(), discrete(3), indiscrete(2)}) {
    CHECK(space_predicate(x, SpacePredicate::Compact).holds);
    CHECK(space_predicate(x, SpacePredicate::LocallyCompact).holds);
    for (auto p : all_space_predicates()) CHECK_NOTHROW(space_predicate(x, p));
  }
}

TEST_CASE("saturated sets") {
  auto s = sierpinski();
  auto ks = compact_saturated_sets(s);
  CHECK(ks == std::vector<ElemSet>{pts(2, {}), pts(2, {1}), pts(2, {0, 1})});
  auto m = powerset_mt(s);
  auto c = element_classes(m);
  std::vector<ElemSet> from_mt;
  c.compact_saturated.for_each([&](Elem e) { from_mt.push_back(ElemSet::from_mask(2, e)); });
  std::sort(from_mt.begin(), from_mt.end());
  CHECK(from_mt == ks);
}

TEST_CASE("continuous maps") {
  auto s = sierpinski();
  auto id = check_map({0, 1}, s, s);
  CHECK(id.is_continuous);
  CHECK(id.is_proper);
  auto to_discrete = check_map({0, 1}, s, discrete(2));
  CHECK_FALSE(to_discrete.is_continuous);
  auto constant = check_map({0, 0}, s, discrete(1));
  CHECK(constant.is_continuous);
  CHECK(constant.is_proper);
}
