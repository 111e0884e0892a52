#include <doctest.h>

#include "mtlab/generate.hpp"

using namespace mtlab;

TEST_CASE("Rng is reproducible and bounded") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  Rng r(7);
  for (int i = 0; i < 1000; ++i) {
    CHECK(r.below(3) < 3);
    const auto v = r.between(5, 7);
    CHECK((v >= 5 && v <= 7));
  }
  // the 10000th draw from the default seed is fixed by the standard
  Rng std_seed(5489);
  for (int i = 0; i < 9999; ++i) std_seed.next();
  CHECK(std_seed.next() == 9981545732273789042ULL);
}

TEST_CASE("topologies on n labelled points: 1, 1, 4, 29, 355") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    CAPTURE(n);
    CHECK(count_topologies_bruteforce(n) == expected[n]);
    CHECK(all_topologies(n).size() == expected[n]);
  }
  CHECK(generate_all(GenKind::Topology, 4).size() == 355);
  CHECK(generate_all(GenKind::Topology, 1).size() == 1);
  CHECK_THROWS_AS(all_topologies(5), Error);
}

TEST_CASE("distributive lattices up to isomorphism: 1, 1, 1, 2, 3, 5, 8, 15") {
  const auto all = distributive_lattices_upto(8);
  std::size_t by_size[9] = {};
  for (const auto& l : all) {
    REQUIRE(l.size() <= 8);
    CHECK(is_distributive(l).holds);
    ++by_size[l.size()];
  }
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 5, 8, 15};
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(by_size[n] == expected[n]);
  }
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j)
      if (all[i].size() == all[j].size()) CHECK_FALSE(order_isomorphism(all[i].poset(), all[j].poset()).has_value());
}

TEST_CASE("generate is deterministic in (kind, size, seed)") {
  for (GenKind k : {GenKind::Topology, GenKind::Preorder, GenKind::DLat, GenKind::Boolean, GenKind::MTTable}) {
    CAPTURE(to_string(k));
    for (std::uint64_t seed : {0ULL, 1ULL, 0xffffffffffffffffULL}) {
      const Document a = generate(k, 4, seed), b = generate(k, 4, seed);
      CHECK(serialize(a) == serialize(b));
    }
  }
  bool differs = false;
  for (std::uint64_t seed = 1; seed < 10 && !differs; ++seed)
    differs = serialize(generate(GenKind::Topology, 6, seed)) != serialize(generate(GenKind::Topology, 6, 0));
  CHECK(differs);
}

TEST_CASE("generated documents validate") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    CHECK_NOTHROW(to_space(generate(GenKind::Topology, 6, seed)));
    CHECK_NOTHROW(to_space(generate(GenKind::Preorder, 5, seed)));
    CHECK_NOTHROW(to_frame(generate(GenKind::DLat, 4, seed)));
    CHECK(to_boolean(generate(GenKind::Boolean, 3, seed)).size() == 8);
    const MTAlgebra m = to_mt(generate(GenKind::MTTable, 3, seed));
    CHECK(m.size() == 8);
  }
  CHECK_THROWS_AS(generate(GenKind::Topology, kMaxPowersetPoints + 1, 0), Error);
  CHECK_THROWS_AS(generate(GenKind::Boolean, kMaxBooleanAtoms + 1, 0), Error);
}

TEST_CASE("mt_table labels hide the powerset structure") {
  const Document d = generate(GenKind::MTTable, 2, 3);
  for (const auto& e : d.elements) CHECK(e.front() == 'e');
}
