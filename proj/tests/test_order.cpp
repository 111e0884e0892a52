#include "doctest.h"
#include "helpers.hpp"

using namespace mtlab;
using namespace mtlab::test;

TEST_CASE("validate_poset") {
  auto two = FinitePoset::from_pairs({"0", "1"}, {{0, 1}});
  CHECK(two.size() == 2);
  CHECK(two.leq(0, 1));
  CHECK_FALSE(two.leq(1, 0));

  try {
    FinitePoset::from_pairs({"a", "b"}, {{0, 1}, {1, 0}});
    FAIL("cycle accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAntisymmetric);
    CHECK(e.witness().size() == 2);
  }
  CHECK_THROWS_AS(FinitePoset::from_pairs({"a", "a"}, {}), Error);

  auto d = diamond();
  CHECK(d.size() == 4);
  CHECK(d.leq(0, 3));
}

TEST_CASE("lattice structure") {
  auto d = diamond();
  CHECK(d.meet(1, 2) == 0);
  CHECK(d.join(1, 2) == 3);
  try {
    FiniteLattice::from_poset(FinitePoset::from_pairs({"a", "b"}, {}));
    FAIL("antichain accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALattice);
  }
  auto p2 = FiniteBooleanAlgebra::powerset({"1", "2"});
  auto rebuilt = FiniteLattice::from_poset(p2.lattice().poset());
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      CHECK(rebuilt.meet(a, b) == (a & b));
      CHECK(rebuilt.join(a, b) == (a | b));
    }
}

TEST_CASE("distributivity") {
  auto v = is_distributive(m3());
  CHECK_FALSE(v.holds);
  REQUIRE(v.witness.size() == 3);
  auto l = m3();
  auto [a, b, c] = std::tuple{v.witness[0], v.witness[1], v.witness[2]};
  CHECK(l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)));
  CHECK(is_distributive(FiniteBooleanAlgebra::powerset({"a", "b", "c"}).lattice()).holds);
  CHECK(is_distributive(chain3()).holds);
}

TEST_CASE("join irreducibles and atoms") {
  auto c = chain3();
  CHECK(join_irreducibles(c) == ElemSet(3, {1, 2}));
  auto b = FiniteBooleanAlgebra::powerset({"a", "b", "c"});
  CHECK(join_irreducibles(b.lattice()) == b.atoms());
  CHECK(b.atoms().count() == 3);
  auto one = FiniteLattice::from_poset(FinitePoset::from_pairs({"*"}, {}));
  CHECK(join_irreducibles(one).none());
}

TEST_CASE("birkhoff") {
  auto r = birkhoff(chain3());
  REQUIRE(r.j_elements == std::vector<Elem>{1, 2});
  CHECK(r.embed[0].none());
  CHECK(r.embed[1] == ElemSet(2, {0}));
  CHECK(r.embed[2] == ElemSet(2, {0, 1}));

  auto b = FiniteBooleanAlgebra::powerset({"a", "b"});
  auto rb = birkhoff(b.lattice());
  CHECK(rb.jposet.size() == 2);
  ElemSet seen(4);
  for (const auto& s : rb.embed) seen.set(static_cast<Elem>(s.low_word()));
  CHECK(seen.count() == 4);

  try {
    birkhoff(m3());
    FAIL("M3 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDistributive);
  }
}

TEST_CASE("birkhoff round trip on small distributive lattices") {
  for (const FiniteLattice& l : {chain3(), diamond(), FiniteBooleanAlgebra::powerset({"a", "b", "c"}).lattice()}) {
    auto r = birkhoff(l);
    auto down = downset_lattice(r.jposet);
    CHECK(order_isomorphism(down.lattice.poset(), l.poset()).has_value());
  }
}

TEST_CASE("macneille completion") {
  auto d = diamond();
  auto mn = macneille_completion(d.poset());
  CHECK(mn.lattice.size() == 4);
  CHECK(order_isomorphism(mn.lattice.poset(), d.poset()).has_value());

  auto anti = macneille_completion(FinitePoset::from_pairs({"a", "b"}, {}));
  CHECK(anti.lattice.size() == 4);
  CHECK(anti.lattice.join(anti.embed[0], anti.embed[1]) == anti.lattice.top());

  auto empty = macneille_completion(FinitePoset::from_pairs({}, {}));
  CHECK(empty.lattice.size() == 1);
}

TEST_CASE("pseudocomplements") {
  auto c = chain3();
  CHECK(pseudocomplement(c, 1) == 0);
  CHECK(complemented_elements(c) == ElemSet(3, {0, 2}));

  auto b = FiniteBooleanAlgebra::powerset({"a", "b", "c"});
  for (Elem x = 0; x < b.size(); ++x) CHECK(pseudocomplement(b.lattice(), x) == b.neg(x));
  CHECK(complemented_elements(b.lattice()).count() == b.size());

  // Opens of the Sierpiński space form the chain ∅ < {1} < X.
  auto m = powerset_mt(sierpinski());
  auto o = opens_frame(m);
  Elem one = 1;  // frame index of {1}
  CHECK(o.frame.label(one) == "{1}");
  CHECK(pseudocomplement(o.frame.lattice(), one) == o.frame.bottom());
  CHECK_FALSE(complemented_elements(o.frame.lattice()).test(one));
}

TEST_CASE("pseudocomplement is the greatest annihilator") {
  for (const FiniteLattice& l : {chain3(), diamond()}) {
    for (Elem c = 0; c < l.size(); ++c) {
      Elem star = pseudocomplement(l, c);
      CHECK(l.meet(c, star) == l.bottom());
      for (Elem x = 0; x < l.size(); ++x)
        if (l.meet(c, x) == l.bottom()) CHECK(l.leq(x, star));
    }
  }
}
