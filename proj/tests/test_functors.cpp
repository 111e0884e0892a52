#include "doctest.h"
#include "helpers.hpp"

using namespace mtlab;
using namespace mtlab::test;

TEST_CASE("powerset functor") {
  auto m = powerset_mt(sierpinski());
  CHECK(m.box(el(m, "{0}")) == el(m, "{}"));
  CHECK(m.box(el(m, "{1}")) == el(m, "{1}"));
  CHECK(powerset_mt(discrete(1)).size() == 2);

  // Proper continuous map Sierpiński -> point.
  auto sm = powerset_mt_map({0, 0}, sierpinski(), discrete(1));
  CHECK(sm.table == std::vector<Elem>{0, 3});
  CHECK(sm.proper);
  CHECK_THROWS_AS(powerset_mt_map({0, 1}, sierpinski(), discrete(2)), Error);
}

TEST_CASE("atoms functor") {
  auto x = sierpinski();
  auto at = atoms_space(powerset_mt(x));
  CHECK(homeomorphism(at, x).has_value());
  auto eps = epsilon_map(x);
  CHECK(eps.is_iso);
  auto one = MTAlgebra::from_table(FiniteBooleanAlgebra::powerset({"p"}), {0, 1});
  CHECK(atoms_space(one).size() == 1);

  auto s = powerset_mt(sierpinski());
  auto point = powerset_mt(discrete(1));
  StructureMap pre{MapKind::MTMorphism, {0, 3}, false};
  auto atf = atoms_map(pre, point, s);
  CHECK(atf == std::vector<Elem>{0, 0});
  CHECK(eta_naturality(pre, point, s).holds);
  CHECK(theta_naturality(pre, point, s).holds);
}

TEST_CASE("opens functor") {
  auto o = opens_frame(powerset_mt(sierpinski()));
  CHECK(order_isomorphism(o.frame.lattice().poset(), chain3().poset()).has_value());
  auto od = opens_frame(powerset_mt(discrete(2)));
  CHECK(od.frame.size() == 4);

  auto s = powerset_mt(sierpinski());
  StructureMap id{MapKind::MTMorphism, {0, 1, 2, 3}, true};
  auto om = opens_map(id, o, o);
  auto h = check_frame_hom(om, o.frame, o.frame);
  CHECK(h.is_frame_hom);
  CHECK(h.is_proper);
  (void)s;
}

TEST_CASE("points functor") {
  auto c = Frame::from_lattice(chain3());
  CHECK(homeomorphism(points_space(c).space, sierpinski()).has_value());
  auto one = Frame::from_lattice(FiniteLattice::from_poset(FinitePoset::from_pairs({"*"}, {})));
  CHECK(points_space(one).space.size() == 0);
}

TEST_CASE("boolean extension") {
  auto ext = bool_ext_mt(Frame::from_lattice(chain3()));
  CHECK(mt_isomorphism(ext.algebra, powerset_mt(sierpinski())).has_value());

  auto b = Frame::from_lattice(FiniteBooleanAlgebra::powerset({"a", "b"}).lattice());
  auto eb = bool_ext_mt(b);
  for (Elem a = 0; a < eb.algebra.size(); ++a) CHECK(eb.algebra.box(a) == a);

  auto d = Frame::from_lattice(diamond());
  auto ed = bool_ext_mt(d);
  CHECK(order_isomorphism(opens_frame(ed.algebra).frame.lattice().poset(), diamond().poset()).has_value());
}

TEST_CASE("canonical extension") {
  auto b4 = FiniteBooleanAlgebra::powerset({"a", "b"});
  auto ce = canonical_ext(b4);
  CHECK(ce.sigma.size() == 4);
  for (Elem a = 0; a < 4; ++a) CHECK(ce.sigma.box(a) == a);
  CHECK(clopen_algebra(ce.sigma).elements.size() == 4);

  auto b2 = FiniteBooleanAlgebra::powerset({"a"});
  auto c2 = canonical_ext(b2);
  CHECK(c2.sigma.size() == 2);
  CHECK(compactness_check(c2.sigma, Compactness::Stone).holds);

  for (std::size_t n = 0; n <= 4; ++n) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    auto c = canonical_ext(FiniteBooleanAlgebra::powerset(atoms));
    CHECK(compactness_check(c.sigma, Compactness::Compact).holds);
    CHECK(separation_check(c.sigma, Separation::Hausdorff).holds);
    CHECK(separation_check(c.sigma, Separation::ZeroDim).holds);
  }
}

TEST_CASE("lifted homomorphisms") {
  auto b2 = FiniteBooleanAlgebra::powerset({"a"});
  auto b4 = FiniteBooleanAlgebra::powerset({"x", "y"});
  auto c2 = canonical_ext(b2), c4 = canonical_ext(b4);
  std::vector<Elem> h{0, 3};
  auto hs = lift_hom(h, c2, c4);
  for (Elem a = 0; a < b2.size(); ++a) CHECK(hs[c2.embed[a]] == c4.embed[h[a]]);
  CHECK_THROWS_AS(lift_hom({0, 1}, c2, c4), Error);
}

TEST_CASE("canonical maps") {
  for (const auto& x : {sierpinski(), discrete(2), indiscrete(2)}) {
    auto m = powerset_mt(x);
    CHECK(eta_map(m).is_iso);
    CHECK(epsilon_map(x).is_iso);
  }
  CHECK(delta_map(sierpinski()).is_iso);
  CHECK_FALSE(delta_map(indiscrete(2)).is_iso);
  CHECK(zeta_map(Frame::from_lattice(chain3())).is_iso);
  CHECK(theta_map(powerset_mt(sierpinski())).is_iso);
  try {
    theta_map(powerset_mt(indiscrete(2)));
    FAIL("non-sober accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSober);
  }
}

TEST_CASE("round trips") {
  auto s = powerset_mt(sierpinski());
  for (auto t : all_roundtrip_targets()) {
    auto r = roundtrip_check(t, s);
    CHECK_MESSAGE(r.outcome != Outcome::Fail, to_string(t), ": ", r.detail);
  }
  CHECK(roundtrip_check(RoundtripTarget::THalfIso, s).outcome == Outcome::Pass);
  CHECK(roundtrip_check(RoundtripTarget::StonePath, s).outcome == Outcome::Vacuous);

  auto i = powerset_mt(indiscrete(2));
  auto th = roundtrip_check(RoundtripTarget::THalfIso, i);
  CHECK(th.outcome == Outcome::Vacuous);
  CHECK(th.detail.find("HypothesisNotMet") != std::string::npos);

  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::string> atoms;
    for (std::size_t k = 0; k < n; ++k) atoms.push_back(std::string(1, static_cast<char>('a' + k)));
    CHECK(stone_path_check(FiniteBooleanAlgebra::powerset(atoms)).outcome == Outcome::Pass);
  }
  auto d = powerset_mt(discrete(2));
  for (auto t : all_roundtrip_targets()) CHECK(roundtrip_check(t, d).outcome == Outcome::Pass);
}

TEST_CASE("mt isomorphism") {
  auto a = powerset_mt(sierpinski());
  auto b = powerset_mt(space({"u", "v"}, {{}, {0}, {0, 1}}));
  auto f = mt_isomorphism(a, b);
  REQUIRE(f.has_value());
  CHECK(is_mt_isomorphism(*f, a, b));
  CHECK_FALSE(mt_isomorphism(a, powerset_mt(discrete(2))).has_value());
}
