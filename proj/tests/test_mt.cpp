#include "doctest.h"
#include "helpers.hpp"

using namespace mtlab;
using namespace mtlab::test;

TEST_CASE("validate_mt") {
  auto m = powerset_mt(sierpinski());
  CHECK(m.size() == 4);
  CHECK(m.opens() == elems(m, {"{}", "{1}", "{0,1}"}));

  auto b = FiniteBooleanAlgebra::powerset({"a", "b"});
  std::vector<Elem> id{0, 1, 2, 3};
  CHECK(MTAlgebra::from_table(b, id).opens().count() == 4);

  try {
    MTAlgebra::from_table(b, {0, 0, 0, 0});
    FAIL("□1 = 0 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KuratowskiViolation);
    CHECK(std::string(e.what()).find("□1 = 1") != std::string::npos);
  }
  try {
    MTAlgebra::from_table(b, {0, 3, 2, 3});
    FAIL("□a <= a violation accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KuratowskiViolation);
  }
}

TEST_CASE("closure") {
  auto m = powerset_mt(sierpinski());
  CHECK(closure(m, el(m, "{1}")) == el(m, "{0,1}"));
  CHECK(closure(m, el(m, "{0}")) == el(m, "{0}"));
  CHECK(closure(m, el(m, "{}")) == el(m, "{}"));
}

TEST_CASE("derived diamond laws") {
  for (const auto& x : {sierpinski(), discrete(2), indiscrete(3)}) {
    auto m = powerset_mt(x);
    CHECK(m.dia(m.bottom()) == m.bottom());
    for (Elem a = 0; a < m.size(); ++a) {
      CHECK(m.leq(a, m.dia(a)));
      CHECK(m.leq(m.dia(m.dia(a)), m.dia(a)));
      for (Elem b = 0; b < m.size(); ++b) CHECK(m.dia(m.join(a, b)) == m.join(m.dia(a), m.dia(b)));
    }
  }
}

TEST_CASE("element classes of the Sierpinski algebra") {
  auto m = powerset_mt(sierpinski());
  auto c = element_classes(m);
  CHECK(c.closeds == elems(m, {"{}", "{0}", "{0,1}"}));
  CHECK(c.saturated == elems(m, {"{}", "{1}", "{0,1}"}));
  CHECK(c.clopen == elems(m, {"{}", "{0,1}"}));
  CHECK(c.compact == m.all());
  CHECK(c.compact_saturated == elems(m, {"{}", "{1}", "{0,1}"}));
  CHECK(c.locally_closed == m.all());
  CHECK(c.opens.is_subset_of(c.saturated));
  CHECK(c.locally_closed.is_subset_of(c.weakly_locally_closed));
}

TEST_CASE("element classes of discrete and indiscrete spaces") {
  auto d = powerset_mt(discrete(2));
  auto cd = element_classes(d);
  for (const ElemSet* s : {&cd.opens, &cd.closeds, &cd.saturated, &cd.locally_closed, &cd.weakly_locally_closed,
                           &cd.regular_closed, &cd.gc, &cd.clopen, &cd.compact, &cd.compact_saturated})
    CHECK(*s == d.all());

  auto i = powerset_mt(indiscrete(2));
  auto ci = element_classes(i);
  const ElemSet bounds = elems(i, {"{}", "{0,1}"});
  CHECK(ci.opens == bounds);
  CHECK(ci.closeds == bounds);
  CHECK(ci.saturated == bounds);
  CHECK(ci.locally_closed == bounds);
  CHECK(ci.weakly_locally_closed == bounds);
  CHECK(ci.clopen == bounds);
  CHECK(ci.compact == i.all());
}

TEST_CASE("compactness oracles") {
  for (const auto& x : {sierpinski(), discrete(3), indiscrete(2)}) {
    auto m = powerset_mt(x);
    CHECK(compact_elements_bruteforce(m) == compact_elements_finite(m));
    CHECK(compact_elements_fip(m) == compact_elements_finite(m));
    CHECK(is_compact_algebra_fip(m));
  }
  set_size_guard(1);
  CHECK_THROWS_AS(compact_elements_bruteforce(powerset_mt(sierpinski())), Error);
  set_size_guard(20);
}

TEST_CASE("wedge below") {
  auto m = powerset_mt(sierpinski());
  auto w = wedge_below(m);
  for (Elem a = 0; a < m.size(); ++a) {
    CHECK(w[a] == m.up(a));
    CHECK(w[m.bottom()].test(a));
  }
}

TEST_CASE("separation axioms of the Sierpinski algebra") {
  auto m = powerset_mt(sierpinski());
  CHECK(separation_check(m, Separation::T0).holds);
  CHECK(separation_check(m, Separation::THalf).holds);
  CHECK(separation_check(m, Separation::Sober).holds);
  auto t1 = separation_check(m, Separation::T1);
  CHECK_FALSE(t1.holds);
  CHECK(t1.witness == std::vector<Elem>{el(m, "{1}")});
  CHECK_FALSE(separation_check(m, Separation::Hausdorff).holds);
  CHECK_FALSE(separation_check(m, Separation::Regular).holds);
  CHECK_FALSE(separation_check(m, Separation::ZeroDim).holds);
}

TEST_CASE("separation axioms of discrete and indiscrete algebras") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto m = powerset_mt(discrete(n));
    for (auto s : {Separation::T0, Separation::THalf, Separation::T1, Separation::Sober, Separation::Hausdorff,
                   Separation::Regular, Separation::ZeroDim})
      CHECK(separation_check(m, s).holds);
  }
  auto i = powerset_mt(indiscrete(2));
  CHECK_FALSE(separation_check(i, Separation::T0).holds);
  CHECK_FALSE(separation_check(i, Separation::Sober).holds);
}

TEST_CASE("compactness predicates") {
  auto s = powerset_mt(sierpinski());
  CHECK(compactness_check(s, Compactness::Compact).holds);
  CHECK(compactness_check(s, Compactness::LocallyCompact).holds);
  CHECK(compactness_check(s, Compactness::StablyLocallyCompact).holds);
  auto ls = compactness_check(s, Compactness::LocallyStone);
  CHECK_FALSE(ls.holds);
  CHECK(ls.reason.find("zero-dimensional") != std::string::npos);
  CHECK(compactness_check(powerset_mt(discrete(2)), Compactness::Stone).holds);
}

TEST_CASE("open filters") {
  auto s = powerset_mt(sierpinski());
  auto fs = enumerate_filters(s, FilterKind::Open);
  REQUIRE(fs.size() == 3);
  std::vector<ElemSet> members;
  for (const auto& f : fs) {
    CHECK(f.is_open_filter);
    CHECK(f.is_scott_open);
    members.push_back(f.members);
  }
  CHECK(std::find(members.begin(), members.end(), elems(s, {"{0,1}"})) != members.end());
  CHECK(std::find(members.begin(), members.end(), elems(s, {"{1}", "{0,1}"})) != members.end());
  CHECK(std::find(members.begin(), members.end(), s.all()) != members.end());

  auto one = MTAlgebra::from_table(FiniteBooleanAlgebra::powerset({}), {0});
  CHECK(enumerate_filters(one, FilterKind::Open).size() == 1);
  CHECK(enumerate_filters(powerset_mt(discrete(2)), FilterKind::Open).size() == 4);
}

TEST_CASE("open filter correspondence with filters of O(M)") {
  for (const auto& x : {sierpinski(), discrete(2), indiscrete(3)}) {
    auto m = powerset_mt(x);
    auto frame_filters = frame_filters_of_opens_bruteforce(m);
    auto fs = enumerate_filters(m, FilterKind::Open);
    CHECK(fs.size() == frame_filters.size());
    for (const auto& f : fs) {
      ElemSet g = f.members & m.opens();
      CHECK(std::find(frame_filters.begin(), frame_filters.end(), g) != frame_filters.end());
      ElemSet up(m.size());
      g.for_each([&](Elem u) { up |= m.up(u); });
      CHECK(up == f.members);
      CHECK(is_scott_open_bruteforce(m, f.members));
    }
  }
}

TEST_CASE("keimel paseka") {
  CHECK(keimel_paseka_check(powerset_mt(sierpinski())).outcome == Outcome::Pass);
  CHECK(keimel_paseka_check(powerset_mt(discrete(3))).outcome == Outcome::Pass);
  auto r = keimel_paseka_check(powerset_mt(indiscrete(2)));
  CHECK(r.outcome == Outcome::Vacuous);
  CHECK(r.detail.find("NotSober") != std::string::npos);
}

TEST_CASE("hofmann mislove") {
  auto s = powerset_mt(sierpinski());
  auto t = hofmann_mislove(s);
  REQUIRE(t.compact_saturated.size() == 3);
  REQUIRE(t.scott_filters.size() == 3);
  for (std::size_t i = 0; i < t.compact_saturated.size(); ++i) {
    Elem k = t.compact_saturated[i];
    ElemSet expected(s.size());
    for (Elem a = 0; a < s.size(); ++a)
      if (s.leq(k, s.box(a))) expected.set(a);
    CHECK(t.alpha[i] == expected);
  }
  auto alpha_of = [&](const std::string& label) {
    auto it = std::find(t.compact_saturated.begin(), t.compact_saturated.end(), el(s, label));
    return t.alpha[static_cast<std::size_t>(it - t.compact_saturated.begin())];
  };
  CHECK(alpha_of("{0,1}") == elems(s, {"{0,1}"}));
  CHECK(alpha_of("{1}") == elems(s, {"{1}", "{0,1}"}));
  CHECK(alpha_of("{}") == s.all());

  CHECK(hofmann_mislove(powerset_mt(discrete(1))).compact_saturated.size() == 2);
  auto d3 = hofmann_mislove(powerset_mt(discrete(3)));
  CHECK(d3.compact_saturated.size() == 8);
  CHECK(d3.scott_filters.size() == 8);

  try {
    hofmann_mislove(powerset_mt(indiscrete(2)));
    FAIL("non-sober accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSober);
  }
}

TEST_CASE("mt morphisms") {
  auto s = powerset_mt(sierpinski());
  StructureMap id{MapKind::MTMorphism, {0, 1, 2, 3}, false};
  auto r = check_mt_morphism(id, s, s);
  CHECK(r.is_mt_morphism);
  CHECK(r.is_proper);
  CHECK(r.left_adjoint == id.table);

  // Sierpiński -> point; P(f) sends ∅ to ∅ and the point to X.
  auto point = powerset_mt(discrete(1));
  StructureMap pre{MapKind::MTMorphism, {0, 3}, false};
  auto rp = check_mt_morphism(pre, point, s);
  CHECK(rp.is_mt_morphism);
  for (Elem x = 0; x < s.size(); ++x)
    for (Elem a = 0; a < point.size(); ++a) CHECK(point.leq(rp.left_adjoint[x], a) == s.leq(x, pre.table[a]));

  // Identity of the boolean algebra from the discrete to the Sierpiński table
  // is a boolean hom but f(□{0}) = {0} is not below □{0} = ∅.
  auto d = powerset_mt(discrete(2));
  auto rf = check_mt_morphism(id, d, s);
  CHECK(rf.is_complete_boolean_hom);
  CHECK_FALSE(rf.is_mt_morphism);
  CHECK(rf.failure.witness == std::vector<Elem>{el(d, "{0}")});

  StructureMap not_hom{MapKind::MTMorphism, {0, 0, 0, 3}, false};
  CHECK_FALSE(check_mt_morphism(not_hom, s, s).is_complete_boolean_hom);
  StructureMap short_map{MapKind::MTMorphism, {0, 3}, false};
  CHECK_THROWS_AS(check_mt_morphism(short_map, s, s), Error);
}
