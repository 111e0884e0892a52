#include "doctest.h"
#include "helpers.hpp"

using namespace mtlab;
using namespace mtlab::test;

TEST_CASE("validate_frame") {
  CHECK(Frame::from_lattice(chain3()).size() == 3);
  CHECK(Frame::from_lattice(FiniteBooleanAlgebra::powerset({"a", "b"}).lattice()).size() == 4);
  try {
    Frame::from_lattice(m3());
    FAIL("M3 accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotDistributive);
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("way below") {
  auto l = Frame::from_lattice(chain3());
  auto wb = way_below(l);
  auto brute = way_below_bruteforce(l);
  CHECK(wb == brute);
  for (Elem a = 0; a < l.size(); ++a) {
    CHECK(wb[a] == l.up(a));
    CHECK(wb[l.bottom()].test(a));
  }
}

TEST_CASE("frame predicates") {
  auto c = Frame::from_lattice(chain3());
  CHECK(frame_predicate(c, FramePredicate::Continuous).holds);
  CHECK(frame_predicate(c, FramePredicate::Spatial).holds);
  auto zd = frame_predicate(c, FramePredicate::ZeroDim);
  CHECK_FALSE(zd.holds);
  CHECK(zd.witness == std::vector<Elem>{1});

  for (std::size_t n = 0; n <= 3; ++n) {
    std::vector<std::string> atoms;
    for (std::size_t i = 0; i < n; ++i) atoms.push_back(std::string(1, static_cast<char>('a' + i)));
    auto p = Frame::from_lattice(FiniteBooleanAlgebra::powerset(atoms).lattice());
    for (auto pred : all_frame_predicates()) CHECK(frame_predicate(p, pred).holds);
  }
}

TEST_CASE("points") {
  auto c = Frame::from_lattice(chain3());
  auto pts = points(c);
  CHECK(pts.points.size() == 2);
  auto ps = points_space(c);
  CHECK(homeomorphism(ps.space, sierpinski()).has_value());

  auto p3 = Frame::from_lattice(FiniteBooleanAlgebra::powerset({"a", "b", "c"}).lattice());
  auto ps3 = points_space(p3);
  CHECK(ps3.space.size() == 3);
  CHECK(ps3.space.opens().size() == 8);

  auto one = Frame::from_lattice(FiniteLattice::from_poset(FinitePoset::from_pairs({"*"}, {})));
  CHECK(points(one).points.empty());
  for (const auto& p : pts.points) CHECK(is_completely_prime_bruteforce(c, p));
}

TEST_CASE("frame homomorphisms") {
  auto c = Frame::from_lattice(chain3());
  auto id = check_frame_hom({0, 1, 2}, c, c);
  CHECK(id.is_frame_hom);
  CHECK(id.is_proper);
  auto top = check_frame_hom({2, 2, 2}, c, c);
  CHECK_FALSE(top.is_frame_hom);
  CHECK(top.failure.reason == "h(0) != 0");

  // 3-chain onto 2-chain collapsing m to 1.
  auto two = Frame::from_lattice(FiniteLattice::from_poset(chain({"0", "1"})));
  auto h = check_frame_hom({0, 1, 1}, c, two);
  CHECK(h.is_frame_hom);
  CHECK(h.is_proper);
  auto pt = pt_map({0, 1, 1}, c, points(c), two, points(two));
  CHECK(pt.size() == 1);
}

TEST_CASE("scott open filters of frames") {
  auto c = Frame::from_lattice(chain3());
  auto fs = frame_filters(c);
  CHECK(fs.size() == 3);
  for (const auto& f : fs) CHECK(f.is_scott_open);
}
