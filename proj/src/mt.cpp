#include "mtlab/mt.hpp"

#include <algorithm>
#include <set>

#include "mtlab/subsets.hpp"

namespace mtlab {

namespace {

std::vector<std::string> labels_of(const MTAlgebra& m, std::initializer_list<Elem> elems) {
  std::vector<std::string> out;
  for (Elem e : elems) out.push_back(m.label(e));
  return out;
}

[[noreturn]] void kuratowski(const FiniteBooleanAlgebra& b, const std::string& axiom,
                             std::initializer_list<Elem> witness) {
  std::vector<std::string> w;
  for (Elem e : witness) w.push_back(b.label(e));
  throw Error(ErrorCode::KuratowskiViolation, axiom, w);
}

}  // namespace

MTAlgebra MTAlgebra::from_table(FiniteBooleanAlgebra ba, std::vector<Elem> box) {
  const std::size_t n = ba.size();
  if (box.size() != n) throw Error(ErrorCode::ShapeMismatch, "box table size differs from the algebra");
  for (Elem a = 0; a < n; ++a)
    if (box[a] >= n) throw Error(ErrorCode::ShapeMismatch, "box table refers to a missing element");

  if (box[ba.top()] != ba.top()) kuratowski(ba, "□1 = 1", {ba.top()});
  for (Elem a = 0; a < n; ++a) {
    if (!ba.leq(box[a], a)) kuratowski(ba, "□a <= a", {a});
    if (!ba.leq(box[a], box[box[a]])) kuratowski(ba, "□a <= □□a", {a});
  }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (box[ba.meet(a, b)] != ba.meet(box[a], box[b])) kuratowski(ba, "□(a∧b) = □a∧□b", {a, b});

  MTAlgebra m;
  m.dia_.resize(n);
  m.opens_ = ElemSet(n);
  m.closeds_ = ElemSet(n);
  for (Elem a = 0; a < n; ++a) m.dia_[a] = ba.neg(box[ba.neg(a)]);
  for (Elem a = 0; a < n; ++a) {
    if (box[a] == a) m.opens_.set(a);
    if (m.dia_[a] == a) m.closeds_.set(a);
  }
  m.ba_ = std::move(ba);
  m.box_ = std::move(box);
  return m;
}

Elem closure(const MTAlgebra& m, Elem a) { return m.dia(a); }

// ---------------------------------------------------------------- element classes

ElemSet compact_elements_finite(const MTAlgebra& m) { return m.all(); }

ElemSet compact_elements_bruteforce(const MTAlgebra& m) {
  const SubsetTable t = make_subset_table(m.lattice(), m.opens(), "compactness oracle over O(M)");
  ElemSet out(m.size());
  for (Elem a = 0; a < m.size(); ++a) {
    bool compact = true;
    for (std::uint32_t s = 0; s < t.subset_count() && compact; ++s) {
      if (!m.leq(a, t.joins[s])) continue;
      compact = exists_finite_subfamily(s, [&](std::uint32_t sub) { return m.leq(a, t.joins[sub]); });
    }
    if (compact) out.set(a);
  }
  return out;
}

ElemSet compact_elements_fip(const MTAlgebra& m) {
  const SubsetTable t = make_subset_table(m.lattice(), m.closeds(), "FIP oracle over C(M)");
  ElemSet out(m.size());
  for (Elem a = 0; a < m.size(); ++a) {
    bool compact = true;
    for (std::uint32_t f = 0; f < t.subset_count() && compact; ++f) {
      if (m.meet(t.meets[f], a) != m.bottom()) continue;
      compact = exists_finite_subfamily(f, [&](std::uint32_t g) { return m.meet(t.meets[g], a) == m.bottom(); });
    }
    if (compact) out.set(a);
  }
  return out;
}

bool is_compact_algebra_fip(const MTAlgebra& m) {
  const SubsetTable t = make_subset_table(m.lattice(), m.closeds(), "FIP oracle over C(M)");
  for (std::uint32_t f = 0; f < t.subset_count(); ++f) {
    if (t.meets[f] != m.bottom()) continue;
    if (!exists_finite_subfamily(f, [&](std::uint32_t g) { return t.meets[g] == m.bottom(); })) return false;
  }
  return true;
}

ElementClasses element_classes(const MTAlgebra& m) {
  const std::size_t n = m.size();
  ElementClasses c;
  c.opens = m.opens();
  c.closeds = m.closeds();

  // Meets of families of opens: closure of O(M) ∪ {1} under binary meet.
  c.saturated = c.opens;
  c.saturated.set(m.top());
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> cur = c.saturated.members();
    for (Elem a : cur)
      for (Elem b : cur) {
        const Elem ab = m.meet(a, b);
        if (!c.saturated.test(ab)) {
          c.saturated.set(ab);
          grew = true;
        }
      }
  }

  c.locally_closed = ElemSet(n);
  c.weakly_locally_closed = ElemSet(n);
  c.closeds.for_each([&](Elem f) {
    c.opens.for_each([&](Elem u) { c.locally_closed.set(m.meet(u, f)); });
    c.saturated.for_each([&](Elem s) { c.weakly_locally_closed.set(m.meet(s, f)); });
  });

  c.regular_closed = ElemSet(n);
  for (Elem a = 0; a < n; ++a)
    if (m.dia(m.box(a)) == a) c.regular_closed.set(a);

  // a = ⋀{◇□c | a <= □c}; an empty family would give ⋀∅ = 1.
  c.gc = ElemSet(n);
  for (Elem a = 0; a < n; ++a) {
    Elem acc = m.top();
    for (Elem x = 0; x < n; ++x)
      if (m.leq(a, m.box(x))) acc = m.meet(acc, m.dia(m.box(x)));
    if (acc == a) c.gc.set(a);
  }

  c.clopen = c.opens & c.closeds;

  c.compact = compact_elements_finite(m);
  if (within_size_guard(m.opens().count())) {
    ElemSet oracle = compact_elements_bruteforce(m);
    if (oracle != c.compact)
      throw Error(ErrorCode::OracleDisagreement, "compact elements: subset oracle disagrees with finite rule");
  }
  c.compact_saturated = c.compact & c.saturated;
  return c;
}

// ---------------------------------------------------------------- ◁

Relation wedge_below(const MTAlgebra& m, const ElemSet& compact, bool saturated_witness) {
  ElemSet witnesses = compact;
  if (saturated_witness) witnesses &= element_classes(m).saturated;
  Relation rel(m.size(), ElemSet(m.size()));
  for (Elem a = 0; a < m.size(); ++a)
    (witnesses & m.up(a)).for_each([&](Elem k) { rel[a] |= m.up(k); });
  return rel;
}

Relation wedge_below(const MTAlgebra& m) { return wedge_below(m, element_classes(m).compact); }

// ---------------------------------------------------------------- separation

std::string_view to_string(Separation s) {
  switch (s) {
    case Separation::T0: return "t0";
    case Separation::THalf: return "t_half";
    case Separation::T1: return "t1";
    case Separation::Sober: return "sober";
    case Separation::Hausdorff: return "hausdorff";
    case Separation::Regular: return "regular";
    case Separation::ZeroDim: return "zero_dim";
  }
  return "?";
}

Verdict join_generates(const MTAlgebra& m, const ElemSet& cls) {
  for (Elem a = 0; a < m.size(); ++a)
    if (m.join_of(cls & m.down(a)) != a) return Verdict::no("element is not a join of generators below it", {a});
  return Verdict::yes();
}

namespace {

Verdict sober_check(const MTAlgebra& m, const ElementClasses& c) {
  if (auto t0 = join_generates(m, c.weakly_locally_closed); !t0)
    return Verdict::no("not T0: WLC(M) does not join-generate", t0.witness);
  ElemSet irreducible = join_irreducibles_within(m.lattice(), c.closeds);
  for (Elem p : irreducible.members()) {
    bool found = false;
    m.atoms().for_each([&](Elem x) {
      if (m.dia(x) == p) found = true;
    });
    if (!found) return Verdict::no("join-irreducible closed element is not the closure of an atom", {p});
  }
  return Verdict::yes();
}

/// Every open a equals ⋁{b ∈ candidates | b <= a}.
template <class Keep>
Verdict opens_approximated(const MTAlgebra& m, Keep&& keep, const char* reason) {
  for (Elem a : m.opens().members()) {
    Elem acc = m.bottom();
    for (Elem b = 0; b < m.size(); ++b)
      if (keep(b, a)) acc = m.join(acc, b);
    if (acc != a) return Verdict::no(reason, {a});
  }
  return Verdict::yes();
}

}  // namespace

Verdict separation_check(const MTAlgebra& m, Separation axiom) {
  const ElementClasses c = element_classes(m);
  switch (axiom) {
    case Separation::T0:
      return join_generates(m, c.weakly_locally_closed);
    case Separation::THalf:
      return join_generates(m, c.locally_closed);
    case Separation::T1:
      return join_generates(m, c.closeds);
    case Separation::Hausdorff:
      return join_generates(m, c.gc);
    case Separation::Sober:
      return sober_check(m, c);
    case Separation::Regular: {
      if (auto t1 = join_generates(m, c.closeds); !t1) return Verdict::no("not T1", t1.witness);
      return opens_approximated(
          m, [&](Elem b, Elem a) { return c.opens.test(b) && m.leq(m.dia(b), a); },
          "open element is not the join of opens whose closure lies below it");
    }
    case Separation::ZeroDim: {
      if (auto t1 = join_generates(m, c.closeds); !t1) return Verdict::no("not T1", t1.witness);
      return opens_approximated(
          m, [&](Elem b, Elem a) { return c.clopen.test(b) && m.leq(b, a); },
          "open element is not the join of clopens below it");
    }
  }
  return Verdict::yes();
}

Verdict zero_dim_closed_form(const MTAlgebra& m) {
  const ElementClasses c = element_classes(m);
  if (auto t1 = join_generates(m, c.closeds); !t1) return Verdict::no("not T1", t1.witness);
  for (Elem f : c.closeds.members())
    if (m.meet_of(c.clopen & m.up(f)) != f)
      return Verdict::no("closed element is not the meet of clopens above it", {f});
  return Verdict::yes();
}

// ---------------------------------------------------------------- compactness

std::string_view to_string(Compactness c) {
  switch (c) {
    case Compactness::Compact: return "compact";
    case Compactness::LocallyCompact: return "locally_compact";
    case Compactness::StablyLocallyCompact: return "stably_locally_compact";
    case Compactness::StablyCompact: return "stably_compact";
    case Compactness::LocallyStone: return "locally_stone";
    case Compactness::Stone: return "stone";
  }
  return "?";
}

namespace {

Verdict compact_top(const MTAlgebra& m, const ElementClasses& c) {
  if (!c.compact.test(m.top())) return Verdict::no("top element is not compact", {m.top()});
  return Verdict::yes();
}

Verdict locally_compact(const MTAlgebra& m, const ElementClasses& c) {
  const Relation wedge = wedge_below(m, c.compact);
  for (Elem u : c.opens.members()) {
    Elem acc = m.bottom();
    c.opens.for_each([&](Elem v) {
      if (wedge[v].test(u)) acc = m.join(acc, v);
    });
    if (acc != u) return Verdict::no("open element is not the join of opens ◁ it", {u});
  }
  return Verdict::yes();
}

Verdict stably_locally_compact(const MTAlgebra& m, const ElementClasses& c) {
  if (auto lc = locally_compact(m, c); !lc) return Verdict::no("not locally compact: " + lc.reason, lc.witness);
  if (auto sob = sober_check(m, c); !sob) return Verdict::no("not sober: " + sob.reason, sob.witness);
  for (Elem k : c.compact_saturated.members())
    for (Elem l : c.compact_saturated.members())
      if (!c.compact_saturated.test(m.meet(k, l)))
        return Verdict::no("KS(M) not closed under binary meet", {k, l});
  return Verdict::yes();
}

Verdict locally_stone(const MTAlgebra& m, const ElementClasses& c) {
  if (auto zd = separation_check(m, Separation::ZeroDim); !zd)
    return Verdict::no("not zero-dimensional: " + zd.reason, zd.witness);
  if (auto lc = locally_compact(m, c); !lc) return Verdict::no("not locally compact: " + lc.reason, lc.witness);
  if (auto h = join_generates(m, c.gc); !h) return Verdict::no("not Hausdorff: " + h.reason, h.witness);
  return Verdict::yes();
}

}  // namespace

Verdict compactness_check(const MTAlgebra& m, Compactness kind) {
  const ElementClasses c = element_classes(m);
  switch (kind) {
    case Compactness::Compact:
      return compact_top(m, c);
    case Compactness::LocallyCompact:
      return locally_compact(m, c);
    case Compactness::StablyLocallyCompact:
      return stably_locally_compact(m, c);
    case Compactness::StablyCompact: {
      if (auto s = stably_locally_compact(m, c); !s) return s;
      return compact_top(m, c);
    }
    case Compactness::LocallyStone:
      return locally_stone(m, c);
    case Compactness::Stone: {
      if (auto s = locally_stone(m, c); !s) return s;
      return compact_top(m, c);
    }
  }
  return Verdict::yes();
}

// ---------------------------------------------------------------- filters

bool is_filter(const MTAlgebra& m, const ElemSet& f) {
  if (!f.test(m.top())) return false;
  for (Elem a : f.members()) {
    if (!m.up(a).is_subset_of(f)) return false;
    for (Elem b : f.members())
      if (!f.test(m.meet(a, b))) return false;
  }
  return true;
}

bool is_open_filter(const MTAlgebra& m, const ElemSet& f) {
  if (!is_filter(m, f)) return false;
  bool ok = true;
  f.for_each([&](Elem a) { ok = ok && f.test(m.box(a)); });
  return ok;
}

bool is_open_filter_by_generation(const MTAlgebra& m, const ElemSet& f) {
  ElemSet generated(m.size());
  (f & m.opens()).for_each([&](Elem u) { generated |= m.up(u); });
  return is_filter(m, f) && generated == f;
}

bool is_scott_open_bruteforce(const MTAlgebra& m, const ElemSet& f) {
  const SubsetTable t = make_subset_table(m.lattice(), m.opens(), "Scott-open oracle over O(M)");
  const auto directed = directed_subsets(m.lattice(), t);
  const std::uint32_t in_f = t.mask_of(f);
  for (std::uint32_t s = 1; s < t.subset_count(); ++s)
    if (directed[s] && f.test(t.joins[s]) && (s & in_f) == 0) return false;
  return true;
}

std::vector<ElemSet> frame_filters_of_opens_bruteforce(const MTAlgebra& m) {
  const SubsetTable t = make_subset_table(m.lattice(), m.opens(), "filter enumeration over O(M)");
  const std::size_t k = t.items.size();
  std::vector<ElemSet> out;
  for (std::uint32_t s = 1; s < t.subset_count(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      if (!(s >> i & 1u)) continue;
      for (std::size_t j = 0; j < k && ok; ++j) {
        if (m.leq(t.items[i], t.items[j]) && !(s >> j & 1u)) ok = false;
        if ((s >> j & 1u) && !(s >> std::distance(t.items.begin(), std::find(t.items.begin(), t.items.end(),
                                                                                m.meet(t.items[i], t.items[j]))) &
                               1u))
          ok = false;
      }
    }
    if (!ok) continue;
    ElemSet f(m.size());
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1u) f.set(t.items[i]);
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FilterSet> enumerate_filters(const MTAlgebra& m, FilterKind kind) {
  const SubsetTable t = make_subset_table(m.lattice(), m.opens(), "Scott-open filter enumeration");
  const auto directed = directed_subsets(m.lattice(), t);

  // Filters of the finite frame O(M) are the principal ones ↑g ∩ O(M).
  std::vector<ElemSet> frame_filters;
  for (Elem g : m.opens().members()) frame_filters.push_back(m.up(g) & m.opens());
  std::sort(frame_filters.begin(), frame_filters.end());
  if (frame_filters != frame_filters_of_opens_bruteforce(m))
    throw Error(ErrorCode::OracleDisagreement, "filters of O(M): principal enumeration disagrees with subset scan");

  std::vector<FilterSet> out;
  for (const ElemSet& g : frame_filters) {
    FilterSet f;
    f.members = ElemSet(m.size());
    g.for_each([&](Elem u) { f.members |= m.up(u); });
    f.is_open_filter = is_open_filter(m, f.members) && is_open_filter_by_generation(m, f.members);
    const std::uint32_t in_f = t.mask_of(f.members);
    f.is_scott_open = f.is_open_filter;
    for (std::uint32_t s = 1; s < t.subset_count() && f.is_scott_open; ++s)
      if (directed[s] && f.members.test(t.joins[s]) && (s & in_f) == 0) f.is_scott_open = false;
    if (!f.is_open_filter || !f.is_scott_open)
      throw Error(ErrorCode::OracleDisagreement,
                  "open filter " + set_label(m.lattice().poset().labels(), f.members) +
                      " failed the directed-family check; finite open filters are Scott-open");
    if (kind == FilterKind::Open || f.is_scott_open) out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const FilterSet& a, const FilterSet& b) { return a.members < b.members; });
  return out;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::Vacuous: return "vacuous";
  }
  return "?";
}

CheckReport keimel_paseka_check(const MTAlgebra& m) {
  if (auto sober = separation_check(m, Separation::Sober); !sober)
    return {Outcome::Vacuous, "NotSober: " + sober.reason, sober.witness};
  for (const FilterSet& f : enumerate_filters(m, FilterKind::ScottOpen)) {
    const Elem lower = m.meet_of(f.members);
    for (Elem u : m.opens().members())
      if (m.leq(lower, u) && !f.members.test(u))
        return {Outcome::Fail, "⋀F <= u but u ∉ F", {lower, u}};
  }
  return {Outcome::Pass, {}, {}};
}

HMTable hofmann_mislove(const MTAlgebra& m) {
  if (auto sober = separation_check(m, Separation::Sober); !sober) {
    std::vector<std::string> w;
    for (Elem e : sober.witness) w.push_back(m.label(e));
    throw Error(ErrorCode::NotSober, sober.reason, w);
  }
  const ElementClasses c = element_classes(m);
  HMTable t;
  t.compact_saturated = c.compact_saturated.members();
  t.scott_filters = enumerate_filters(m, FilterKind::ScottOpen);
  auto fail = [&](const std::string& what, std::initializer_list<Elem> w) {
    throw Error(ErrorCode::BijectionFailure, what, labels_of(m, w));
  };

  for (Elem s : t.compact_saturated) {
    ElemSet alpha(m.size());
    for (Elem a = 0; a < m.size(); ++a)
      if (m.leq(s, m.box(a))) alpha.set(a);
    auto it = std::find_if(t.scott_filters.begin(), t.scott_filters.end(),
                           [&](const FilterSet& f) { return f.members == alpha; });
    if (it == t.scott_filters.end()) fail("α(s) is not a Scott-open filter", {s});
    t.alpha.push_back(alpha);
    t.filter_index.push_back(static_cast<std::size_t>(it - t.scott_filters.begin()));
  }
  for (std::size_t i = 0; i < t.compact_saturated.size(); ++i)
    for (std::size_t j = 0; j < t.compact_saturated.size(); ++j) {
      const Elem s = t.compact_saturated[i], r = t.compact_saturated[j];
      if (m.leq(r, s) != t.alpha[i].is_subset_of(t.alpha[j])) fail("α is not an order embedding of (KS, >=)", {s, r});
    }
  for (const FilterSet& f : t.scott_filters) {
    const Elem lower = m.meet_of(f.members);
    if (!c.compact_saturated.test(lower)) fail("⋀F is not compact saturated", {lower});
    auto pos = std::find(t.compact_saturated.begin(), t.compact_saturated.end(), lower);
    if (t.alpha[static_cast<std::size_t>(pos - t.compact_saturated.begin())] != f.members)
      fail("α(⋀F) != F", {lower});
    t.filter_meet.push_back(lower);
  }
  if (t.compact_saturated.size() != t.scott_filters.size()) fail("|KS(M)| != |SFilt(M)|", {});
  return t;
}

// ---------------------------------------------------------------- morphisms

std::vector<Elem> compose(const std::vector<Elem>& g, const std::vector<Elem>& f) {
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

std::vector<Elem> left_adjoint(const std::vector<Elem>& f, const MTAlgebra& m, const MTAlgebra& n) {
  std::vector<Elem> out(n.size());
  for (Elem x = 0; x < n.size(); ++x) {
    ElemSet above(m.size());
    for (Elem a = 0; a < m.size(); ++a)
      if (n.leq(x, f[a])) above.set(a);
    out[x] = m.meet_of(above);
  }
  return out;
}

MTMorphismCheckResult check_mt_morphism(const StructureMap& map, const MTAlgebra& m, const MTAlgebra& n) {
  const auto& f = map.table;
  if (f.size() != m.size()) throw Error(ErrorCode::ShapeMismatch, "map is not total on the source algebra");
  for (Elem v : f)
    if (v >= n.size()) throw Error(ErrorCode::ShapeMismatch, "map value outside the target algebra");

  MTMorphismCheckResult r;
  r.map = map;
  r.is_complete_boolean_hom = true;
  auto fail_hom = [&](std::string why, std::vector<Elem> w) {
    if (r.is_complete_boolean_hom) r.failure = Verdict::no(std::move(why), std::move(w));
    r.is_complete_boolean_hom = false;
  };
  if (f[m.bottom()] != n.bottom()) fail_hom("f(0) != 0", {m.bottom()});
  if (f[m.top()] != n.top()) fail_hom("f(1) != 1", {m.top()});
  for (Elem a = 0; a < m.size() && r.is_complete_boolean_hom; ++a) {
    if (f[m.neg(a)] != n.neg(f[a])) fail_hom("f(¬a) != ¬f(a)", {a});
    for (Elem b = a + 1; b < m.size() && r.is_complete_boolean_hom; ++b) {
      if (f[m.meet(a, b)] != n.meet(f[a], f[b])) fail_hom("f(a∧b) != f(a)∧f(b)", {a, b});
      if (f[m.join(a, b)] != n.join(f[a], f[b])) fail_hom("f(a∨b) != f(a)∨f(b)", {a, b});
    }
  }
  // Arbitrary joins are finite here; spot-check them all under the guard.
  if (r.is_complete_boolean_hom && within_size_guard(m.size())) {
    const SubsetTable t = make_subset_table(m.lattice(), m.all(), "complete-join check");
    for (std::uint32_t s = 0; s < t.subset_count() && r.is_complete_boolean_hom; ++s) {
      Elem image = n.bottom();
      for (std::uint32_t b = s; b; b &= b - 1) image = n.join(image, f[t.items[std::countr_zero(b)]]);
      if (f[t.joins[s]] != image) fail_hom("f(⋁S) != ⋁f[S]", {t.joins[s]});
    }
  }

  r.is_mt_morphism = r.is_complete_boolean_hom;
  for (Elem a = 0; a < m.size() && r.is_mt_morphism; ++a)
    if (!n.leq(f[m.box(a)], n.box(f[a]))) {
      r.is_mt_morphism = false;
      r.failure = Verdict::no("f(□a) is not below □f(a)", {a});
    }

  r.left_adjoint = left_adjoint(f, m, n);
  if (r.is_complete_boolean_hom) {
    for (Elem x = 0; x < n.size(); ++x)
      for (Elem a = 0; a < m.size(); ++a)
        if (m.leq(r.left_adjoint[x], a) != n.leq(x, f[a]))
          throw Error(ErrorCode::OracleDisagreement, "f* is not left adjoint to f");
  }

  if (r.is_mt_morphism) {
    const ElementClasses cm = element_classes(m), cn = element_classes(n);
    bool via_ks = true, via_k = true;
    cm.compact_saturated.for_each([&](Elem a) {
      via_ks = via_ks && cn.compact_saturated.test(f[a]);
      via_k = via_k && cn.compact.test(f[a]);
    });
    if (via_ks != via_k) throw Error(ErrorCode::OracleDisagreement, "properness via KS and via K disagree");
    r.is_proper = via_ks;
  }
  r.map.proper = r.is_proper;
  return r;
}

}  // namespace mtlab
