#include "mtlab/functors.hpp"

#include <algorithm>
#include <array>

#include "mtlab/subsets.hpp"

namespace mtlab {

namespace {

template <class T>
std::optional<Elem> position(const std::vector<T>& sorted, const T& v) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), v);
  if (it == sorted.end() || *it != v) return std::nullopt;
  return static_cast<Elem>(it - sorted.begin());
}

std::optional<Elem> atom_position(const MTAlgebra& m, Elem atom) {
  return position(m.ba().atom_list(), atom);
}

void fill_bijectivity(CanonicalMap& c, std::size_t target_size) {
  ElemSet hit(target_size);
  c.is_injective = true;
  for (Elem v : c.table) {
    if (hit.test(v)) c.is_injective = false;
    hit.set(v);
  }
  c.is_surjective = hit.count() == target_size;
}

std::vector<std::string> element_labels(const MTAlgebra& m, const std::vector<Elem>& w) {
  std::vector<std::string> out;
  for (Elem e : w) out.push_back(m.label(e));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- P and at

MTAlgebra powerset_mt(const FiniteSpace& x) {
  if (x.size() > kMaxPowersetPoints)
    throw Error(ErrorCode::SizeGuardExceeded, "powerset of " + std::to_string(x.size()) + " points exceeds " +
                                                  std::to_string(kMaxPowersetPoints));
  FiniteBooleanAlgebra ba = FiniteBooleanAlgebra::powerset(x.labels());
  std::vector<Elem> box(ba.size());
  for (Elem a = 0; a < ba.size(); ++a)
    box[a] = static_cast<Elem>(x.interior(ElemSet::from_mask(x.size(), a)).low_word());
  return MTAlgebra::from_table(std::move(ba), std::move(box));
}

StructureMap powerset_mt_map(const std::vector<Elem>& f, const FiniteSpace& x, const FiniteSpace& y) {
  const ContinuousMapCheck c = check_map(f, x, y);
  if (!c.is_continuous)
    throw Error(ErrorCode::NotMTMorphism, "P(f) needs a continuous map: " + c.failure.reason,
                {set_label(y, c.failing_set)});
  StructureMap sm;
  sm.kind = MapKind::MTMorphism;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << y.size()); ++b)
    sm.table.push_back(static_cast<Elem>(preimage(f, x.size(), ElemSet::from_mask(y.size(), b)).low_word()));
  const MTMorphismCheckResult r = check_mt_morphism(sm, powerset_mt(y), powerset_mt(x));
  if (!r.is_mt_morphism) throw Error(ErrorCode::OracleDisagreement, "preimage of a continuous map: " + r.failure.reason);
  sm.proper = r.is_proper;
  return sm;
}

std::vector<ElemSet> eta_sets(const MTAlgebra& m) {
  const auto& atoms = m.ba().atom_list();
  std::vector<ElemSet> out(m.size(), ElemSet(atoms.size()));
  for (Elem a = 0; a < m.size(); ++a)
    for (Elem i = 0; i < atoms.size(); ++i)
      if (m.leq(atoms[i], a)) out[a].set(i);
  return out;
}

FiniteSpace atoms_space(const MTAlgebra& m) {
  std::vector<std::string> labels;
  for (Elem x : m.ba().atom_list()) labels.push_back(m.label(x));
  const std::vector<ElemSet> eta = eta_sets(m);
  std::vector<ElemSet> opens;
  m.opens().for_each([&](Elem u) { opens.push_back(eta[u]); });
  return FiniteSpace::from_opens(std::move(labels), std::move(opens));
}

std::vector<Elem> atoms_map(const StructureMap& f, const MTAlgebra& m, const MTAlgebra& n) {
  const MTMorphismCheckResult r = check_mt_morphism(f, m, n);
  if (!r.is_mt_morphism)
    throw Error(ErrorCode::NotMTMorphism, r.failure.reason, element_labels(m, r.failure.witness));
  std::vector<Elem> out;
  for (Elem y : n.ba().atom_list()) {
    auto pos = atom_position(m, r.left_adjoint[y]);
    if (!pos) throw Error(ErrorCode::OracleDisagreement, "f* sends atom " + n.label(y) + " to a non-atom");
    out.push_back(*pos);
  }
  if (!check_map(out, atoms_space(n), atoms_space(m)).is_continuous)
    throw Error(ErrorCode::OracleDisagreement, "at(f) is not continuous");
  return out;
}

// ---------------------------------------------------------------- O, Ω and pt

OpensFrame opens_frame(const MTAlgebra& m) {
  OpensFrame o;
  o.elements = m.opens().members();
  o.frame = Frame::from_lattice(FiniteLattice::from_poset(m.lattice().poset().restrict(m.opens())));
  return o;
}

std::vector<Elem> opens_map(const StructureMap& f, const OpensFrame& om, const OpensFrame& on) {
  std::vector<Elem> out;
  for (Elem u : om.elements) {
    auto pos = position(on.elements, f.table[u]);
    if (!pos) throw Error(ErrorCode::NotMTMorphism, "image of an open element is not open");
    out.push_back(*pos);
  }
  return out;
}

Frame omega(const FiniteSpace& x) {
  const auto& opens = x.opens();
  std::vector<std::string> labels;
  std::vector<ElemSet> up(opens.size(), ElemSet(opens.size()));
  for (Elem i = 0; i < opens.size(); ++i) {
    labels.push_back(set_label(x, opens[i]));
    for (Elem j = 0; j < opens.size(); ++j)
      if (opens[i].is_subset_of(opens[j])) up[i].set(j);
  }
  return Frame::from_lattice(FiniteLattice::from_poset(FinitePoset::from_up_sets(std::move(labels), std::move(up))));
}

std::vector<Elem> omega_map(const std::vector<Elem>& f, const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<Elem> out;
  for (const ElemSet& v : y.opens()) {
    auto pos = position(x.opens(), preimage(f, x.size(), v));
    if (!pos) throw Error(ErrorCode::NotFrameHom, "preimage of an open set is not open", {set_label(y, v)});
    out.push_back(*pos);
  }
  return out;
}

PointSpace points_space(const Frame& l) {
  PointSpace ps;
  ps.points = points(l);
  std::vector<std::string> labels;
  for (const ElemSet& p : ps.points.points) labels.push_back(l.label(l.meet_of(p)));
  ps.space = FiniteSpace::from_opens(std::move(labels), ps.points.zeta);
  return ps;
}

// ---------------------------------------------------------------- B(L)

BoolExt bool_ext_mt(const Frame& l) {
  const BirkhoffRepr br = birkhoff(l.lattice());
  std::vector<std::string> jlabels;
  for (Elem j : br.j_elements) jlabels.push_back(l.label(j));
  if (jlabels.size() > kMaxPowersetPoints)
    throw Error(ErrorCode::SizeGuardExceeded, "free boolean extension over " + std::to_string(jlabels.size()) +
                                                  " join-irreducibles");
  const FiniteBooleanAlgebra b = FiniteBooleanAlgebra::powerset(jlabels);
  std::vector<Elem> e(l.size());
  for (Elem a = 0; a < l.size(); ++a) e[a] = static_cast<Elem>(br.embed[a].low_word());

  // □ on B(L): right adjoint of e.
  std::vector<Elem> box_b(b.size(), b.bottom());
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem a = 0; a < l.size(); ++a)
      if (b.leq(e[a], x)) box_b[x] = b.join(box_b[x], e[a]);

  const MacNeilleCompletion mn = macneille_completion(b.lattice().poset());
  FiniteBooleanAlgebra bar = FiniteBooleanAlgebra::from_lattice(mn.lattice);
  std::vector<Elem> box(bar.size(), bar.bottom());
  for (Elem x = 0; x < bar.size(); ++x)
    for (Elem a = 0; a < b.size(); ++a)
      if (bar.leq(mn.embed[a], x)) box[x] = bar.join(box[x], mn.embed[box_b[a]]);

  BoolExt out;
  out.algebra = MTAlgebra::from_table(std::move(bar), std::move(box));
  for (Elem a = 0; a < l.size(); ++a) out.embed.push_back(mn.embed[e[a]]);

  const OpensFrame o = opens_frame(out.algebra);
  std::vector<Elem> onto(l.size());
  for (Elem a = 0; a < l.size(); ++a) {
    auto pos = position(o.elements, out.embed[a]);
    if (!pos) throw Error(ErrorCode::OracleDisagreement, "e(a) is not open in the boolean extension");
    onto[a] = *pos;
  }
  if (!is_order_isomorphism(l.lattice().poset(), o.frame.lattice().poset(), onto))
    throw Error(ErrorCode::OracleDisagreement, "O of the boolean extension is not isomorphic to L via e");
  return out;
}

// ---------------------------------------------------------------- canonical extension

Verdict check_boolean_hom(const std::vector<Elem>& h, const FiniteBooleanAlgebra& a, const FiniteBooleanAlgebra& b) {
  if (h.size() != a.size()) throw Error(ErrorCode::ShapeMismatch, "map is not total on the source algebra");
  for (Elem v : h)
    if (v >= b.size()) throw Error(ErrorCode::ShapeMismatch, "map value outside the target algebra");
  if (h[a.bottom()] != b.bottom()) return Verdict::no("h(0) != 0", {a.bottom()});
  if (h[a.top()] != b.top()) return Verdict::no("h(1) != 1", {a.top()});
  for (Elem x = 0; x < a.size(); ++x) {
    if (h[a.neg(x)] != b.neg(h[x])) return Verdict::no("h(¬x) != ¬h(x)", {x});
    for (Elem y = x + 1; y < a.size(); ++y) {
      if (h[a.meet(x, y)] != b.meet(h[x], h[y])) return Verdict::no("h(x∧y) != h(x)∧h(y)", {x, y});
      if (h[a.join(x, y)] != b.join(h[x], h[y])) return Verdict::no("h(x∨y) != h(x)∨h(y)", {x, y});
    }
  }
  return Verdict::yes();
}

namespace {

bool is_ultrafilter(const FiniteBooleanAlgebra& b, const ElemSet& u) {
  if (!u.test(b.top()) || u.test(b.bottom())) return false;
  for (Elem x = 0; x < b.size(); ++x) {
    if (u.test(x) == u.test(b.neg(x))) return false;
    if (!u.test(x)) continue;
    if (!b.lattice().poset().up(x).is_subset_of(u)) return false;
    for (Elem y : u.members())
      if (!u.test(b.meet(x, y))) return false;
  }
  return true;
}

}  // namespace

CanonicalExtension canonical_ext(const FiniteBooleanAlgebra& b) {
  CanonicalExtension ce;
  ce.base = b;
  for (Elem a = 0; a < b.size(); ++a) {
    ElemSet f = b.lattice().poset().up(a);
    if (is_ultrafilter(b, f)) ce.ultrafilters.push_back(std::move(f));
  }
  std::sort(ce.ultrafilters.begin(), ce.ultrafilters.end());
  if (ce.ultrafilters.size() != b.atoms().count())
    throw Error(ErrorCode::OracleDisagreement, "ultrafilters are not in bijection with atoms");
  if (ce.ultrafilters.size() > kMaxPowersetPoints)
    throw Error(ErrorCode::SizeGuardExceeded, "canonical extension over too many ultrafilters");

  std::vector<std::string> labels;
  for (const ElemSet& u : ce.ultrafilters) labels.push_back(b.label(b.lattice().meet_of(u)));
  FiniteBooleanAlgebra sigma = FiniteBooleanAlgebra::powerset(labels);
  ce.embed.resize(b.size());
  for (Elem c = 0; c < b.size(); ++c) {
    Elem mask = 0;
    for (Elem i = 0; i < ce.ultrafilters.size(); ++i)
      if (ce.ultrafilters[i].test(c)) mask |= Elem{1} << i;
    ce.embed[c] = mask;
  }
  if (auto v = check_boolean_hom(ce.embed, b, sigma); !v)
    throw Error(ErrorCode::OracleDisagreement, "e is not a boolean homomorphism: " + v.reason);

  std::vector<Elem> box(sigma.size(), sigma.bottom());
  for (Elem a = 0; a < sigma.size(); ++a)
    for (Elem c = 0; c < b.size(); ++c)
      if (sigma.leq(ce.embed[c], a)) box[a] = sigma.join(box[a], ce.embed[c]);
  ce.sigma = MTAlgebra::from_table(sigma, std::move(box));

  for (Elem a = 0; a < ce.sigma.size(); ++a) {
    Elem upper = ce.sigma.top();
    for (Elem c = 0; c < b.size(); ++c)
      if (ce.sigma.leq(a, ce.embed[c])) upper = ce.sigma.meet(upper, ce.embed[c]);
    if (upper != ce.sigma.dia(a)) throw Error(ErrorCode::OracleDisagreement, "◇a != ⋀{c ∈ B | a <= c}");
  }

  // Density: meets of families from e[B], then joins of those.
  ElemSet meets(ce.sigma.size());
  meets.set(ce.sigma.top());
  for (Elem c : ce.embed) meets.set(c);
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem x : meets.members())
      for (Elem y : meets.members())
        if (!meets.test(ce.sigma.meet(x, y))) {
          meets.set(ce.sigma.meet(x, y));
          grew = true;
        }
  }
  for (Elem a = 0; a < ce.sigma.size(); ++a)
    if (ce.sigma.join_of(meets & ce.sigma.down(a)) != a)
      throw Error(ErrorCode::OracleDisagreement, "element of B^σ is not a join of meets from B");

  // Compactness: with S0 = S and T0 = T it suffices that e preserves and
  // reflects the meets and joins of all families S, T ⊆ B.
  if (within_size_guard(b.size())) {
    const SubsetTable t = make_subset_table(b.lattice(), ElemSet::full(b.size()), "canonical extension compactness");
    for (std::uint32_t s = 0; s < t.subset_count(); ++s) {
      Elem m = ce.sigma.top(), j = ce.sigma.bottom();
      for (std::uint32_t r = s; r; r &= r - 1) {
        const Elem c = ce.embed[t.items[std::countr_zero(r)]];
        m = ce.sigma.meet(m, c);
        j = ce.sigma.join(j, c);
      }
      if (m != ce.embed[t.meets[s]] || j != ce.embed[t.joins[s]])
        throw Error(ErrorCode::OracleDisagreement, "e does not preserve a meet or join of a family");
    }
  }
  for (Elem x = 0; x < b.size(); ++x)
    for (Elem y = 0; y < b.size(); ++y)
      if (b.leq(x, y) != ce.sigma.leq(ce.embed[x], ce.embed[y]))
        throw Error(ErrorCode::OracleDisagreement, "e is not an order embedding");
  return ce;
}

std::vector<Elem> lift_hom(const std::vector<Elem>& h, const CanonicalExtension& a, const CanonicalExtension& b) {
  if (auto v = check_boolean_hom(h, a.base, b.base); !v) {
    std::vector<std::string> w;
    for (Elem e : v.witness) w.push_back(a.base.label(e));
    throw Error(ErrorCode::NotBooleanHom, v.reason, w);
  }
  const std::size_t ka = a.ultrafilters.size();
  // Image of the singleton {u}: ⋀ e(h[u]).
  std::vector<Elem> point_image(ka);
  for (Elem i = 0; i < ka; ++i) {
    Elem acc = b.sigma.top();
    a.ultrafilters[i].for_each([&](Elem c) { acc = b.sigma.meet(acc, b.embed[h[c]]); });
    point_image[i] = acc;
  }
  // Uf(h)(q) = h^{-1}[q].
  std::vector<Elem> uf_h;
  for (const ElemSet& q : b.ultrafilters) {
    ElemSet pre(a.base.size());
    for (Elem c = 0; c < a.base.size(); ++c)
      if (q.test(h[c])) pre.set(c);
    auto pos = position(a.ultrafilters, pre);
    if (!pos) throw Error(ErrorCode::OracleDisagreement, "preimage of an ultrafilter is not an ultrafilter");
    uf_h.push_back(*pos);
  }

  std::vector<Elem> out(a.sigma.size());
  for (Elem s = 0; s < a.sigma.size(); ++s) {
    Elem joined = b.sigma.bottom();
    for (Elem i = 0; i < ka; ++i)
      if (s >> i & 1u) joined = b.sigma.join(joined, point_image[i]);
    Elem pulled = 0;
    for (Elem j = 0; j < uf_h.size(); ++j)
      if (s >> uf_h[j] & 1u) pulled |= Elem{1} << j;
    if (joined != pulled) throw Error(ErrorCode::OracleDisagreement, "h^σ: image and Uf(h)-preimage routes differ");
    out[s] = joined;
  }
  for (Elem c = 0; c < a.base.size(); ++c)
    if (out[a.embed[c]] != b.embed[h[c]]) throw Error(ErrorCode::OracleDisagreement, "h^σ does not extend h");
  return out;
}

ClopenAlgebra clopen_algebra(const MTAlgebra& m) {
  ClopenAlgebra c;
  const ElemSet cl = m.opens() & m.closeds();
  c.elements = cl.members();
  c.ba = FiniteBooleanAlgebra::from_lattice(FiniteLattice::from_poset(m.lattice().poset().restrict(cl)));
  return c;
}

// ---------------------------------------------------------------- canonical maps

std::string_view to_string(CanonicalKind k) {
  switch (k) {
    case CanonicalKind::Eta: return "eta";
    case CanonicalKind::Epsilon: return "epsilon";
    case CanonicalKind::Zeta: return "zeta";
    case CanonicalKind::Delta: return "delta";
    case CanonicalKind::Theta: return "theta";
  }
  return "?";
}

CanonicalMap eta_map(const MTAlgebra& m) {
  CanonicalMap c;
  c.kind = CanonicalKind::Eta;
  for (const ElemSet& s : eta_sets(m)) c.table.push_back(static_cast<Elem>(s.low_word()));
  const MTAlgebra p = powerset_mt(atoms_space(m));
  fill_bijectivity(c, p.size());
  c.is_iso = c.is_injective && c.is_surjective && is_mt_isomorphism(c.table, m, p);
  return c;
}

CanonicalMap epsilon_map(const FiniteSpace& x) {
  CanonicalMap c;
  c.kind = CanonicalKind::Epsilon;
  const MTAlgebra p = powerset_mt(x);
  for (Elem pt = 0; pt < x.size(); ++pt) {
    auto pos = atom_position(p, Elem{1} << pt);
    if (!pos) throw Error(ErrorCode::OracleDisagreement, "singleton is not an atom of P(X)");
    c.table.push_back(*pos);
  }
  const FiniteSpace at = atoms_space(p);
  fill_bijectivity(c, at.size());
  c.is_iso = is_homeomorphism(c.table, x, at);
  return c;
}

CanonicalMap zeta_map(const Frame& l) {
  CanonicalMap c;
  c.kind = CanonicalKind::Zeta;
  const PointSpace ps = points_space(l);
  for (Elem a = 0; a < l.size(); ++a) {
    auto pos = position(ps.space.opens(), ps.points.zeta[a]);
    if (!pos) throw Error(ErrorCode::OracleDisagreement, "ζ(a) is not open in pt(L)");
    c.table.push_back(*pos);
  }
  const Frame target = omega(ps.space);
  fill_bijectivity(c, target.size());
  c.is_iso = c.is_injective && c.is_surjective &&
             is_order_isomorphism(l.lattice().poset(), target.lattice().poset(), c.table);
  return c;
}

CanonicalMap delta_map(const FiniteSpace& x) {
  CanonicalMap c;
  c.kind = CanonicalKind::Delta;
  const Frame l = omega(x);
  const PointSpace ps = points_space(l);
  for (Elem pt = 0; pt < x.size(); ++pt) {
    ElemSet d(l.size());
    for (Elem i = 0; i < x.opens().size(); ++i)
      if (x.opens()[i].test(pt)) d.set(i);
    auto pos = position(ps.points.points, d);
    if (!pos) throw Error(ErrorCode::OracleDisagreement, "δ(x) is not a point of Ω(X)");
    c.table.push_back(*pos);
  }
  fill_bijectivity(c, ps.space.size());
  c.is_iso = c.is_injective && c.is_surjective && is_homeomorphism(c.table, x, ps.space);
  return c;
}

CanonicalMap theta_map(const MTAlgebra& m) {
  if (auto s = separation_check(m, Separation::Sober); !s)
    throw Error(ErrorCode::NotSober, s.reason, element_labels(m, s.witness));
  CanonicalMap c;
  c.kind = CanonicalKind::Theta;
  const OpensFrame o = opens_frame(m);
  const PointSpace ps = points_space(o.frame);
  for (Elem x : m.ba().atom_list()) {
    ElemSet up(o.elements.size());
    for (Elem j = 0; j < o.elements.size(); ++j)
      if (m.leq(x, o.elements[j])) up.set(j);
    auto pos = position(ps.points.points, up);
    if (!pos) throw Error(ErrorCode::OracleDisagreement, "ϑ(" + m.label(x) + ") is not a point of O(M)");
    c.table.push_back(*pos);
  }
  fill_bijectivity(c, ps.space.size());
  c.is_iso = c.is_injective && c.is_surjective && is_homeomorphism(c.table, atoms_space(m), ps.space);
  return c;
}

Verdict eta_naturality(const StructureMap& f, const MTAlgebra& m, const MTAlgebra& n) {
  const std::vector<Elem> atf = atoms_map(f, m, n);
  const std::vector<ElemSet> em = eta_sets(m), en = eta_sets(n);
  for (Elem a = 0; a < m.size(); ++a)
    if (en[f.table[a]] != preimage(atf, n.ba().atom_list().size(), em[a]))
      return Verdict::no("η_N(f(a)) != at(f)^{-1} η_M(a)", {a});
  return Verdict::yes();
}

Verdict theta_naturality(const StructureMap& f, const MTAlgebra& m, const MTAlgebra& n) {
  const CanonicalMap tm = theta_map(m), tn = theta_map(n);
  const std::vector<Elem> atf = atoms_map(f, m, n);
  const OpensFrame om = opens_frame(m), on = opens_frame(n);
  const std::vector<Elem> of = opens_map(f, om, on);
  const std::vector<Elem> pt_of = pt_map(of, om.frame, points(om.frame), on.frame, points(on.frame));
  for (Elem y = 0; y < atf.size(); ++y)
    if (tm.table[atf[y]] != pt_of[tn.table[y]])
      return Verdict::no("ϑ_M(at(f)(y)) != pt(O(f))(ϑ_N(y))", {n.ba().atom_list()[y]});
  return Verdict::yes();
}

// ---------------------------------------------------------------- isomorphism

bool is_mt_isomorphism(const std::vector<Elem>& f, const MTAlgebra& a, const MTAlgebra& b) {
  if (!is_order_isomorphism(a.lattice().poset(), b.lattice().poset(), f)) return false;
  for (Elem x = 0; x < a.size(); ++x)
    if (f[a.box(x)] != b.box(f[x])) return false;
  return true;
}

std::optional<std::vector<Elem>> mt_isomorphism(const MTAlgebra& a, const MTAlgebra& b) {
  if (a.size() != b.size() || a.opens().count() != b.opens().count()) return std::nullopt;
  auto h = homeomorphism(atoms_space(a), atoms_space(b));
  if (!h) return std::nullopt;
  const auto& atoms_b = b.ba().atom_list();
  const std::vector<ElemSet> eta = eta_sets(a);
  std::vector<Elem> f(a.size());
  for (Elem x = 0; x < a.size(); ++x) {
    Elem acc = b.bottom();
    eta[x].for_each([&](Elem i) { acc = b.join(acc, atoms_b[(*h)[i]]); });
    f[x] = acc;
  }
  if (!is_mt_isomorphism(f, a, b))
    throw Error(ErrorCode::OracleDisagreement, "homeomorphism of atom spaces does not lift to an MT-isomorphism");
  return f;
}

// ---------------------------------------------------------------- round trips

namespace {

constexpr std::array<std::pair<RoundtripTarget, std::string_view>, 8> kTargets{{
    {RoundtripTarget::THalfIso, "t_half_iso"},
    {RoundtripTarget::HLUnit, "hl_unit"},
    {RoundtripTarget::HMFrame, "hm_frame"},
    {RoundtripTarget::HMSpace, "hm_space"},
    {RoundtripTarget::EtaProper, "eta_proper"},
    {RoundtripTarget::EtaScott, "eta_scott"},
    {RoundtripTarget::EtaKS, "eta_ks"},
    {RoundtripTarget::StonePath, "stone_path"},
}};

CheckReport pass() { return {Outcome::Pass, {}, {}}; }
CheckReport fail(std::string why, std::vector<Elem> w = {}) { return {Outcome::Fail, std::move(why), std::move(w)}; }
CheckReport vacuous(std::string why, std::vector<Elem> w = {}) {
  return {Outcome::Vacuous, "HypothesisNotMet: " + std::move(why), std::move(w)};
}

/// LCSobMT membership; empty optional when it holds.
std::optional<CheckReport> require_lc_sober(const MTAlgebra& m) {
  if (auto s = separation_check(m, Separation::Sober); !s) return vacuous("not sober: " + s.reason, s.witness);
  if (auto lc = compactness_check(m, Compactness::LocallyCompact); !lc)
    return vacuous("not locally compact: " + lc.reason, lc.witness);
  return std::nullopt;
}

/// Order-reversing bijection between compact saturated sets (⊇) and filters
/// (⊆), given the map K ↦ filter.
CheckReport antitone_bijection(const std::vector<ElemSet>& ks, const std::vector<ElemSet>& filters,
                               const std::vector<ElemSet>& image) {
  if (ks.size() != filters.size())
    return fail("|KS| = " + std::to_string(ks.size()) + " but |SFilt| = " + std::to_string(filters.size()));
  std::vector<ElemSet> sorted_filters = filters;
  std::sort(sorted_filters.begin(), sorted_filters.end());
  ElemSet hit(filters.size());
  for (std::size_t i = 0; i < ks.size(); ++i) {
    auto pos = position(sorted_filters, image[i]);
    if (!pos) return fail("image of a compact saturated set is not a Scott-open filter", ks[i].members());
    if (hit.test(*pos)) return fail("two compact saturated sets share a filter", ks[i].members());
    hit.set(*pos);
  }
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = 0; j < ks.size(); ++j)
      if (ks[j].is_subset_of(ks[i]) != image[i].is_subset_of(image[j]))
        return fail("correspondence does not reverse the order", ks[i].members());
  return pass();
}

CheckReport t_half_iso(const MTAlgebra& m) {
  const Verdict th = separation_check(m, Separation::THalf);
  const BoolExt ext = bool_ext_mt(opens_frame(m).frame);
  const bool iso = mt_isomorphism(m, ext.algebra).has_value();
  if (th.holds) return iso ? pass() : fail("T½ but M is not isomorphic to the completion of B(O(M))");
  if (iso) return fail("M is isomorphic to the completion of B(O(M)) but not T½", th.witness);
  return vacuous("not T½ (and, consistently, not isomorphic to the completion of B(O(M))): " + th.reason,
                 th.witness);
}

CheckReport hl_unit(const MTAlgebra& m) {
  if (auto h = require_lc_sober(m)) return *h;
  const CanonicalMap theta = theta_map(m);
  const PointSpace ps = points_space(opens_frame(m).frame);
  const MTAlgebra target = powerset_mt(ps.space);
  std::vector<Elem> unit(m.size());
  const std::vector<ElemSet> eta = eta_sets(m);
  for (Elem a = 0; a < m.size(); ++a)
    unit[a] = static_cast<Elem>(image(theta.table, ps.space.size(), eta[a]).low_word());
  if (!is_mt_isomorphism(unit, m, target)) return fail("(Pϑ)∘η is not an MT-isomorphism");
  return pass();
}

CheckReport hm_frame(const MTAlgebra& m) { return hm_frame_check(opens_frame(m).frame); }

CheckReport hm_space(const MTAlgebra& m) {
  const FiniteSpace x = atoms_space(m);
  if (auto s = space_predicate(x, SpacePredicate::Sober); !s) return vacuous("at(M) is not sober: " + s.reason);
  const std::vector<ElemSet> filters = scott_open_filters(omega(x));
  const std::vector<ElemSet> ks = compact_saturated_sets(x);
  std::vector<ElemSet> image;
  for (const ElemSet& k : ks) {
    ElemSet f(x.opens().size());
    for (Elem i = 0; i < x.opens().size(); ++i)
      if (k.is_subset_of(x.opens()[i])) f.set(i);
    image.push_back(std::move(f));
  }
  return antitone_bijection(ks, filters, image);
}

CheckReport eta_proper(const MTAlgebra& m) {
  if (auto h = require_lc_sober(m)) return *h;
  const CanonicalMap eta = eta_map(m);
  StructureMap sm{MapKind::MTMorphism, eta.table, false};
  const MTMorphismCheckResult r = check_mt_morphism(sm, m, powerset_mt(atoms_space(m)));
  if (!r.is_mt_morphism) return fail("η is not an MT-morphism: " + r.failure.reason, r.failure.witness);
  if (!r.is_proper) return fail("η is not proper");
  return pass();
}

CheckReport eta_scott(const MTAlgebra& m) {
  if (auto h = require_lc_sober(m)) return *h;
  const MTAlgebra p = powerset_mt(atoms_space(m));
  std::vector<ElemSet> targets;
  for (FilterSet& f : enumerate_filters(p, FilterKind::ScottOpen)) targets.push_back(std::move(f.members));
  std::sort(targets.begin(), targets.end());
  const std::vector<Elem> eta = eta_map(m).table;
  for (const FilterSet& f : enumerate_filters(m, FilterKind::ScottOpen)) {
    ElemSet g(p.size());
    f.members.for_each([&](Elem a) { g |= p.up(eta[a]); });
    if (!position(targets, g)) return fail("↑η[F] is not a Scott-open filter", f.members.members());
  }
  return pass();
}

CheckReport eta_ks(const MTAlgebra& m) {
  const ElementClasses c = element_classes(m);
  const FiniteSpace x = atoms_space(m);
  const std::vector<ElemSet> eta = eta_sets(m);
  for (const ElemSet& k : compact_saturated_sets(x)) {
    ElemSet u(m.size());
    c.opens.for_each([&](Elem v) {
      if (k.is_subset_of(eta[v])) u.set(v);
    });
    const Elem meet = m.meet_of(u);
    if (!c.compact_saturated.test(meet)) return fail("⋀{u | K ⊆ η(u)} is not compact saturated", {meet});
  }
  return pass();
}

CheckReport stone_path(const MTAlgebra& m) {
  if (auto s = compactness_check(m, Compactness::Stone); !s) return vacuous("not Stone: " + s.reason, s.witness);
  const ClopenAlgebra cl = clopen_algebra(m);
  const CanonicalExtension ce = canonical_ext(cl.ba);
  if (!mt_isomorphism(ce.sigma, m)) return fail("M is not isomorphic to CL(M)^σ");
  return stone_path_check(cl.ba);
}

}  // namespace

std::string_view to_string(RoundtripTarget t) {
  for (const auto& [k, n] : kTargets)
    if (k == t) return n;
  return "?";
}

std::optional<RoundtripTarget> roundtrip_target_from_string(std::string_view name) {
  for (const auto& [k, n] : kTargets)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<RoundtripTarget>& all_roundtrip_targets() {
  static const std::vector<RoundtripTarget> all = [] {
    std::vector<RoundtripTarget> v;
    for (const auto& [k, n] : kTargets) v.push_back(k);
    return v;
  }();
  return all;
}

CheckReport roundtrip_check(RoundtripTarget t, const MTAlgebra& m) {
  switch (t) {
    case RoundtripTarget::THalfIso: return t_half_iso(m);
    case RoundtripTarget::HLUnit: return hl_unit(m);
    case RoundtripTarget::HMFrame: return hm_frame(m);
    case RoundtripTarget::HMSpace: return hm_space(m);
    case RoundtripTarget::EtaProper: return eta_proper(m);
    case RoundtripTarget::EtaScott: return eta_scott(m);
    case RoundtripTarget::EtaKS: return eta_ks(m);
    case RoundtripTarget::StonePath: return stone_path(m);
  }
  return pass();
}

CheckReport hm_frame_check(const Frame& l) {
  const std::vector<ElemSet> filters = scott_open_filters(l);
  const PointSpace ps = points_space(l);
  const std::vector<ElemSet> ks = compact_saturated_sets(ps.space);
  std::vector<ElemSet> image;
  for (const ElemSet& k : ks) {
    ElemSet f(l.size());
    for (Elem a = 0; a < l.size(); ++a)
      if (k.is_subset_of(ps.points.zeta[a])) f.set(a);
    image.push_back(std::move(f));
  }
  return antitone_bijection(ks, filters, image);
}

CheckReport stone_path_check(const FiniteBooleanAlgebra& b) {
  const CanonicalExtension ce = canonical_ext(b);
  if (auto s = compactness_check(ce.sigma, Compactness::Stone); !s)
    return fail("(B^σ,□) is not Stone: " + s.reason, s.witness);

  const ClopenAlgebra cl = clopen_algebra(ce.sigma);
  std::vector<Elem> e_sorted = ce.embed;
  std::sort(e_sorted.begin(), e_sorted.end());
  if (cl.elements != e_sorted) return fail("CL(B^σ) differs from e[B]");
  if (!order_isomorphism(cl.ba.lattice().poset(), b.lattice().poset())) return fail("CL(B^σ) is not isomorphic to B");

  const FiniteSpace at = atoms_space(ce.sigma);
  if (at.size() != b.atoms().count()) return fail("at(B^σ) does not have one point per atom");
  if (at.opens().size() != (std::size_t{1} << at.size())) return fail("at(B^σ) is not discrete");

  std::vector<ElemSet> clp;
  for (const ElemSet& u : at.opens())
    if (at.is_closed(u)) clp.push_back(u);
  std::vector<ElemSet> up(clp.size(), ElemSet(clp.size()));
  std::vector<std::string> labels;
  for (Elem i = 0; i < clp.size(); ++i) {
    labels.push_back(set_label(at, clp[i]));
    for (Elem j = 0; j < clp.size(); ++j)
      if (clp[i].is_subset_of(clp[j])) up[i].set(j);
  }
  if (!order_isomorphism(FinitePoset::from_up_sets(labels, up), b.lattice().poset()))
    return fail("CLP(at(B^σ)) is not isomorphic to B");
  return pass();
}

}  // namespace mtlab
