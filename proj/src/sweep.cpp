#include "mtlab/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace mtlab {

namespace {

struct Res {
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::vector<std::string> witness;
};

Res pass() { return {}; }
Res fail(std::string detail, std::vector<std::string> witness = {}) {
  return {Outcome::Fail, std::move(detail), std::move(witness)};
}
Res vacuous(std::string detail) { return {Outcome::Vacuous, std::move(detail), {}}; }
Res check(bool ok, std::string detail, std::vector<std::string> witness = {}) {
  return ok ? pass() : fail(std::move(detail), std::move(witness));
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t item) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (item + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::vector<ElemSet> sorted(std::vector<ElemSet> v) {
  std::sort(v.begin(), v.end());
  return v;
}

ElemSet sym(const ElemSet& a, const ElemSet& b) { return (a - b) | (b - a); }

Relation leq_relation(const FiniteLattice& l) {
  Relation r;
  for (Elem a = 0; a < l.size(); ++a) r.push_back(l.poset().up(a));
  return r;
}

// ---------------------------------------------------------------- space items

class SpaceCtx {
 public:
  SpaceCtx(FiniteSpace space, std::uint64_t seed) : x(std::move(space)), m(powerset_mt(x)), seed_(seed) {}

  const FiniteSpace x;
  const MTAlgebra m;

  const Verdict& sep(Separation s) {
    auto it = sep_.find(s);
    if (it == sep_.end()) it = sep_.emplace(s, separation_check(m, s)).first;
    return it->second;
  }
  const Verdict& comp(Compactness c) {
    auto it = comp_.find(c);
    if (it == comp_.end()) it = comp_.emplace(c, compactness_check(m, c)).first;
    return it->second;
  }
  const ElementClasses& classes() {
    if (!classes_) classes_ = element_classes(m);
    return *classes_;
  }
  const OpensFrame& om() {
    if (!om_) om_ = opens_frame(m);
    return *om_;
  }
  const Frame& frame() { return om().frame; }
  const FiniteSpace& at() {
    if (!at_) at_ = atoms_space(m);
    return *at_;
  }
  bool frame_pred(FramePredicate p) {
    auto it = fpred_.find(p);
    if (it == fpred_.end()) it = fpred_.emplace(p, frame_predicate(frame(), p).holds).first;
    return it->second;
  }
  bool space_pred(const FiniteSpace& s, SpacePredicate p) { return space_predicate(s, p).holds; }

  std::vector<std::string> labels(const std::vector<Elem>& w) const {
    std::vector<std::string> out;
    for (Elem e : w) out.push_back(m.label(e));
    return out;
  }
  std::vector<std::string> labels(const ElemSet& s) const { return labels(s.members()); }
  std::vector<std::string> frame_labels(const std::vector<Elem>& w) {
    std::vector<std::string> out;
    for (Elem e : w) out.push_back(m.label(om().elements[e]));
    return out;
  }

  Res implies(const Verdict& ante, const char* ante_name, const Verdict& cons) const {
    if (!ante) return vacuous(std::string("not ") + ante_name);
    return check(cons.holds, cons.reason, labels(cons.witness));
  }
  Res from_report(const CheckReport& r) const { return {r.outcome, r.detail, labels(r.witness)}; }

  /// Two random continuous self-maps, fixed per item.
  const std::vector<Elem>& self_map(std::size_t which) {
    if (maps_.empty()) {
      Rng rng(seed_);
      for (int k = 0; k < 2; ++k) maps_.push_back(random_continuous(rng));
    }
    return maps_[which];
  }

 private:
  std::vector<Elem> random_continuous(Rng& rng) {
    const std::size_t n = x.size();
    std::vector<Elem> f(n);
    if (n == 0) return f;
    for (int attempt = 0; attempt < 32; ++attempt) {
      for (auto& v : f) v = static_cast<Elem>(rng.below(n));
      if (check_map(f, x, x).is_continuous) return f;
    }
    const Elem c = static_cast<Elem>(rng.below(n));
    std::fill(f.begin(), f.end(), c);
    return f;
  }

  std::uint64_t seed_;
  std::map<Separation, Verdict> sep_;
  std::map<Compactness, Verdict> comp_;
  std::map<FramePredicate, bool> fpred_;
  std::optional<ElementClasses> classes_;
  std::optional<OpensFrame> om_;
  std::optional<FiniteSpace> at_;
  std::vector<std::vector<Elem>> maps_;
};

using SpaceProp = std::pair<std::string, std::function<Res(SpaceCtx&)>>;

Verdict both(const Verdict& a, const Verdict& b) { return a ? b : a; }
Verdict subset_verdict(const ElemSet& a, const ElemSet& b, const char* what) {
  const ElemSet extra = a - b;
  if (extra.none()) return Verdict::yes();
  return Verdict::no(what, extra.members());
}

bool within_guard_elems(const ElemSet& s) { return within_size_guard(s.count()); }

std::vector<SpaceProp> hm_props() {
  return {
      {"hofmann_mislove",
       [](SpaceCtx& c) {
         try {
           hofmann_mislove(c.m);
           return pass();
         } catch (const Error& e) {
           if (e.code() == ErrorCode::NotSober) return vacuous(e.what());
           if (e.code() == ErrorCode::SizeGuardExceeded) throw;
           return fail(e.what(), e.witness());
         }
       }},
      {"keimel_paseka", [](SpaceCtx& c) { return c.from_report(keimel_paseka_check(c.m)); }},
      {"hm_frame", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::HMFrame, c.m)); }},
      {"hm_space", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::HMSpace, c.m)); }},
      {"open_filter_correspondence",
       [](SpaceCtx& c) {
         if (!within_guard_elems(c.m.opens())) return vacuous("|O(M)| above the size guard");
         std::vector<ElemSet> open_filters;
         for (auto& f : enumerate_filters(c.m, FilterKind::Open)) open_filters.push_back(f.members);
         open_filters = sorted(open_filters);
         const auto frame_filters = frame_filters_of_opens_bruteforce(c.m);
         std::vector<ElemSet> lifted;
         for (const ElemSet& g : frame_filters) {
           ElemSet up(c.m.size());
           g.for_each([&](Elem a) { up |= c.m.up(a); });
           if ((up & c.m.opens()) != g) return fail("↑G ∩ O(M) differs from G", c.labels(g));
           lifted.push_back(up);
         }
         return check(sorted(lifted) == open_filters, "G ↦ ↑G is not onto the open filters");
       }},
  };
}

std::vector<SpaceProp> separation_props() {
  return {
      {"regular=>hausdorff",
       [](SpaceCtx& c) { return c.implies(c.sep(Separation::Regular), "regular", c.sep(Separation::Hausdorff)); }},
      {"hausdorff=>sober",
       [](SpaceCtx& c) { return c.implies(c.sep(Separation::Hausdorff), "hausdorff", c.sep(Separation::Sober)); }},
      {"hausdorff=>t1",
       [](SpaceCtx& c) { return c.implies(c.sep(Separation::Hausdorff), "hausdorff", c.sep(Separation::T1)); }},
      {"t1=>t_half", [](SpaceCtx& c) { return c.implies(c.sep(Separation::T1), "t1", c.sep(Separation::THalf)); }},
      {"t_half=>t0", [](SpaceCtx& c) { return c.implies(c.sep(Separation::THalf), "t_half", c.sep(Separation::T0)); }},
      {"space_vs_powerset",
       [](SpaceCtx& c) {
         for (SpacePredicate p : all_space_predicates()) space_predicate(c.x, p);
         return pass();
       }},
      {"dia_laws",
       [](SpaceCtx& c) {
         const MTAlgebra& m = c.m;
         if (m.dia(m.bottom()) != m.bottom()) return fail("◇0 != 0");
         for (Elem a = 0; a < m.size(); ++a) {
           if (!m.leq(a, m.dia(a))) return fail("a <= ◇a fails", c.labels(std::vector<Elem>{a}));
           if (m.dia(m.dia(a)) != m.dia(a)) return fail("◇◇a != ◇a", c.labels(std::vector<Elem>{a}));
           for (Elem b = 0; b < m.size(); ++b)
             if (m.dia(m.join(a, b)) != m.join(m.dia(a), m.dia(b))) return fail("◇(a∨b) != ◇a∨◇b", c.labels(std::vector<Elem>{a, b}));
         }
         return pass();
       }},
      {"opens_frame",
       [](SpaceCtx& c) {
         const ElemSet& o = c.m.opens();
         if (!o.test(c.m.bottom()) || !o.test(c.m.top())) return fail("0 or 1 not open");
         for (Elem a : o.members())
           for (Elem b : o.members())
             if (!o.test(c.m.meet(a, b)) || !o.test(c.m.join(a, b)))
               return fail("opens not closed under ∧/∨", c.labels(std::vector<Elem>{a, b}));
         c.frame();
         return pass();
       }},
  };
}

std::vector<SpaceProp> compactness_props() {
  return {
      {"hausdorff=>K⊆C",
       [](SpaceCtx& c) {
         const auto& k = c.classes();
         return c.implies(c.sep(Separation::Hausdorff), "hausdorff",
                          subset_verdict(k.compact, k.closeds, "compact element that is not closed"));
       }},
      {"compact=>C⊆K",
       [](SpaceCtx& c) {
         const auto& k = c.classes();
         return c.implies(c.comp(Compactness::Compact), "compact",
                          subset_verdict(k.closeds, k.compact, "closed element that is not compact"));
       }},
      {"compact∧hausdorff=>C=K",
       [](SpaceCtx& c) {
         const auto& k = c.classes();
         return c.implies(both(c.comp(Compactness::Compact), c.sep(Separation::Hausdorff)), "compact Hausdorff",
                          both(subset_verdict(k.compact, k.closeds, "compact element that is not closed"),
                               subset_verdict(k.closeds, k.compact, "closed element that is not compact")));
       }},
      {"compact∧hausdorff=>locally_compact",
       [](SpaceCtx& c) {
         return c.implies(both(c.comp(Compactness::Compact), c.sep(Separation::Hausdorff)), "compact Hausdorff",
                          c.comp(Compactness::LocallyCompact));
       }},
      {"compact<=>at_compact",
       [](SpaceCtx& c) {
         return check(c.comp(Compactness::Compact).holds == c.space_pred(c.at(), SpacePredicate::Compact),
                      "compactness of M and of at(M) differ");
       }},
      {"khaus<=>at_khaus",
       [](SpaceCtx& c) {
         const bool alg = c.comp(Compactness::Compact).holds && c.sep(Separation::Hausdorff).holds;
         const bool sp =
             c.space_pred(c.at(), SpacePredicate::Compact) && c.space_pred(c.at(), SpacePredicate::Hausdorff);
         return check(alg == sp, "compact Hausdorff for M and at(M) differ");
       }},
      {"lch<=>at_lch",
       [](SpaceCtx& c) {
         const bool alg = c.comp(Compactness::LocallyCompact).holds && c.sep(Separation::Hausdorff).holds;
         const bool sp = c.space_pred(c.at(), SpacePredicate::LocallyCompact) &&
                         c.space_pred(c.at(), SpacePredicate::Hausdorff);
         return check(alg == sp, "locally compact Hausdorff for M and at(M) differ");
       }},
      {"locally_stone<=>at_locally_stone",
       [](SpaceCtx& c) {
         return check(c.comp(Compactness::LocallyStone).holds == c.space_pred(c.at(), SpacePredicate::LocallyStone),
                      "locally Stone for M and at(M) differ");
       }},
      {"locally_compact<=>continuous",
       [](SpaceCtx& c) {
         return check(c.comp(Compactness::LocallyCompact).holds == c.frame_pred(FramePredicate::Continuous),
                      "M locally compact and O(M) continuous differ");
       }},
      {"stably_lc<=>stably_continuous",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::Sober)) return vacuous("not sober");
         return check(c.comp(Compactness::StablyLocallyCompact).holds ==
                          c.frame_pred(FramePredicate::StablyContinuous),
                      "M stably locally compact and O(M) stably continuous differ");
       }},
      {"lch=>creg",
       [](SpaceCtx& c) {
         if (!c.comp(Compactness::LocallyCompact) || !c.sep(Separation::Hausdorff))
           return vacuous("not locally compact Hausdorff");
         return check(c.frame_pred(FramePredicate::Continuous) && c.frame_pred(FramePredicate::Regular),
                      "O(M) is not continuous regular");
       }},
      {"creg=>lch",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::THalf)) return vacuous("not t_half");
         if (!c.frame_pred(FramePredicate::Continuous) || !c.frame_pred(FramePredicate::Regular))
           return vacuous("O(M) not continuous regular");
         return check(c.comp(Compactness::LocallyCompact).holds && c.sep(Separation::Hausdorff).holds,
                      "O(M) continuous regular but M not locally compact Hausdorff");
       }},
  };
}

std::vector<SpaceProp> t_half_props() {
  return {
      {"t_half_iso", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::THalfIso, c.m)); }},
      {"spatial_agreement",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::Sober) || !c.sep(Separation::THalf)) return vacuous("not sober T½");
         return check(eta_map(c.m).is_iso == c.frame_pred(FramePredicate::Spatial),
                      "spatial(M) and spatial(O(M)) differ");
       }},
      {"eta_opens_iso",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::Sober)) return vacuous("not sober");
         const auto eta = eta_sets(c.m);
         std::vector<ElemSet> img;
         c.m.opens().for_each([&](Elem u) { img.push_back(eta[u]); });
         const std::size_t n = img.size();
         img = sorted(img);
         if (std::adjacent_find(img.begin(), img.end()) != img.end()) return fail("η is not injective on O(M)");
         return check(n == c.at().opens().size() && img == c.at().opens(), "η[O(M)] differs from Ω(at(M))");
       }},
  };
}

std::vector<SpaceProp> duality_props() {
  return {
      {"epsilon_homeo", [](SpaceCtx& c) { return check(epsilon_map(c.x).is_iso, "ε is not a homeomorphism"); }},
      {"eta_iso", [](SpaceCtx& c) { return check(eta_map(c.m).is_iso, "η is not an isomorphism on an atomic algebra"); }},
      {"zeta_iso", [](SpaceCtx& c) { return check(zeta_map(c.frame()).is_iso, "ζ is not an isomorphism"); }},
      {"delta<=>sober",
       [](SpaceCtx& c) {
         return check(delta_map(c.x).is_iso == c.space_pred(c.x, SpacePredicate::Sober),
                      "δ homeomorphism and sobriety differ");
       }},
      {"theta_homeo",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::Sober)) return vacuous("not sober");
         return check(theta_map(c.m).is_iso, "ϑ is not a homeomorphism");
       }},
      {"hl_unit", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::HLUnit, c.m)); }},
      {"eta_proper", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::EtaProper, c.m)); }},
      {"eta_scott", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::EtaScott, c.m)); }},
      {"eta_ks", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::EtaKS, c.m)); }},
      {"stone_path", [](SpaceCtx& c) { return c.from_report(roundtrip_check(RoundtripTarget::StonePath, c.m)); }},
      {"O∘P=Ω",
       [](SpaceCtx& c) {
         std::vector<ElemSet> o;
         for (Elem u : c.om().elements) o.push_back(ElemSet::from_mask(c.x.size(), u));
         return check(sorted(o) == c.x.opens(), "O(P(X)) differs from Ω(X)");
       }},
      {"CLP∘at≅CL",
       [](SpaceCtx& c) {
         const FiniteSpace& at = c.at();
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
         const ClopenAlgebra cl = clopen_algebra(c.m);
         return check(order_isomorphism(FinitePoset::from_up_sets(labels, up), cl.ba.lattice().poset()).has_value(),
                      "CLP(at(M)) is not isomorphic to CL(M)");
       }},
      {"ks_space=ks_algebra",
       [](SpaceCtx& c) {
         ElemSet ks(c.m.size());
         for (const ElemSet& k : compact_saturated_sets(c.x)) ks.set(static_cast<Elem>(k.low_word()));
         return check(ks == c.classes().compact_saturated, "KS(X) differs from KS(P(X))",
                      c.labels(sym(ks, c.classes().compact_saturated)));
       }},
      {"functoriality",
       [](SpaceCtx& c) {
         const auto& f = c.self_map(0);
         const auto& g = c.self_map(1);
         std::vector<Elem> id(c.x.size());
         for (Elem i = 0; i < id.size(); ++i) id[i] = i;
         const StructureMap pid = powerset_mt_map(id, c.x, c.x);
         for (Elem a = 0; a < pid.table.size(); ++a)
           if (pid.table[a] != a) return fail("P(id) is not the identity", c.labels(std::vector<Elem>{a}));
         const StructureMap pf = powerset_mt_map(f, c.x, c.x), pg = powerset_mt_map(g, c.x, c.x);
         if (powerset_mt_map(compose(g, f), c.x, c.x).table != compose(pf.table, pg.table))
           return fail("P(g∘f) != P(f)∘P(g)");
         if (omega_map(compose(g, f), c.x, c.x) != compose(omega_map(f, c.x, c.x), omega_map(g, c.x, c.x)))
           return fail("Ω(g∘f) != Ω(f)∘Ω(g)");
         if (atoms_map(pf, c.m, c.m) != f) return fail("at(P(f)) differs from f");
         const OpensFrame& om = c.om();
         const std::vector<Elem> of = opens_map(pf, om, om), og = opens_map(pg, om, om);
         if (opens_map(powerset_mt_map(compose(g, f), c.x, c.x), om, om) != compose(of, og))
           return fail("O(P(g∘f)) != O(P(f))∘O(P(g))");
         return pass();
       }},
      {"eta_naturality",
       [](SpaceCtx& c) {
         const StructureMap pf = powerset_mt_map(c.self_map(0), c.x, c.x);
         const Verdict v = eta_naturality(pf, c.m, c.m);
         return check(v.holds, v.reason, c.labels(v.witness));
       }},
      {"theta_naturality",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::Sober)) return vacuous("not sober");
         const StructureMap pf = powerset_mt_map(c.self_map(0), c.x, c.x);
         const Verdict v = theta_naturality(pf, c.m, c.m);
         return check(v.holds, v.reason, c.labels(v.witness));
       }},
      {"frame_hom_proper",
       [](SpaceCtx& c) {
         const Frame l = omega(c.x);
         const FrameHomCheck h = check_frame_hom(omega_map(c.self_map(0), c.x, c.x), l, l);
         return check(h.is_frame_hom && h.is_proper, "Ω(f) is not a proper frame homomorphism: " + h.failure.reason);
       }},
  };
}

/// Every open is the join of the clopens below it.
Verdict opens_join_clopens(SpaceCtx& c) {
  const ElemSet& cl = c.classes().clopen;
  for (Elem u : c.m.opens().members())
    if (c.m.join_of(cl & c.m.down(u)) != u) return Verdict::no("open that is not a join of clopens", {u});
  return Verdict::yes();
}

std::vector<SpaceProp> zerodim_props() {
  return {
      {"CL=cmp(O)",
       [](SpaceCtx& c) {
         ElemSet cmp(c.m.size());
         complemented_elements(c.frame().lattice()).for_each([&](Elem i) { cmp.set(c.om().elements[i]); });
         return check(cmp == c.classes().clopen, "CL(M) differs from cmp(O(M))", c.labels(sym(cmp, c.classes().clopen)));
       }},
      {"zero_dim<=>frame_zero_dim",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::T1)) return vacuous("not t1");
         return check(c.sep(Separation::ZeroDim).holds == c.frame_pred(FramePredicate::ZeroDim),
                      "zero-dimensionality of M and O(M) differ");
       }},
      {"open_form<=>closed_form",
       [](SpaceCtx& c) {
         if (!c.sep(Separation::T1)) return vacuous("not t1");
         return check(c.sep(Separation::ZeroDim).holds == zero_dim_closed_form(c.m).holds,
                      "open and closed forms of zero-dimensionality differ");
       }},
      {"zero_dim<=>t_half∧zdim",
       [](SpaceCtx& c) {
         const bool rhs = c.sep(Separation::THalf).holds && opens_join_clopens(c).holds;
         return check(c.sep(Separation::ZeroDim).holds == rhs, "zero_dim and T½ ∧ ZDim differ");
       }},
      {"t0∧zdim=>zero_dim",
       [](SpaceCtx& c) {
         return c.implies(both(c.sep(Separation::T0), opens_join_clopens(c)), "T0 with clopen-generated opens",
                          c.sep(Separation::ZeroDim));
       }},
  };
}

std::vector<SpaceProp> degeneracy_props() {
  return {
      {"K=M", [](SpaceCtx& c) { return check(c.classes().compact == c.m.all(), "an element is not compact"); }},
      {"wedge=leq",
       [](SpaceCtx& c) {
         const Relation w = wedge_below(c.m);
         for (Elem a = 0; a < c.m.size(); ++a)
           if (w[a] != c.m.up(a)) return fail("◁ differs from <=", c.labels(std::vector<Elem>{a}));
         return pass();
       }},
      {"way_below=leq",
       [](SpaceCtx& c) {
         if (c.frame().size() > 6) return vacuous("frame above 6 elements");
         return check(way_below_bruteforce(c.frame()) == leq_relation(c.frame().lattice()), "≪ differs from <=");
       }},
      {"open_filters_scott",
       [](SpaceCtx& c) {
         if (!within_guard_elems(c.m.opens())) return vacuous("|O(M)| above the size guard");
         for (const FilterSet& f : enumerate_filters(c.m, FilterKind::Open))
           if (!f.is_scott_open) return fail("open filter that is not Scott-open", c.labels(f.members));
         return pass();
       }},
      {"finite_compact", [](SpaceCtx& c) { return check(c.comp(Compactness::Compact).holds, c.comp(Compactness::Compact).reason); }},
      {"finite_locally_compact",
       [](SpaceCtx& c) {
         return check(c.comp(Compactness::LocallyCompact).holds, c.comp(Compactness::LocallyCompact).reason);
       }},
  };
}

std::vector<SpaceProp> oracle_props() {
  return {
      {"compact_oracle",
       [](SpaceCtx& c) {
         if (!within_guard_elems(c.m.opens())) return vacuous("|O(M)| above the size guard");
         const ElemSet a = compact_elements_bruteforce(c.m), b = compact_elements_finite(c.m);
         return check(a == b, "compactness oracle disagrees", c.labels(sym(a, b)));
       }},
      {"fip_oracle",
       [](SpaceCtx& c) {
         if (!within_guard_elems(c.m.closeds())) return vacuous("|C(M)| above the size guard");
         const ElemSet a = compact_elements_fip(c.m), b = compact_elements_finite(c.m);
         if (a != b) return fail("closed-family form disagrees", c.labels(sym(a, b)));
         return check(is_compact_algebra_fip(c.m) == c.comp(Compactness::Compact).holds,
                      "closed-family compactness of M disagrees");
       }},
      {"way_below_oracle",
       [](SpaceCtx& c) {
         if (!within_size_guard(c.frame().size())) return vacuous("frame above the size guard");
         return check(way_below_bruteforce(c.frame()) == way_below(c.frame()), "way-below oracle disagrees");
       }},
      {"prime_oracle",
       [](SpaceCtx& c) {
         const Frame& l = c.frame();
         if (!within_size_guard(l.size())) return vacuous("frame above the size guard");
         const FramePointSet pts = points(l);
         std::vector<ElemSet> brute;
         for (Elem a = 0; a < l.size(); ++a) {
           const ElemSet f = l.up(a);
           if (is_prime_filter(l, f) != is_completely_prime_bruteforce(l, f))
             return fail("prime and completely prime differ", c.frame_labels(std::vector<Elem>{a}));
           if (is_prime_filter(l, f)) brute.push_back(f);
         }
         return check(sorted(brute) == pts.points, "points differ from the prime principal filters");
       }},
      {"scott_open_oracle",
       [](SpaceCtx& c) {
         if (!within_guard_elems(c.m.opens())) return vacuous("|O(M)| above the size guard");
         for (const FilterSet& f : enumerate_filters(c.m, FilterKind::Open))
           if (is_scott_open_bruteforce(c.m, f.members) != f.is_scott_open)
             return fail("Scott-open flag disagrees with the directed-family oracle", c.labels(f.members));
         return pass();
       }},
      {"open_filter_generation",
       [](SpaceCtx& c) {
         if (!within_guard_elems(c.m.opens())) return vacuous("|O(M)| above the size guard");
         for (const FilterSet& f : enumerate_filters(c.m, FilterKind::Open))
           if (!is_open_filter(c.m, f.members) || !is_open_filter_by_generation(c.m, f.members))
             return fail("open filter forms disagree", c.labels(f.members));
         return pass();
       }},
      {"saturated_oracle",
       [](SpaceCtx& c) {
         return check(saturated_sets(c.x) == specialization_upsets(c.x), "saturated sets differ from up-sets");
       }},
  };
}

std::vector<SpaceProp> space_suite(Suite s) {
  std::vector<SpaceProp> out;
  auto add = [&](std::vector<SpaceProp> v) { out.insert(out.end(), v.begin(), v.end()); };
  switch (s) {
    case Suite::HM: add(hm_props()); break;
    case Suite::Separation: add(separation_props()); break;
    case Suite::Compactness: add(compactness_props()); break;
    case Suite::THalf: add(t_half_props()); break;
    case Suite::Duality: add(duality_props()); break;
    case Suite::ZeroDim: add(zerodim_props()); break;
    case Suite::Degeneracy: add(degeneracy_props()); break;
    case Suite::Oracles: add(oracle_props()); break;
    case Suite::Full:
      add(hm_props());
      add(separation_props());
      add(compactness_props());
      add(t_half_props());
      add(duality_props());
      add(zerodim_props());
      add(degeneracy_props());
      add(oracle_props());
      break;
    default: break;
  }
  return out;
}

// ---------------------------------------------------------------- lattice items

using LatticeProp = std::pair<std::string, std::function<Res(const Frame&)>>;

std::vector<std::string> frame_labels(const Frame& l, const std::vector<Elem>& w) {
  std::vector<std::string> out;
  for (Elem e : w) out.push_back(l.label(e));
  return out;
}

std::vector<LatticeProp> lattice_suite() {
  return {
      {"O(B(L))≅L",
       [](const Frame& l) {
         const BoolExt ext = bool_ext_mt(l);
         const Frame o = opens_frame(ext.algebra).frame;
         return check(order_isomorphism(o.lattice().poset(), l.lattice().poset()).has_value(),
                      "O(B(L)) is not isomorphic to L");
       }},
      {"zeta_iso", [](const Frame& l) { return check(zeta_map(l).is_iso, "ζ is not an isomorphism"); }},
      {"spatial", [](const Frame& l) {
         const Verdict v = frame_predicate(l, FramePredicate::Spatial);
         return check(v.holds, v.reason, frame_labels(l, v.witness));
       }},
      {"hm_frame",
       [](const Frame& l) {
         const CheckReport r = hm_frame_check(l);
         return Res{r.outcome, r.detail, frame_labels(l, r.witness)};
       }},
      {"scott_filter_transfer",
       [](const Frame& l) {
         if (l.size() > 16) return vacuous("frame above 16 elements");
         const PointSpace ps = points_space(l);
         const Frame o = omega(ps.space);
         const CanonicalMap z = zeta_map(l);
         std::vector<ElemSet> images;
         for (const ElemSet& h : scott_open_filters(o)) {
           ElemSet pre(l.size());
           for (Elem a = 0; a < l.size(); ++a)
             if (h.test(z.table[a])) pre.set(a);
           images.push_back(pre);
         }
         return check(sorted(images) == sorted(scott_open_filters(l)), "ζ⁻¹ does not carry SFilt(Ω(pt L)) onto SFilt(L)");
       }},
      {"way_below=leq",
       [](const Frame& l) {
         if (!within_size_guard(l.size())) return vacuous("frame above the size guard");
         return check(way_below_bruteforce(l) == leq_relation(l.lattice()), "≪ differs from <=");
       }},
      {"identity_proper",
       [](const Frame& l) {
         std::vector<Elem> id(l.size());
         for (Elem i = 0; i < id.size(); ++i) id[i] = i;
         const FrameHomCheck h = check_frame_hom(id, l, l);
         return check(h.is_frame_hom && h.is_proper, "identity is not a proper frame homomorphism");
       }},
  };
}

// ---------------------------------------------------------------- stone items

struct StoneItem {
  FiniteBooleanAlgebra source;
  FiniteBooleanAlgebra target;
  std::vector<Elem> hom;
};

using StoneProp = std::pair<std::string, std::function<Res(const StoneItem&)>>;

std::vector<StoneProp> stone_suite() {
  return {
      {"stone_path",
       [](const StoneItem& s) {
         const CheckReport r = stone_path_check(s.source);
         return Res{r.outcome, r.detail, {}};
       }},
      {"boolean_hom",
       [](const StoneItem& s) {
         const Verdict v = check_boolean_hom(s.hom, s.source, s.target);
         return check(v.holds, v.reason);
       }},
      {"lift_restricts",
       [](const StoneItem& s) {
         const CanonicalExtension a = canonical_ext(s.source), b = canonical_ext(s.target);
         const std::vector<Elem> lifted = lift_hom(s.hom, a, b);
         for (Elem x = 0; x < s.source.size(); ++x)
           if (lifted[a.embed[x]] != b.embed[s.hom[x]]) return fail("h^σ∘e != e∘h", {s.source.label(x)});
         return pass();
       }},
      {"lift_identity",
       [](const StoneItem& s) {
         const CanonicalExtension a = canonical_ext(s.source);
         std::vector<Elem> id(s.source.size());
         for (Elem i = 0; i < id.size(); ++i) id[i] = i;
         const std::vector<Elem> lifted = lift_hom(id, a, a);
         for (Elem x = 0; x < lifted.size(); ++x)
           if (lifted[x] != x) return fail("id^σ is not the identity");
         return pass();
       }},
  };
}

/// Boolean hom between powersets dual to a random map of atoms.
StoneItem stone_item(std::size_t source_atoms, std::size_t max_atoms, Rng& rng) {
  std::size_t target_atoms = rng.between(0, max_atoms);
  if (source_atoms == 0) target_atoms = 0;
  auto atoms = [](std::size_t n, char c) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(std::string(1, c) + std::to_string(i));
    return v;
  };
  StoneItem s{FiniteBooleanAlgebra::powerset(atoms(source_atoms, 'a')),
              FiniteBooleanAlgebra::powerset(atoms(target_atoms, 'b')), {}};
  std::vector<std::size_t> dual(target_atoms);
  for (auto& d : dual) d = rng.below(source_atoms);
  for (std::uint64_t a = 0; a < s.source.size(); ++a) {
    std::uint64_t img = 0;
    for (std::size_t y = 0; y < target_atoms; ++y)
      if (a >> dual[y] & 1) img |= std::uint64_t{1} << y;
    s.hom.push_back(static_cast<Elem>(img));
  }
  return s;
}

// ---------------------------------------------------------------- driver

struct ItemResult {
  std::vector<Res> results;
};

template <class Item, class Prop>
ItemResult evaluate(Item& item, const std::vector<Prop>& props) {
  ItemResult r;
  for (const auto& [name, eval] : props) {
    try {
      r.results.push_back(eval(item));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SizeGuardExceeded)
        r.results.push_back(vacuous(e.what()));
      else
        r.results.push_back(fail(e.what(), e.witness()));
    } catch (const std::exception& e) {
      r.results.push_back(fail(e.what()));
    }
  }
  return r;
}

template <class Fn>
std::vector<ItemResult> run_items(std::size_t n, std::size_t jobs, Fn&& fn) {
  std::vector<ItemResult> out(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) out[i] = fn(i);
  };
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return out;
}

void tally(SweepReport& report, const std::vector<std::string>& names, const std::vector<ItemResult>& results,
           const std::vector<std::string>& item_names, const std::vector<std::string>& structures) {
  for (const auto& n : names) report.rows.push_back({n, 0, 0, 0});
  for (std::size_t i = 0; i < results.size(); ++i)
    for (std::size_t p = 0; p < names.size(); ++p) {
      const Res& r = results[i].results[p];
      PropertyRow& row = report.rows[p];
      switch (r.outcome) {
        case Outcome::Pass: ++row.pass; break;
        case Outcome::Vacuous: ++row.vacuous; break;
        case Outcome::Fail:
          ++row.fail;
          report.failures.push_back({i, item_names[i], structures[i], names[p], r.detail, r.witness});
          break;
      }
    }
  report.items = results.size();
}

template <class Prop>
std::vector<std::string> names_of(const std::vector<Prop>& props) {
  std::vector<std::string> out;
  for (const auto& p : props) out.push_back(p.first);
  return out;
}

std::string compact(const Document& d) { return nlohmann::ordered_json::parse(serialize(d)).dump(); }

}  // namespace

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::HM: return "hm";
    case Suite::Separation: return "separation";
    case Suite::Compactness: return "compactness";
    case Suite::THalf: return "t_half";
    case Suite::EssSurj: return "esssurj";
    case Suite::Duality: return "duality";
    case Suite::Stone: return "stone";
    case Suite::ZeroDim: return "zerodim";
    case Suite::Degeneracy: return "degeneracy";
    case Suite::Oracles: return "oracles";
    case Suite::Full: return "full";
  }
  return "?";
}

const std::vector<Suite>& all_suites() {
  static const std::vector<Suite> all{Suite::HM,      Suite::Separation, Suite::Compactness, Suite::THalf,
                                      Suite::EssSurj, Suite::Duality,    Suite::Stone,       Suite::ZeroDim,
                                      Suite::Degeneracy, Suite::Oracles, Suite::Full};
  return all;
}

std::optional<Suite> suite_from_string(std::string_view name) {
  for (Suite s : all_suites())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

bool SweepReport::accounting_holds() const {
  return std::all_of(rows.begin(), rows.end(),
                     [&](const PropertyRow& r) { return r.pass + r.fail + r.vacuous == items; });
}

std::size_t SweepReport::failure_count() const { return failures.size(); }

SweepReport run_sweep(const SweepOptions& o) {
  SweepReport report;
  report.suite = std::string(to_string(o.suite));
  report.size = o.size;
  report.seed = o.seed;
  report.count = o.count;
  Rng rng(o.seed);

  if (o.suite == Suite::EssSurj) {
    report.generator = "dlat";
    std::vector<Frame> frames;
    for (const auto& l : distributive_lattices_upto(std::min(o.size, kMaxExhaustiveLattice)))
      frames.push_back(Frame::from_lattice(l));
    for (std::size_t i = 0; i < o.count; ++i)
      frames.push_back(Frame::from_lattice(random_distributive_lattice(rng.between(1, 6), rng)));
    std::vector<std::string> names, docs;
    for (std::size_t i = 0; i < frames.size(); ++i) {
      names.push_back("lattice#" + std::to_string(i));
      docs.push_back(compact(document_of(frames[i].lattice().poset(), DocKind::Frame)));
    }
    const auto props = lattice_suite();
    const auto results = run_items(frames.size(), o.jobs, [&](std::size_t i) { return evaluate(frames[i], props); });
    tally(report, names_of(props), results, names, docs);
    return report;
  }

  if (o.suite == Suite::Stone) {
    report.generator = "boolean";
    if (o.size > kMaxBooleanAtoms)
      throw Error(ErrorCode::SizeGuardExceeded, "stone suite supports at most " + std::to_string(kMaxBooleanAtoms) + " atoms");
    const std::size_t n = std::max(o.count, o.size + 1);
    std::vector<StoneItem> items;
    std::vector<std::string> names, docs;
    for (std::size_t i = 0; i < n; ++i) {
      items.push_back(stone_item(i % (o.size + 1), o.size, rng));
      names.push_back("boolean#" + std::to_string(i));
      Document d = map_document(items.back().hom, items.back().source.lattice().poset().labels(),
                                items.back().target.lattice().poset().labels());
      docs.push_back(compact(d));
    }
    const auto props = stone_suite();
    const auto results = run_items(items.size(), o.jobs, [&](std::size_t i) { return evaluate(items[i], props); });
    tally(report, names_of(props), results, names, docs);
    return report;
  }

  report.generator = "topology";
  std::vector<FiniteSpace> spaces;
  std::vector<std::string> names;
  for (std::size_t n = 0; n <= std::min(o.size, kMaxExhaustivePoints); ++n) {
    std::size_t k = 0;
    for (auto& x : all_topologies(n)) {
      spaces.push_back(std::move(x));
      names.push_back("top" + std::to_string(n) + "#" + std::to_string(k++));
    }
  }
  if (o.size > kMaxExhaustivePoints)
    for (std::size_t i = 0; i < o.count; ++i) {
      const std::size_t n = rng.between(kMaxExhaustivePoints + 1, o.size);
      spaces.push_back(random_topology(n, rng));
      names.push_back("rand" + std::to_string(n) + "#" + std::to_string(i));
    }
  std::vector<std::string> docs;
  for (const auto& x : spaces) docs.push_back(compact(document_of(x)));
  const auto props = space_suite(o.suite);
  const auto results = run_items(spaces.size(), o.jobs, [&](std::size_t i) {
    try {
      SpaceCtx ctx(spaces[i], mix(o.seed, i));
      return evaluate(ctx, props);
    } catch (const std::exception& e) {
      ItemResult r;
      r.results.assign(props.size(), fail(e.what()));
      return r;
    }
  });
  tally(report, names_of(props), results, names, docs);
  return report;
}

std::string report_text(const SweepReport& r) {
  std::ostringstream out;
  out << "suite " << r.suite << "  generator " << r.generator << "  size " << r.size << "  seed " << r.seed
      << "  count " << r.count << "  items " << r.items << "\n";
  std::size_t width = 8;
  for (const auto& row : r.rows) width = std::max(width, row.name.size());
  out << std::string(width + 2, ' ') << "  pass  fail  vacuous\n";
  for (const auto& row : r.rows) {
    out << "  " << row.name << std::string(width - row.name.size(), ' ');
    char buf[64];
    std::snprintf(buf, sizeof buf, "  %4zu  %4zu  %7zu\n", row.pass, row.fail, row.vacuous);
    out << buf;
  }
  out << "accounting " << (r.accounting_holds() ? "ok" : "BROKEN") << "\n";
  out << "failures " << r.failures.size() << "\n";
  for (const auto& f : r.failures) {
    out << "  " << f.item_name << " " << f.property << ": " << f.detail;
    if (!f.witness.empty()) {
      out << "  witness";
      for (const auto& w : f.witness) out << " " << w;
    }
    out << "\n    " << f.structure << "\n";
  }
  return out.str();
}

std::string report_json(const SweepReport& r) {
  using ojson = nlohmann::ordered_json;
  ojson j;
  j["suite"] = r.suite;
  j["corpus"] = {{"generator", r.generator}, {"size", r.size}, {"seed", r.seed}, {"count", r.count}, {"items", r.items}};
  ojson rows = ojson::array();
  for (const auto& row : r.rows)
    rows.push_back({{"name", row.name}, {"pass", row.pass}, {"fail", row.fail}, {"vacuous", row.vacuous}});
  j["properties"] = rows;
  ojson fails = ojson::array();
  for (const auto& f : r.failures)
    fails.push_back({{"item", f.item},
                     {"name", f.item_name},
                     {"property", f.property},
                     {"detail", f.detail},
                     {"witness", f.witness},
                     {"structure", nlohmann::ordered_json::parse(f.structure)}});
  j["failures"] = fails;
  j["accounting"] = r.accounting_holds();
  return j.dump(2) + "\n";
}

}  // namespace mtlab
