#include "mtlab/space.hpp"

#include <algorithm>
#include <array>
#include <functional>

#include "mtlab/functors.hpp"
#include "mtlab/mt.hpp"

namespace mtlab {

namespace {

std::vector<std::string> point_labels(const FiniteSpace& x, const ElemSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Elem p) { out.push_back(x.label(p)); });
  return out;
}

}  // namespace

FiniteSpace FiniteSpace::from_opens(std::vector<std::string> points, std::vector<ElemSet> opens) {
  const std::size_t n = points.size();
  {
    std::vector<std::string> sorted = points;
    std::sort(sorted.begin(), sorted.end());
    if (auto it = std::adjacent_find(sorted.begin(), sorted.end()); it != sorted.end())
      throw Error(ErrorCode::DuplicateLabel, "point label '" + *it + "' appears twice", {*it});
  }
  for (const ElemSet& u : opens)
    if (u.universe() != n) throw Error(ErrorCode::ShapeMismatch, "open set over the wrong point universe");
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());

  FiniteSpace x;
  x.points_ = std::move(points);
  x.opens_ = std::move(opens);
  auto missing = [&](const ElemSet& s, const std::string& why) {
    throw Error(ErrorCode::NotATopology, why + " " + set_label(x, s) + " is not open", point_labels(x, s));
  };
  if (!x.is_open(x.empty())) missing(x.empty(), "empty set");
  if (!x.is_open(x.full())) missing(x.full(), "whole space");
  for (std::size_t i = 0; i < x.opens_.size(); ++i)
    for (std::size_t j = i + 1; j < x.opens_.size(); ++j) {
      const ElemSet& u = x.opens_[i];
      const ElemSet& v = x.opens_[j];
      if (!x.is_open(u | v))
        throw Error(ErrorCode::NotATopology,
                    "union of " + set_label(x, u) + " and " + set_label(x, v) + " is not open",
                    {set_label(x, u), set_label(x, v)});
      if (!x.is_open(u & v))
        throw Error(ErrorCode::NotATopology,
                    "intersection of " + set_label(x, u) + " and " + set_label(x, v) + " is not open",
                    {set_label(x, u), set_label(x, v)});
    }

  x.min_open_.assign(n, x.full());
  for (const ElemSet& u : x.opens_)
    u.for_each([&](Elem p) { x.min_open_[p] &= u; });
  return x;
}

std::optional<Elem> FiniteSpace::find(const std::string& label) const {
  auto it = std::find(points_.begin(), points_.end(), label);
  if (it == points_.end()) return std::nullopt;
  return static_cast<Elem>(it - points_.begin());
}

Elem FiniteSpace::index(const std::string& label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::UnknownLabel, "no point labelled '" + label + "'", {label});
}

bool FiniteSpace::is_open(const ElemSet& s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

ElemSet FiniteSpace::interior(const ElemSet& s) const {
  ElemSet out = empty();
  for (const ElemSet& u : opens_)
    if (u.is_subset_of(s)) out |= u;
  return out;
}

ElemSet FiniteSpace::closure(const ElemSet& s) const { return interior(s.complement()).complement(); }

std::string set_label(const FiniteSpace& x, const ElemSet& s) { return set_label(x.labels(), s); }

// ---------------------------------------------------------------- specialization

Specialization specialization(const FiniteSpace& x) {
  Specialization sp;
  for (Elem p = 0; p < x.size(); ++p) sp.up.push_back(x.neighbourhood(p));
  for (Elem p = 0; p < x.size() && sp.antisymmetric; ++p)
    for (Elem q = p + 1; q < x.size(); ++q)
      if (sp.up[p].test(q) && sp.up[q].test(p)) {
        sp.antisymmetric = false;
        sp.witness = {p, q};
        break;
      }
  return sp;
}

FinitePoset specialization_poset(const FiniteSpace& x) {
  Specialization sp = specialization(x);
  if (!sp.antisymmetric)
    throw Error(ErrorCode::NotAntisymmetric, "specialization preorder identifies distinct points",
                {x.label(sp.witness[0]), x.label(sp.witness[1])});
  return FinitePoset::from_up_sets(x.labels(), sp.up);
}

std::vector<ElemSet> saturated_sets(const FiniteSpace& x) {
  std::vector<ElemSet> out = x.opens();
  out.push_back(x.full());
  for (bool grew = true; grew;) {
    grew = false;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        ElemSet m = out[i] & out[j];
        if (!std::binary_search(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k), m)) {
          out.push_back(std::move(m));
          grew = true;
        }
      }
  }
  return out;
}

std::vector<ElemSet> specialization_upsets(const FiniteSpace& x) {
  require_size_guard(x.size(), "up-set enumeration over points");
  const Specialization sp = specialization(x);
  std::vector<ElemSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << x.size()); ++mask) {
    ElemSet s = ElemSet::from_mask(x.size(), mask);
    bool up = true;
    s.for_each([&](Elem p) { up = up && sp.up[p].is_subset_of(s); });
    if (up) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ElemSet> compact_saturated_sets(const FiniteSpace& x) {
  std::vector<ElemSet> sat = saturated_sets(x);
  if (within_size_guard(x.size()) && sat != specialization_upsets(x))
    throw Error(ErrorCode::OracleDisagreement, "saturated sets differ from specialization up-sets");
  return sat;
}

// ---------------------------------------------------------------- predicates

namespace {

constexpr std::array<std::pair<SpacePredicate, std::string_view>, 11> kSpaceNames{{
    {SpacePredicate::T0, "t0"},
    {SpacePredicate::T1, "t1"},
    {SpacePredicate::Sober, "sober"},
    {SpacePredicate::Compact, "compact"},
    {SpacePredicate::LocallyCompact, "locally_compact"},
    {SpacePredicate::Hausdorff, "hausdorff"},
    {SpacePredicate::ZeroDim, "zero_dim"},
    {SpacePredicate::StablyLocallyCompact, "stably_locally_compact"},
    {SpacePredicate::StablyCompact, "stably_compact"},
    {SpacePredicate::LocallyStone, "locally_stone"},
    {SpacePredicate::Stone, "stone"},
}};

Verdict t0(const FiniteSpace& x) {
  const Specialization sp = specialization(x);
  if (!sp.antisymmetric) return Verdict::no("two points have the same neighbourhoods", sp.witness);
  return Verdict::yes();
}

Verdict t1(const FiniteSpace& x) {
  for (Elem p = 0; p < x.size(); ++p)
    if (!x.is_closed(ElemSet(x.size(), {p}))) return Verdict::no("singleton is not closed", {p});
  return Verdict::yes();
}

std::vector<ElemSet> closed_sets(const FiniteSpace& x) {
  std::vector<ElemSet> out;
  for (const ElemSet& u : x.opens()) out.push_back(u.complement());
  std::sort(out.begin(), out.end());
  return out;
}

Verdict sober(const FiniteSpace& x) {
  const std::vector<ElemSet> closeds = closed_sets(x);
  for (const ElemSet& f : closeds) {
    if (f.none()) continue;
    bool reducible = false;
    for (const ElemSet& a : closeds)
      for (const ElemSet& b : closeds)
        if (a != f && b != f && a.is_subset_of(f) && b.is_subset_of(f) && (a | b) == f) reducible = true;
    if (reducible) continue;
    std::vector<Elem> generic;
    f.for_each([&](Elem p) {
      if (x.closure(ElemSet(x.size(), {p})) == f) generic.push_back(p);
    });
    if (generic.size() != 1) {
      std::vector<Elem> w = f.members();
      return Verdict::no(generic.empty() ? "irreducible closed set without a generic point"
                                         : "irreducible closed set with several generic points",
                         w);
    }
  }
  return Verdict::yes();
}

Verdict locally_compact(const FiniteSpace& x) {
  // x ∈ V ⊆ K ⊆ U with V open and K compact; every finite subset is compact.
  for (const ElemSet& u : x.opens())
    for (Elem p : u.members()) {
      bool found = false;
      for (const ElemSet& v : x.opens())
        if (v.test(p) && v.is_subset_of(u)) found = true;
      if (!found) return Verdict::no("no compact neighbourhood inside an open set", {p});
    }
  return Verdict::yes();
}

Verdict hausdorff(const FiniteSpace& x) {
  for (Elem p = 0; p < x.size(); ++p)
    for (Elem q = p + 1; q < x.size(); ++q) {
      bool separated = false;
      for (const ElemSet& u : x.opens()) {
        if (!u.test(p) || u.test(q)) continue;
        for (const ElemSet& v : x.opens())
          if (v.test(q) && !u.intersects(v)) separated = true;
      }
      if (!separated) return Verdict::no("points cannot be separated by disjoint opens", {p, q});
    }
  return Verdict::yes();
}

Verdict zero_dim(const FiniteSpace& x) {
  if (auto v = t1(x); !v) return Verdict::no("not T1: " + v.reason, v.witness);
  for (const ElemSet& u : x.opens()) {
    ElemSet acc = x.empty();
    for (const ElemSet& c : x.opens())
      if (x.is_closed(c) && c.is_subset_of(u)) acc |= c;
    if (acc != u) {
      std::vector<Elem> w = (u - acc).members();
      return Verdict::no("clopens do not form a basis", w);
    }
  }
  return Verdict::yes();
}

Verdict stably_locally_compact(const FiniteSpace& x) {
  if (auto v = sober(x); !v) return Verdict::no("not sober: " + v.reason, v.witness);
  if (auto v = locally_compact(x); !v) return Verdict::no("not locally compact: " + v.reason, v.witness);
  // Intersections of compact saturated sets are saturated, and compact because finite.
  const std::vector<ElemSet> ks = compact_saturated_sets(x);
  for (const ElemSet& a : ks)
    for (const ElemSet& b : ks)
      if (!std::binary_search(ks.begin(), ks.end(), a & b))
        return Verdict::no("intersection of compact saturated sets is not compact saturated", (a & b).members());
  return Verdict::yes();
}

Verdict locally_stone(const FiniteSpace& x) {
  if (auto v = zero_dim(x); !v) return Verdict::no("not zero-dimensional: " + v.reason, v.witness);
  if (auto v = locally_compact(x); !v) return Verdict::no("not locally compact: " + v.reason, v.witness);
  if (auto v = hausdorff(x); !v) return Verdict::no("not Hausdorff: " + v.reason, v.witness);
  return Verdict::yes();
}

}  // namespace

std::string_view to_string(SpacePredicate p) {
  for (const auto& [k, name] : kSpaceNames)
    if (k == p) return name;
  return "?";
}

std::optional<SpacePredicate> space_predicate_from_string(std::string_view name) {
  for (const auto& [k, n] : kSpaceNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<SpacePredicate>& all_space_predicates() {
  static const std::vector<SpacePredicate> all = [] {
    std::vector<SpacePredicate> v;
    for (const auto& [k, n] : kSpaceNames) v.push_back(k);
    return v;
  }();
  return all;
}

Verdict space_predicate_direct(const FiniteSpace& x, SpacePredicate p) {
  switch (p) {
    case SpacePredicate::T0: return t0(x);
    case SpacePredicate::T1: return t1(x);
    case SpacePredicate::Sober: return sober(x);
    case SpacePredicate::Compact: return Verdict::yes();  // a finite cover is its own finite subcover
    case SpacePredicate::LocallyCompact: return locally_compact(x);
    case SpacePredicate::Hausdorff: return hausdorff(x);
    case SpacePredicate::ZeroDim: return zero_dim(x);
    case SpacePredicate::StablyLocallyCompact: return stably_locally_compact(x);
    case SpacePredicate::StablyCompact: return stably_locally_compact(x);
    case SpacePredicate::LocallyStone: return locally_stone(x);
    case SpacePredicate::Stone: return locally_stone(x);
  }
  return Verdict::yes();
}

Verdict space_predicate_via_powerset(const FiniteSpace& x, SpacePredicate p) {
  const MTAlgebra m = powerset_mt(x);
  Verdict v;
  switch (p) {
    case SpacePredicate::T0: v = separation_check(m, Separation::T0); break;
    case SpacePredicate::T1: v = separation_check(m, Separation::T1); break;
    case SpacePredicate::Sober: v = separation_check(m, Separation::Sober); break;
    case SpacePredicate::Compact: v = compactness_check(m, Compactness::Compact); break;
    case SpacePredicate::LocallyCompact: v = compactness_check(m, Compactness::LocallyCompact); break;
    case SpacePredicate::Hausdorff: v = separation_check(m, Separation::Hausdorff); break;
    case SpacePredicate::ZeroDim: v = separation_check(m, Separation::ZeroDim); break;
    case SpacePredicate::StablyLocallyCompact: v = compactness_check(m, Compactness::StablyLocallyCompact); break;
    case SpacePredicate::StablyCompact: v = compactness_check(m, Compactness::StablyCompact); break;
    case SpacePredicate::LocallyStone: v = compactness_check(m, Compactness::LocallyStone); break;
    case SpacePredicate::Stone: v = compactness_check(m, Compactness::Stone); break;
  }
  return v;
}

Verdict space_predicate(const FiniteSpace& x, SpacePredicate p) {
  Verdict direct = space_predicate_direct(x, p);
  Verdict via = space_predicate_via_powerset(x, p);
  if (direct.holds != via.holds)
    throw Error(ErrorCode::OracleDisagreement,
                std::string(to_string(p)) + ": space evaluation " + (direct.holds ? "true" : "false") +
                    " but P(X) evaluation " + (via.holds ? "true" : "false"));
  return direct;
}

// ---------------------------------------------------------------- maps

ElemSet preimage(const std::vector<Elem>& f, std::size_t source_size, const ElemSet& s) {
  ElemSet out(source_size);
  for (Elem p = 0; p < source_size; ++p)
    if (s.test(f[p])) out.set(p);
  return out;
}

ElemSet image(const std::vector<Elem>& f, std::size_t target_size, const ElemSet& s) {
  ElemSet out(target_size);
  s.for_each([&](Elem p) { out.set(f[p]); });
  return out;
}

ContinuousMapCheck check_map(const std::vector<Elem>& f, const FiniteSpace& x, const FiniteSpace& y) {
  if (f.size() != x.size()) throw Error(ErrorCode::ShapeMismatch, "map is not total on the source points");
  for (Elem v : f)
    if (v >= y.size()) throw Error(ErrorCode::ShapeMismatch, "map value outside the target points");
  ContinuousMapCheck r;
  r.map = f;
  r.is_continuous = true;
  for (const ElemSet& u : y.opens()) {
    ElemSet pre = preimage(f, x.size(), u);
    if (!x.is_open(pre)) {
      r.is_continuous = false;
      r.failure = Verdict::no("preimage of open " + set_label(y, u) + " is " + set_label(x, pre) + ", not open",
                              u.members());
      r.failing_set = u;
      break;
    }
  }
  // Preimages of compact saturated sets are finite, hence compact.
  r.is_proper = r.is_continuous;
  return r;
}

namespace {

struct PreorderMatch {
  const std::vector<ElemSet>& ua;
  const std::vector<ElemSet>& ub;
  std::vector<std::pair<std::size_t, std::size_t>> sig_a, sig_b;
  std::vector<Elem> map;
  std::vector<bool> used;

  bool extend(Elem p) {
    const std::size_t n = ua.size();
    if (p == n) return true;
    for (Elem q = 0; q < n; ++q) {
      if (used[q] || sig_a[p] != sig_b[q]) continue;
      bool ok = true;
      for (Elem r = 0; r < p && ok; ++r)
        ok = ua[p].test(r) == ub[q].test(map[r]) && ua[r].test(p) == ub[map[r]].test(q);
      if (!ok) continue;
      map[p] = q;
      used[q] = true;
      if (extend(p + 1)) return true;
      used[q] = false;
    }
    return false;
  }
};

std::vector<std::pair<std::size_t, std::size_t>> preorder_signature(const std::vector<ElemSet>& up) {
  std::vector<std::pair<std::size_t, std::size_t>> sig(up.size(), {0, 0});
  for (Elem p = 0; p < up.size(); ++p) {
    sig[p].first = up[p].count();
    up[p].for_each([&](Elem q) { ++sig[q].second; });
  }
  return sig;
}

}  // namespace

bool is_homeomorphism(const std::vector<Elem>& f, const FiniteSpace& x, const FiniteSpace& y) {
  if (f.size() != x.size() || x.size() != y.size()) return false;
  ElemSet hit(y.size());
  for (Elem v : f) {
    if (v >= y.size() || hit.test(v)) return false;
    hit.set(v);
  }
  for (const ElemSet& u : y.opens())
    if (!x.is_open(preimage(f, x.size(), u))) return false;
  for (const ElemSet& u : x.opens())
    if (!y.is_open(image(f, y.size(), u))) return false;
  return true;
}

std::optional<std::vector<Elem>> homeomorphism(const FiniteSpace& x, const FiniteSpace& y) {
  if (x.size() != y.size() || x.opens().size() != y.opens().size()) return std::nullopt;
  const Specialization sx = specialization(x), sy = specialization(y);
  PreorderMatch m{sx.up, sy.up, preorder_signature(sx.up), preorder_signature(sy.up),
                  std::vector<Elem>(x.size(), 0), std::vector<bool>(x.size(), false)};
  if (!m.extend(0)) return std::nullopt;
  if (!is_homeomorphism(m.map, x, y))
    throw Error(ErrorCode::OracleDisagreement, "specialization isomorphism is not a homeomorphism");
  return m.map;
}

}  // namespace mtlab
