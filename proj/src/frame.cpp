#include "mtlab/frame.hpp"

#include <algorithm>
#include <array>

#include "mtlab/subsets.hpp"

namespace mtlab {

Frame Frame::from_lattice(FiniteLattice l) {
  if (auto d = is_distributive(l); !d) {
    std::vector<std::string> w;
    for (Elem e : d.witness) w.push_back(l.label(e));
    throw Error(ErrorCode::NotDistributive, "a∧(b∨c) != (a∧b)∨(a∧c)", w);
  }
  Frame f;
  f.lattice_ = std::move(l);
  return f;
}

// ---------------------------------------------------------------- ≪

Relation way_below_bruteforce(const Frame& l) {
  const SubsetTable t = make_subset_table(l.lattice(), l.all(), "way-below oracle");
  const auto directed = directed_subsets(l.lattice(), t);
  Relation rel(l.size(), ElemSet(l.size()));
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = 0; b < l.size(); ++b) {
      bool wb = true;
      for (std::uint32_t s = 1; s < t.subset_count() && wb; ++s) {
        if (!directed[s] || !l.leq(b, t.joins[s])) continue;
        bool hit = false;
        for (std::uint32_t r = s; r && !hit; r &= r - 1) hit = l.leq(a, t.items[std::countr_zero(r)]);
        wb = hit;
      }
      if (wb) rel[a].set(b);
    }
  return rel;
}

Relation way_below(const Frame& l) {
  Relation rel(l.size());
  for (Elem a = 0; a < l.size(); ++a) rel[a] = l.up(a);
  if (within_size_guard(l.size()) && way_below_bruteforce(l) != rel)
    throw Error(ErrorCode::OracleDisagreement, "way-below: subset oracle disagrees with <=");
  return rel;
}

// ---------------------------------------------------------------- predicates

namespace {

constexpr std::array<std::pair<FramePredicate, std::string_view>, 8> kFrameNames{{
    {FramePredicate::Continuous, "continuous"},
    {FramePredicate::StablyContinuous, "stably_continuous"},
    {FramePredicate::Compact, "compact"},
    {FramePredicate::Regular, "regular"},
    {FramePredicate::ZeroDim, "zero_dim"},
    {FramePredicate::LocallyStone, "locally_stone"},
    {FramePredicate::Stone, "stone"},
    {FramePredicate::Spatial, "spatial"},
}};

/// Every a equals the join of the elements b below it with keep(b, a).
template <class Keep>
Verdict approximated(const Frame& l, Keep&& keep, const char* reason) {
  for (Elem a = 0; a < l.size(); ++a) {
    Elem acc = l.bottom();
    for (Elem b = 0; b < l.size(); ++b)
      if (keep(b, a)) acc = l.join(acc, b);
    if (acc != a) return Verdict::no(reason, {a});
  }
  return Verdict::yes();
}

Verdict continuous(const Frame& l, const Relation& wb) {
  return approximated(l, [&](Elem x, Elem a) { return wb[x].test(a); }, "element is not the join of elements way below it");
}

Verdict zero_dim(const Frame& l) {
  const ElemSet cmp = complemented_elements(l.lattice());
  return approximated(
      l, [&](Elem c, Elem a) { return cmp.test(c) && l.leq(c, a); },
      "element is not the join of complemented elements below it");
}

Verdict compact(const Frame& l, const Relation& wb) {
  if (!wb[l.top()].test(l.top())) return Verdict::no("top is not way below itself", {l.top()});
  return Verdict::yes();
}

Verdict spatial(const Frame& l) {
  const FramePointSet pts = points(l);
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a + 1; b < l.size(); ++b)
      if (pts.zeta[a] == pts.zeta[b]) return Verdict::no("ζ identifies distinct elements", {a, b});
  return Verdict::yes();
}

}  // namespace

std::string_view to_string(FramePredicate p) {
  for (const auto& [k, n] : kFrameNames)
    if (k == p) return n;
  return "?";
}

std::optional<FramePredicate> frame_predicate_from_string(std::string_view name) {
  for (const auto& [k, n] : kFrameNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<FramePredicate>& all_frame_predicates() {
  static const std::vector<FramePredicate> all = [] {
    std::vector<FramePredicate> v;
    for (const auto& [k, n] : kFrameNames) v.push_back(k);
    return v;
  }();
  return all;
}

bool well_inside(const Frame& l, Elem b, Elem a) {
  return l.join(pseudocomplement(l.lattice(), b), a) == l.top();
}

Verdict frame_predicate(const Frame& l, FramePredicate p) {
  switch (p) {
    case FramePredicate::Continuous:
      return continuous(l, way_below(l));
    case FramePredicate::StablyContinuous: {
      const Relation wb = way_below(l);
      if (auto c = continuous(l, wb); !c) return Verdict::no("not continuous: " + c.reason, c.witness);
      for (Elem a = 0; a < l.size(); ++a)
        for (Elem b : wb[a].members())
          for (Elem c : wb[a].members())
            if (!wb[a].test(l.meet(b, c))) return Verdict::no("a ≪ b, a ≪ c but not a ≪ b∧c", {a, b, c});
      return Verdict::yes();
    }
    case FramePredicate::Compact:
      return compact(l, way_below(l));
    case FramePredicate::Regular:
      return approximated(
          l, [&](Elem b, Elem a) { return l.leq(b, a) && well_inside(l, b, a); },
          "element is not the join of elements well inside it");
    case FramePredicate::ZeroDim:
      return zero_dim(l);
    case FramePredicate::LocallyStone: {
      if (auto c = continuous(l, way_below(l)); !c) return Verdict::no("not continuous: " + c.reason, c.witness);
      if (auto z = zero_dim(l); !z) return Verdict::no("not zero-dimensional: " + z.reason, z.witness);
      return Verdict::yes();
    }
    case FramePredicate::Stone: {
      if (auto s = frame_predicate(l, FramePredicate::LocallyStone); !s) return s;
      return compact(l, way_below(l));
    }
    case FramePredicate::Spatial:
      return spatial(l);
  }
  return Verdict::yes();
}

// ---------------------------------------------------------------- points

bool is_filter(const Frame& l, const ElemSet& f) {
  if (!f.test(l.top())) return false;
  for (Elem a : f.members()) {
    if (!l.up(a).is_subset_of(f)) return false;
    for (Elem b : f.members())
      if (!f.test(l.meet(a, b))) return false;
  }
  return true;
}

bool is_prime_filter(const Frame& l, const ElemSet& p) {
  if (!is_filter(l, p) || p.test(l.bottom())) return false;
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem b = a + 1; b < l.size(); ++b)
      if (p.test(l.join(a, b)) && !p.test(a) && !p.test(b)) return false;
  return true;
}

bool is_completely_prime_bruteforce(const Frame& l, const ElemSet& p) {
  if (!is_filter(l, p) || p.test(l.bottom())) return false;
  const SubsetTable t = make_subset_table(l.lattice(), l.all(), "completely-prime oracle");
  const std::uint32_t in_p = t.mask_of(p);
  for (std::uint32_t s = 0; s < t.subset_count(); ++s)
    if (p.test(t.joins[s]) && (s & in_p) == 0) return false;
  return true;
}

FramePointSet points(const Frame& l) {
  FramePointSet out;
  const bool oracle = within_size_guard(l.size());
  for (Elem a = 0; a < l.size(); ++a) {
    const ElemSet f = l.up(a);
    const bool prime = is_prime_filter(l, f);
    if (oracle && prime != is_completely_prime_bruteforce(l, f))
      throw Error(ErrorCode::OracleDisagreement, "prime and completely prime differ at ↑" + l.label(a));
    if (prime) out.points.push_back(f);
  }
  std::sort(out.points.begin(), out.points.end());
  if (out.points.size() != join_irreducibles(l.lattice()).count())
    throw Error(ErrorCode::OracleDisagreement, "number of points differs from number of join-irreducibles");
  out.zeta.assign(l.size(), ElemSet(out.points.size()));
  for (Elem i = 0; i < out.points.size(); ++i)
    out.points[i].for_each([&](Elem a) { out.zeta[a].set(i); });
  return out;
}

std::vector<Elem> pt_map(const std::vector<Elem>& h, const Frame& source, const FramePointSet& source_points,
                         const Frame& target, const FramePointSet& target_points) {
  std::vector<Elem> out;
  for (const ElemSet& p : target_points.points) {
    ElemSet pre(source.size());
    for (Elem a = 0; a < source.size(); ++a)
      if (p.test(h[a])) pre.set(a);
    auto it = std::lower_bound(source_points.points.begin(), source_points.points.end(), pre);
    if (it == source_points.points.end() || *it != pre)
      throw Error(ErrorCode::NotFrameHom, "preimage of a point is not a point", {set_label(target.labels(), p)});
    out.push_back(static_cast<Elem>(it - source_points.points.begin()));
  }
  return out;
}

// ---------------------------------------------------------------- homomorphisms

FrameHomCheck check_frame_hom(const std::vector<Elem>& h, const Frame& source, const Frame& target) {
  if (h.size() != source.size()) throw Error(ErrorCode::ShapeMismatch, "map is not total on the source frame");
  for (Elem v : h)
    if (v >= target.size()) throw Error(ErrorCode::ShapeMismatch, "map value outside the target frame");
  FrameHomCheck r;
  r.map = h;
  r.is_frame_hom = true;
  auto fail = [&](std::string why, std::vector<Elem> w) {
    if (r.is_frame_hom) r.failure = Verdict::no(std::move(why), std::move(w));
    r.is_frame_hom = false;
  };
  if (h[source.bottom()] != target.bottom()) fail("h(0) != 0", {source.bottom()});
  if (h[source.top()] != target.top()) fail("h(1) != 1", {source.top()});
  for (Elem a = 0; a < source.size() && r.is_frame_hom; ++a)
    for (Elem b = a + 1; b < source.size() && r.is_frame_hom; ++b) {
      if (h[source.meet(a, b)] != target.meet(h[a], h[b])) fail("h(a∧b) != h(a)∧h(b)", {a, b});
      if (h[source.join(a, b)] != target.join(h[a], h[b])) fail("h(a∨b) != h(a)∨h(b)", {a, b});
    }
  if (r.is_frame_hom && within_size_guard(source.size())) {
    const SubsetTable t = make_subset_table(source.lattice(), source.all(), "arbitrary-join check");
    for (std::uint32_t s = 0; s < t.subset_count() && r.is_frame_hom; ++s) {
      Elem image = target.bottom();
      for (std::uint32_t b = s; b; b &= b - 1) image = target.join(image, h[t.items[std::countr_zero(b)]]);
      if (h[t.joins[s]] != image) fail("h(⋁S) != ⋁h[S]", {t.joins[s]});
    }
  }
  if (r.is_frame_hom) {
    const Relation ws = way_below(source), wt = way_below(target);
    r.is_proper = true;
    for (Elem a = 0; a < source.size() && r.is_proper; ++a)
      ws[a].for_each([&](Elem b) {
        if (r.is_proper && !wt[h[a]].test(h[b])) {
          r.is_proper = false;
          r.failure = Verdict::no("a ≪ b but h(a) is not way below h(b)", {a, b});
        }
      });
  }
  return r;
}

// ---------------------------------------------------------------- filters

std::vector<FrameFilter> frame_filters(const Frame& l) {
  const SubsetTable t = make_subset_table(l.lattice(), l.all(), "frame filter enumeration");
  const auto directed = directed_subsets(l.lattice(), t);

  std::vector<ElemSet> principal;
  for (Elem a = 0; a < l.size(); ++a) principal.push_back(l.up(a));
  std::sort(principal.begin(), principal.end());

  std::vector<ElemSet> scanned;
  for (std::uint32_t s = 1; s < t.subset_count(); ++s) {
    ElemSet f(l.size());
    for (std::uint32_t b = s; b; b &= b - 1) f.set(t.items[std::countr_zero(b)]);
    if (is_filter(l, f)) scanned.push_back(std::move(f));
  }
  std::sort(scanned.begin(), scanned.end());
  if (scanned != principal)
    throw Error(ErrorCode::OracleDisagreement, "frame filters: principal enumeration disagrees with subset scan");

  std::vector<FrameFilter> out;
  for (ElemSet& f : principal) {
    const std::uint32_t in_f = t.mask_of(f);
    bool scott = true;
    for (std::uint32_t s = 1; s < t.subset_count() && scott; ++s)
      if (directed[s] && f.test(t.joins[s]) && (s & in_f) == 0) scott = false;
    out.push_back({std::move(f), scott});
  }
  return out;
}

std::vector<ElemSet> scott_open_filters(const Frame& l) {
  std::vector<ElemSet> out;
  for (FrameFilter& f : frame_filters(l))
    if (f.is_scott_open) out.push_back(std::move(f.members));
  return out;
}

}  // namespace mtlab
