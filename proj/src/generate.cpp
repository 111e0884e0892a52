#include "mtlab/generate.hpp"

#include <algorithm>
#include <set>

namespace mtlab {

namespace {

using Mask = std::uint64_t;

std::vector<std::string> numbered(std::string_view prefix, std::size_t n) {
  const std::size_t width = std::to_string(n == 0 ? 0 : n - 1).size();
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    out.push_back(std::string(prefix) + std::string(width - s.size(), '0') + s);
  }
  return out;
}

FiniteSpace space_from_masks(std::size_t n, const std::set<Mask>& opens) {
  std::vector<ElemSet> sets;
  for (Mask m : opens) sets.push_back(ElemSet::from_mask(n, m));
  return FiniteSpace::from_opens(numbered("", n), std::move(sets));
}

/// up[i] as masks, reflexive and transitive.
FiniteSpace upset_space(std::size_t n, const std::vector<Mask>& up) {
  std::set<Mask> opens;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if ((s >> i & 1) && (up[i] & ~s)) closed = false;
    if (closed) opens.insert(s);
  }
  return space_from_masks(n, opens);
}

void transitive_closure(std::vector<Mask>& up) {
  const std::size_t n = up.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (up[i] >> k & 1) up[i] |= up[k];
}

void require_points(std::size_t n, std::size_t cap, std::string_view what) {
  require_size_guard(n, what);
  if (n > cap)
    throw Error(ErrorCode::SizeGuardExceeded,
                std::string(what) + " of size " + std::to_string(n) + " exceeds " + std::to_string(cap));
}

/// Down-set count of a poset given by strict down-masks, naturally labelled.
std::size_t count_downsets(const std::vector<Mask>& below) {
  const std::size_t n = below.size();
  std::size_t c = 0;
  for (Mask s = 0; s < (Mask{1} << n); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      if ((s >> i & 1) && (below[i] & ~s)) ok = false;
    c += ok;
  }
  return c;
}

FinitePoset poset_from_below(const std::vector<Mask>& below) {
  const std::size_t n = below.size();
  std::vector<ElemSet> up(n, ElemSet(n));
  for (std::size_t i = 0; i < n; ++i) {
    up[i].set(static_cast<Elem>(i));
    for (std::size_t j = 0; j < n; ++j)
      if (below[j] >> i & 1) up[i].set(static_cast<Elem>(j));
  }
  return FinitePoset::from_up_sets(numbered("p", n), std::move(up));
}

/// Extends naturally labelled posets one point at a time; a new point sits
/// above a down-set of the existing points. Adding a point never lowers the
/// down-set count, so branches over the bound are cut.
void extend_posets(std::vector<Mask>& below, std::size_t max_downsets, std::vector<std::vector<Mask>>& out) {
  out.push_back(below);
  const std::size_t n = below.size();
  if (n >= 63) return;
  for (Mask d = 0; d < (Mask{1} << n); ++d) {
    bool down_closed = true;
    for (std::size_t i = 0; i < n && down_closed; ++i)
      if ((d >> i & 1) && (below[i] & ~d)) down_closed = false;
    if (!down_closed) continue;
    below.push_back(d);
    if (count_downsets(below) <= max_downsets) extend_posets(below, max_downsets, out);
    below.pop_back();
  }
}

FinitePoset relabel(const FinitePoset& p, const std::vector<std::string>& labels) {
  std::vector<ElemSet> up;
  for (Elem a = 0; a < p.size(); ++a) up.push_back(p.up(a));
  return FinitePoset::from_up_sets(labels, std::move(up));
}

std::vector<std::string> shuffled_labels(std::size_t n, Rng& rng) {
  std::vector<std::string> labels = numbered("e", n);
  rng.shuffle(labels);
  return labels;
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

std::string_view to_string(GenKind k) {
  switch (k) {
    case GenKind::Topology: return "topology";
    case GenKind::Preorder: return "preorder";
    case GenKind::DLat: return "dlat";
    case GenKind::Boolean: return "boolean";
    case GenKind::MTTable: return "mt_table";
  }
  return "?";
}

std::optional<GenKind> gen_kind_from_string(std::string_view name) {
  for (GenKind k : {GenKind::Topology, GenKind::Preorder, GenKind::DLat, GenKind::Boolean, GenKind::MTTable})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::vector<FiniteSpace> all_topologies(std::size_t n) {
  require_points(n, kMaxExhaustivePoints, "exhaustive topology enumeration");
  std::vector<std::pair<std::size_t, std::size_t>> offdiag;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag.emplace_back(i, j);
  std::vector<FiniteSpace> out;
  for (Mask r = 0; r < (Mask{1} << offdiag.size()); ++r) {
    std::vector<Mask> up(n);
    for (std::size_t i = 0; i < n; ++i) up[i] = Mask{1} << i;
    for (std::size_t k = 0; k < offdiag.size(); ++k)
      if (r >> k & 1) up[offdiag[k].first] |= Mask{1} << offdiag[k].second;
    std::vector<Mask> closed = up;
    transitive_closure(closed);
    if (closed != up) continue;
    out.push_back(upset_space(n, up));
  }
  const std::size_t brute = count_topologies_bruteforce(n);
  if (brute != out.size())
    throw Error(ErrorCode::OracleDisagreement, "topologies on " + std::to_string(n) + " points: " +
                                                   std::to_string(out.size()) + " preorders vs " +
                                                   std::to_string(brute) + " open families");
  return out;
}

std::size_t count_topologies_bruteforce(std::size_t n) {
  require_points(n, kMaxExhaustivePoints, "topology count");
  const Mask full = (Mask{1} << n) - 1;
  std::vector<Mask> middle;  // subsets other than ∅ and X
  for (Mask s = 1; s < full; ++s) middle.push_back(s);
  std::size_t count = 0;
  for (Mask fam = 0; fam < (Mask{1} << middle.size()); ++fam) {
    std::vector<bool> in(std::size_t{1} << n, false);
    in[0] = in[full] = true;
    for (std::size_t k = 0; k < middle.size(); ++k)
      if (fam >> k & 1) in[middle[k]] = true;
    bool ok = true;
    for (Mask a = 0; a <= full && ok; ++a)
      for (Mask b = a + 1; b <= full && ok && in[a]; ++b)
        if (in[b] && (!in[a | b] || !in[a & b])) ok = false;
    count += ok;
  }
  return count;
}

FiniteSpace random_topology(std::size_t n, Rng& rng) {
  require_points(n, kMaxPowersetPoints, "random topology");
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::set<Mask> meets{full};
  const std::size_t k = rng.between(1, n + 1);
  for (std::size_t i = 0; i < k; ++i) {
    const Mask s = rng.next() & full;
    std::vector<Mask> add;
    for (Mask m : meets) add.push_back(m & s);
    meets.insert(add.begin(), add.end());
  }
  std::set<Mask> opens{0};
  for (Mask m : meets) {
    std::vector<Mask> add;
    for (Mask u : opens) add.push_back(u | m);
    opens.insert(add.begin(), add.end());
  }
  return space_from_masks(n, opens);
}

FiniteSpace random_preorder_space(std::size_t n, Rng& rng) {
  require_points(n, kMaxPowersetPoints, "random preorder");
  std::vector<Mask> up(n);
  for (std::size_t i = 0; i < n; ++i) {
    up[i] = Mask{1} << i;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i && rng.below(3) == 0) up[i] |= Mask{1} << j;
  }
  transitive_closure(up);
  return upset_space(n, up);
}

std::vector<FiniteLattice> distributive_lattices_upto(std::size_t max_size) {
  require_points(max_size, kMaxExhaustiveLattice, "exhaustive lattice enumeration");
  std::vector<std::vector<Mask>> posets;
  std::vector<Mask> start;
  if (max_size >= 1) extend_posets(start, max_size, posets);
  std::vector<FinitePoset> reps;
  for (const auto& below : posets) {
    FinitePoset p = poset_from_below(below);
    bool seen = false;
    for (const auto& q : reps)
      if (q.size() == p.size() && order_isomorphism(q, p)) {
        seen = true;
        break;
      }
    if (!seen) reps.push_back(std::move(p));
  }
  std::vector<FiniteLattice> out;
  for (const auto& p : reps) out.push_back(downset_lattice(p).lattice);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  return out;
}

FiniteLattice random_distributive_lattice(std::size_t n, Rng& rng) {
  require_points(n, 12, "random distributive lattice");
  std::vector<Mask> below(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (rng.coin()) below[j] |= Mask{1} << i;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (below[j] >> i & 1) below[j] |= below[i];
  return downset_lattice(poset_from_below(below)).lattice;
}

FiniteBooleanAlgebra random_boolean(std::size_t atoms, Rng& rng) {
  require_points(atoms, kMaxBooleanAtoms, "boolean algebra");
  const FiniteBooleanAlgebra ba = FiniteBooleanAlgebra::powerset(numbered("a", atoms));
  const FinitePoset p = relabel(ba.lattice().poset(), shuffled_labels(ba.size(), rng));
  return FiniteBooleanAlgebra::from_lattice(FiniteLattice::from_poset(p));
}

MTAlgebra random_mt_table(std::size_t atoms, Rng& rng) {
  require_points(atoms, kMaxBooleanAtoms, "MT-algebra");
  const MTAlgebra m = powerset_mt(random_topology(atoms, rng));
  const FinitePoset p = relabel(m.lattice().poset(), shuffled_labels(m.size(), rng));
  FiniteBooleanAlgebra ba = FiniteBooleanAlgebra::from_lattice(FiniteLattice::from_poset(p));
  return MTAlgebra::from_table(std::move(ba), m.box_table());
}

Document generate(GenKind kind, std::size_t size, std::uint64_t seed) {
  Rng rng(seed);
  switch (kind) {
    case GenKind::Topology: return document_of(random_topology(size, rng));
    case GenKind::Preorder: return document_of(random_preorder_space(size, rng));
    case GenKind::DLat: return document_of(random_distributive_lattice(size, rng).poset(), DocKind::Lattice);
    case GenKind::Boolean: return document_of(random_boolean(size, rng).lattice().poset(), DocKind::Boolean);
    case GenKind::MTTable: return document_of(random_mt_table(size, rng));
  }
  throw Error(ErrorCode::ShapeMismatch, "unknown generator");
}

std::vector<Document> generate_all(GenKind kind, std::size_t size) {
  std::vector<Document> out;
  switch (kind) {
    case GenKind::Topology:
    case GenKind::Preorder:
      for (const auto& x : all_topologies(size)) out.push_back(document_of(x));
      return out;
    case GenKind::DLat:
      for (const auto& l : distributive_lattices_upto(size)) out.push_back(document_of(l.poset(), DocKind::Lattice));
      return out;
    case GenKind::Boolean:
      for (std::size_t n = 0; n <= size; ++n) {
        require_points(n, kMaxBooleanAtoms, "boolean algebra");
        out.push_back(document_of(FiniteBooleanAlgebra::powerset(numbered("a", n)).lattice().poset(), DocKind::Boolean));
      }
      return out;
    case GenKind::MTTable:
      break;
  }
  throw Error(ErrorCode::ShapeMismatch, "no exhaustive mode for " + std::string(to_string(kind)));
}

}  // namespace mtlab
