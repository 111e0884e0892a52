#include "mtlab/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

namespace mtlab {

std::string set_label(const std::vector<std::string>& labels, const ElemSet& members) {
  std::string out = "{";
  bool first = true;
  members.for_each([&](Elem e) {
    if (!first) out += ',';
    out += labels[e];
    first = false;
  });
  return out + "}";
}

// ---------------------------------------------------------------- posets

FinitePoset FinitePoset::from_pairs(std::vector<std::string> labels, const std::vector<OrderPair>& pairs) {
  const std::size_t n = labels.size();
  {
    std::unordered_map<std::string, Elem> seen;
    for (Elem i = 0; i < n; ++i)
      if (!seen.emplace(labels[i], i).second)
        throw Error(ErrorCode::DuplicateLabel, "label '" + labels[i] + "' appears twice", {labels[i]});
  }
  std::vector<ElemSet> up(n, ElemSet(n));
  for (Elem i = 0; i < n; ++i) up[i].set(i);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::UnknownLabel, "order pair refers to a missing element");
    up[a].set(b);
  }
  // Warshall over bitset rows.
  for (Elem k = 0; k < n; ++k)
    for (Elem i = 0; i < n; ++i)
      if (up[i].test(k)) up[i] |= up[k];
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (up[a].test(b) && up[b].test(a))
        throw Error(ErrorCode::NotAntisymmetric, labels[a] + " <= " + labels[b] + " <= " + labels[a],
                    {labels[a], labels[b]});
  return from_up_sets(std::move(labels), std::move(up));
}

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> labels, std::vector<ElemSet> up) {
  FinitePoset p;
  const std::size_t n = labels.size();
  p.labels_ = std::move(labels);
  p.up_ = std::move(up);
  p.down_.assign(n, ElemSet(n));
  for (Elem a = 0; a < n; ++a) p.up_[a].for_each([&](Elem b) { p.down_[b].set(a); });
  return p;
}

std::optional<Elem> FinitePoset::find(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<Elem>(it - labels_.begin());
}

Elem FinitePoset::index(const std::string& label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorCode::UnknownLabel, "no element labelled '" + label + "'", {label});
}

std::vector<OrderPair> FinitePoset::covers() const {
  std::vector<OrderPair> out;
  for (Elem a = 0; a < size(); ++a) {
    ElemSet strictly_above = up_[a];
    strictly_above.reset(a);
    strictly_above.for_each([&](Elem b) {
      // b covers a when nothing lies strictly between them.
      ElemSet between = strictly_above & down_[b];
      between.reset(b);
      if (between.none()) out.emplace_back(a, b);
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

FinitePoset FinitePoset::restrict(const ElemSet& subset) const {
  std::vector<Elem> members = subset.members();
  const std::size_t m = members.size();
  std::vector<std::string> labels;
  labels.reserve(m);
  for (Elem e : members) labels.push_back(labels_[e]);
  std::vector<ElemSet> up(m, ElemSet(m));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (leq(members[i], members[j])) up[i].set(j);
  return from_up_sets(std::move(labels), std::move(up));
}

// ---------------------------------------------------------------- lattices

FiniteLattice FiniteLattice::from_poset(FinitePoset poset) {
  const std::size_t n = poset.size();
  if (n == 0) throw Error(ErrorCode::NotALattice, "empty poset has no top or bottom");
  std::vector<std::size_t> down_count(n), up_count(n);
  for (Elem a = 0; a < n; ++a) {
    down_count[a] = poset.down(a).count();
    up_count[a] = poset.up(a).count();
  }
  FiniteLattice l;
  l.meet_.assign(n * n, 0);
  l.join_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a; b < n; ++b) {
      ElemSet lower = poset.down(a) & poset.down(b);
      const std::size_t lc = lower.count();
      Elem glb = static_cast<Elem>(n);
      lower.for_each([&](Elem g) {
        if (down_count[g] == lc) glb = g;
      });
      if (glb == n)
        throw Error(ErrorCode::NotALattice, "no greatest lower bound for " + poset.label(a) + ", " + poset.label(b),
                    {poset.label(a), poset.label(b)});
      ElemSet upper = poset.up(a) & poset.up(b);
      const std::size_t uc = upper.count();
      Elem lub = static_cast<Elem>(n);
      upper.for_each([&](Elem g) {
        if (up_count[g] == uc) lub = g;
      });
      if (lub == n)
        throw Error(ErrorCode::NotALattice, "no least upper bound for " + poset.label(a) + ", " + poset.label(b),
                    {poset.label(a), poset.label(b)});
      l.meet_[a * n + b] = l.meet_[b * n + a] = glb;
      l.join_[a * n + b] = l.join_[b * n + a] = lub;
    }
  }
  for (Elem a = 0; a < n; ++a) {
    if (up_count[a] == n) l.bottom_ = a;
    if (down_count[a] == n) l.top_ = a;
  }
  l.poset_ = std::move(poset);
  return l;
}

FiniteLattice FiniteLattice::from_tables(FinitePoset poset, std::vector<Elem> meet, std::vector<Elem> join) {
  FiniteLattice l;
  const std::size_t n = poset.size();
  for (Elem a = 0; a < n; ++a) {
    if (poset.up(a).count() == n) l.bottom_ = a;
    if (poset.down(a).count() == n) l.top_ = a;
  }
  l.poset_ = std::move(poset);
  l.meet_ = std::move(meet);
  l.join_ = std::move(join);
  return l;
}

Elem FiniteLattice::meet_of(const ElemSet& s) const {
  Elem acc = top_;
  s.for_each([&](Elem e) { acc = meet(acc, e); });
  return acc;
}

Elem FiniteLattice::join_of(const ElemSet& s) const {
  Elem acc = bottom_;
  s.for_each([&](Elem e) { acc = join(acc, e); });
  return acc;
}

Verdict is_distributive(const FiniteLattice& l) {
  const std::size_t n = l.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c)
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c)))
          return Verdict::no("a∧(b∨c) != (a∧b)∨(a∧c)", {a, b, c});
  return Verdict::yes();
}

ElemSet join_irreducibles_within(const FiniteLattice& l, const ElemSet& subset) {
  ElemSet out(l.size());
  subset.for_each([&](Elem j) {
    if (j == l.bottom()) return;
    ElemSet below = subset & l.poset().down(j);
    below.reset(j);
    bool irreducible = true;
    below.for_each([&](Elem a) {
      if (!irreducible) return;
      below.for_each([&](Elem b) {
        if (irreducible && l.join(a, b) == j) irreducible = false;
      });
    });
    if (irreducible) out.set(j);
  });
  return out;
}

ElemSet join_irreducibles(const FiniteLattice& l) { return join_irreducibles_within(l, l.poset().all()); }

// ---------------------------------------------------------------- boolean algebras

FiniteBooleanAlgebra FiniteBooleanAlgebra::from_lattice(FiniteLattice lattice) {
  if (auto d = is_distributive(lattice); !d) {
    std::vector<std::string> w;
    for (Elem e : d.witness) w.push_back(lattice.label(e));
    throw Error(ErrorCode::NotDistributive, d.reason, w);
  }
  const std::size_t n = lattice.size();
  FiniteBooleanAlgebra b;
  b.neg_.assign(n, 0);
  for (Elem a = 0; a < n; ++a) {
    bool found = false;
    for (Elem c = 0; c < n && !found; ++c)
      if (lattice.meet(a, c) == lattice.bottom() && lattice.join(a, c) == lattice.top()) {
        b.neg_[a] = c;
        found = true;
      }
    if (!found)
      throw Error(ErrorCode::NotBooleanAlgebra, "element " + lattice.label(a) + " has no complement",
                  {lattice.label(a)});
  }
  b.atoms_ = ElemSet(n);
  for (Elem a = 0; a < n; ++a)
    if (a != lattice.bottom() && lattice.poset().down(a).count() == 2) b.atoms_.set(a);
  b.atom_list_ = b.atoms_.members();
  b.lattice_ = std::move(lattice);
  return b;
}

FiniteBooleanAlgebra FiniteBooleanAlgebra::powerset(const std::vector<std::string>& atom_labels) {
  const std::size_t k = atom_labels.size();
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> labels(n);
  std::vector<ElemSet> up(n, ElemSet(n));
  std::vector<Elem> meet(n * n), join(n * n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = set_label(atom_labels, ElemSet::from_mask(k, a));
    for (Elem b = 0; b < n; ++b) {
      if ((a & b) == a) up[a].set(b);
      meet[a * n + b] = a & b;
      join[a * n + b] = a | b;
    }
  }
  FiniteBooleanAlgebra b;
  b.lattice_ = FiniteLattice::from_tables(FinitePoset::from_up_sets(std::move(labels), std::move(up)),
                                          std::move(meet), std::move(join));
  b.neg_.resize(n);
  for (Elem a = 0; a < n; ++a) b.neg_[a] = static_cast<Elem>((n - 1) & ~a);
  b.atoms_ = ElemSet(n);
  for (std::size_t i = 0; i < k; ++i) b.atoms_.set(static_cast<Elem>(std::size_t{1} << i));
  b.atom_list_ = b.atoms_.members();
  return b;
}

ElemSet atoms(const FiniteBooleanAlgebra& b) { return b.atoms(); }

// ---------------------------------------------------------------- Birkhoff

BirkhoffRepr birkhoff(const FiniteLattice& l) {
  if (auto d = is_distributive(l); !d) {
    std::vector<std::string> w;
    for (Elem e : d.witness) w.push_back(l.label(e));
    throw Error(ErrorCode::NotDistributive, d.reason, w);
  }
  BirkhoffRepr r;
  r.base = l;
  ElemSet j = join_irreducibles(l);
  r.jposet = l.poset().restrict(j);
  r.j_elements = j.members();
  const std::size_t m = r.j_elements.size();
  r.embed.assign(l.size(), ElemSet(m));
  for (Elem a = 0; a < l.size(); ++a)
    for (Elem i = 0; i < m; ++i)
      if (l.leq(r.j_elements[i], a)) r.embed[a].set(i);
  return r;
}

DownsetLattice downset_lattice(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::set<ElemSet> found;
  std::vector<ElemSet> frontier{ElemSet(n)};
  found.insert(ElemSet(n));
  while (!frontier.empty()) {
    ElemSet d = std::move(frontier.back());
    frontier.pop_back();
    for (Elem x = 0; x < n; ++x) {
      if (d.test(x)) continue;
      ElemSet strictly_below = p.down(x);
      strictly_below.reset(x);
      if (!strictly_below.is_subset_of(d)) continue;
      ElemSet next = d;
      next.set(x);
      if (found.insert(next).second) frontier.push_back(next);
    }
  }
  DownsetLattice out;
  out.sets.assign(found.begin(), found.end());
  // Sort by size then value so the empty set is element 0.
  std::stable_sort(out.sets.begin(), out.sets.end(),
                   [](const ElemSet& a, const ElemSet& b) { return a.count() < b.count(); });
  const std::size_t m = out.sets.size();
  std::vector<std::string> labels(m);
  std::vector<ElemSet> up(m, ElemSet(m));
  std::vector<Elem> meet(m * m), join(m * m);
  std::map<ElemSet, Elem> index;
  for (Elem i = 0; i < m; ++i) index[out.sets[i]] = i;
  for (Elem i = 0; i < m; ++i) {
    labels[i] = set_label(p.labels(), out.sets[i]);
    for (Elem j = 0; j < m; ++j) {
      if (out.sets[i].is_subset_of(out.sets[j])) up[i].set(j);
      meet[i * m + j] = index.at(out.sets[i] & out.sets[j]);
      join[i * m + j] = index.at(out.sets[i] | out.sets[j]);
    }
  }
  out.lattice = FiniteLattice::from_tables(FinitePoset::from_up_sets(std::move(labels), std::move(up)),
                                           std::move(meet), std::move(join));
  return out;
}

// ---------------------------------------------------------------- MacNeille

MacNeilleCompletion macneille_completion(const FinitePoset& p) {
  const std::size_t n = p.size();
  // Cuts of a finite poset are exactly the intersections of principal
  // down-sets, with the empty intersection being the whole poset.
  std::set<ElemSet> cuts{p.all()};
  for (Elem x = 0; x < n; ++x) cuts.insert(p.down(x));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<ElemSet> current(cuts.begin(), cuts.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j)
        if (cuts.insert(current[i] & current[j]).second) grew = true;
  }
  // Every cut must equal the lower bounds of its upper bounds.
  for (const ElemSet& a : cuts) {
    ElemSet upper = p.all();
    a.for_each([&](Elem x) { upper &= p.up(x); });
    ElemSet lower = p.all();
    upper.for_each([&](Elem y) { lower &= p.down(y); });
    if (lower != a) throw Error(ErrorCode::BijectionFailure, "non-closed cut " + set_label(p.labels(), a));
  }

  MacNeilleCompletion out;
  out.cuts.assign(cuts.begin(), cuts.end());
  std::stable_sort(out.cuts.begin(), out.cuts.end(),
                   [](const ElemSet& a, const ElemSet& b) { return a.count() < b.count(); });
  const std::size_t m = out.cuts.size();
  std::vector<std::string> labels(m);
  std::set<std::string> used;
  out.embed.assign(n, 0);
  for (Elem i = 0; i < m; ++i) {
    std::optional<Elem> principal;
    for (Elem x = 0; x < n; ++x)
      if (p.down(x) == out.cuts[i]) principal = x;
    if (principal) {
      labels[i] = p.label(*principal);
      out.embed[*principal] = i;
    } else {
      labels[i] = set_label(p.labels(), out.cuts[i]);
    }
    while (!used.insert(labels[i]).second) labels[i] += "'";
  }
  std::vector<ElemSet> up(m, ElemSet(m));
  for (Elem i = 0; i < m; ++i)
    for (Elem j = 0; j < m; ++j)
      if (out.cuts[i].is_subset_of(out.cuts[j])) up[i].set(j);
  out.lattice = FiniteLattice::from_poset(FinitePoset::from_up_sets(std::move(labels), std::move(up)));
  return out;
}

// ---------------------------------------------------------------- pseudocomplements

Elem pseudocomplement(const FiniteLattice& l, Elem c) {
  ElemSet annihilators(l.size());
  for (Elem x = 0; x < l.size(); ++x)
    if (l.meet(c, x) == l.bottom()) annihilators.set(x);
  return l.join_of(annihilators);
}

ElemSet complemented_elements(const FiniteLattice& l) {
  ElemSet out(l.size());
  for (Elem c = 0; c < l.size(); ++c)
    if (l.join(c, pseudocomplement(l, c)) == l.top()) out.set(c);
  return out;
}

// ---------------------------------------------------------------- isomorphism

bool is_order_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<Elem>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  ElemSet image(b.size());
  for (Elem x : f) {
    if (x >= b.size() || image.test(x)) return false;
    image.set(x);
  }
  for (Elem x = 0; x < a.size(); ++x)
    for (Elem y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
  return true;
}

std::optional<std::vector<Elem>> order_isomorphism(const FinitePoset& a, const FinitePoset& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  auto signature = [](const FinitePoset& p, Elem x) {
    return std::pair{p.down(x).count(), p.up(x).count()};
  };
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::sort(order.begin(), order.end(), [&](Elem x, Elem y) { return signature(a, x) < signature(a, y); });
  {
    std::vector<std::pair<std::size_t, std::size_t>> sa, sb;
    for (Elem x = 0; x < n; ++x) {
      sa.push_back(signature(a, x));
      sb.push_back(signature(b, x));
    }
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<Elem> f(n, 0);
  ElemSet used(n);
  // Depth-first assignment in signature order; each step keeps the partial
  // map an order embedding in both directions.
  auto extend = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == n) return true;
    const Elem x = order[depth];
    for (Elem y = 0; y < n; ++y) {
      if (used.test(y) || signature(b, y) != signature(a, x)) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        const Elem px = order[d];
        ok = a.leq(px, x) == b.leq(f[px], y) && a.leq(x, px) == b.leq(y, f[px]);
      }
      if (!ok) continue;
      f[x] = y;
      used.set(y);
      if (self(self, depth + 1)) return true;
      used.reset(y);
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return f;
}

}  // namespace mtlab
