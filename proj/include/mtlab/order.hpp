#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mtlab/element_set.hpp"
#include "mtlab/errors.hpp"

namespace mtlab {

/// Outcome of a two-valued predicate. When `holds` is false, `reason` names
/// the failed conjunct and `witness` lists the offending elements.
struct Verdict {
  bool holds = true;
  std::string reason;
  std::vector<Elem> witness;

  explicit operator bool() const { return holds; }
  static Verdict yes() { return {}; }
  static Verdict no(std::string reason, std::vector<Elem> witness = {}) {
    return {false, std::move(reason), std::move(witness)};
  }
};

using OrderPair = std::pair<Elem, Elem>;

/// Rows of a binary relation: row a is {b | a R b}.
using Relation = std::vector<ElemSet>;

class FinitePoset {
 public:
  FinitePoset() = default;

  /// Reflexive-transitive closure of `pairs` (a <= b); rejects duplicate
  /// labels and cycles.
  static FinitePoset from_pairs(std::vector<std::string> labels, const std::vector<OrderPair>& pairs);
  /// Trusted constructor: `up[a]` must already be {b | a <= b} for a partial order.
  static FinitePoset from_up_sets(std::vector<std::string> labels, std::vector<ElemSet> up);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Elem e) const { return labels_[e]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> find(const std::string& label) const;
  /// Throws UnknownLabel.
  Elem index(const std::string& label) const;

  bool leq(Elem a, Elem b) const { return up_[a].test(b); }
  const ElemSet& up(Elem a) const { return up_[a]; }
  const ElemSet& down(Elem a) const { return down_[a]; }
  ElemSet all() const { return ElemSet::full(size()); }

  /// Hasse diagram, sorted.
  std::vector<OrderPair> covers() const;
  /// Induced suborder on `subset`, reindexed in increasing element order.
  FinitePoset restrict(const ElemSet& subset) const;

 private:
  std::vector<std::string> labels_;
  std::vector<ElemSet> up_;
  std::vector<ElemSet> down_;
};

class FiniteLattice {
 public:
  FiniteLattice() = default;

  /// Tabulates glb/lub for every pair; throws NotALattice with the offending pair.
  static FiniteLattice from_poset(FinitePoset poset);
  /// Trusted constructor for structures whose tables are known (powersets).
  static FiniteLattice from_tables(FinitePoset poset, std::vector<Elem> meet, std::vector<Elem> join);

  const FinitePoset& poset() const { return poset_; }
  std::size_t size() const { return poset_.size(); }
  const std::string& label(Elem e) const { return poset_.label(e); }
  bool leq(Elem a, Elem b) const { return poset_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  /// Empty meet is top, empty join is bottom.
  Elem meet_of(const ElemSet& s) const;
  Elem join_of(const ElemSet& s) const;

 private:
  FinitePoset poset_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Exhaustive triple scan; on failure the witness is (a, b, c) with
/// a∧(b∨c) != (a∧b)∨(a∧c).
Verdict is_distributive(const FiniteLattice& l);

/// j != 0 and j = a∨b implies j ∈ {a, b}.
ElemSet join_irreducibles(const FiniteLattice& l);
/// Join-irreducibles of a join-closed subset containing bottom, using the
/// joins of `l` (which are the joins of the subset).
ElemSet join_irreducibles_within(const FiniteLattice& l, const ElemSet& subset);

class FiniteBooleanAlgebra {
 public:
  FiniteBooleanAlgebra() = default;

  /// Checks distributivity and unique complements; throws NotDistributive or
  /// NotBooleanAlgebra.
  static FiniteBooleanAlgebra from_lattice(FiniteLattice lattice);
  /// Powerset of the given atoms. Element index = bitmask over atoms,
  /// labelled "{a,b}".
  static FiniteBooleanAlgebra powerset(const std::vector<std::string>& atom_labels);

  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }
  const std::string& label(Elem e) const { return lattice_.label(e); }
  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem bottom() const { return lattice_.bottom(); }
  Elem top() const { return lattice_.top(); }
  Elem neg(Elem a) const { return neg_[a]; }
  const ElemSet& atoms() const { return atoms_; }
  /// Atoms in increasing index order.
  const std::vector<Elem>& atom_list() const { return atom_list_; }
  /// {x ∈ atoms | x <= a}
  ElemSet atoms_below(Elem a) const { return atoms_ & lattice_.poset().down(a); }

 private:
  FiniteLattice lattice_;
  std::vector<Elem> neg_;
  ElemSet atoms_;
  std::vector<Elem> atom_list_;
};

ElemSet atoms(const FiniteBooleanAlgebra& b);

/// Finite Birkhoff representation: a ↦ {j ∈ J(L) | j <= a}.
struct BirkhoffRepr {
  FiniteLattice base;
  FinitePoset jposet;           // join-irreducibles with the induced order
  std::vector<Elem> j_elements;  // jposet index -> base element
  std::vector<ElemSet> embed;    // base element -> subset of jposet indices
};

/// Throws NotDistributive.
BirkhoffRepr birkhoff(const FiniteLattice& l);

/// Lattice of down-sets of a poset ordered by inclusion, labelled "{x,y}".
struct DownsetLattice {
  FiniteLattice lattice;
  std::vector<ElemSet> sets;  // lattice element -> down-set of the poset
};
DownsetLattice downset_lattice(const FinitePoset& p);

/// Dedekind–MacNeille completion: the cuts A = L(U(A)) ordered by inclusion.
struct MacNeilleCompletion {
  FiniteLattice lattice;
  std::vector<ElemSet> cuts;  // completion element -> cut of the poset
  std::vector<Elem> embed;    // poset element -> completion element (↓x)
};
MacNeilleCompletion macneille_completion(const FinitePoset& p);

/// c* = ⋁{x | c ∧ x = 0}.
Elem pseudocomplement(const FiniteLattice& l, Elem c);
/// {c | c ∨ c* = 1}
ElemSet complemented_elements(const FiniteLattice& l);

/// Order isomorphism search (= lattice isomorphism for lattices). Returns the
/// map from `a` indices to `b` indices when one exists.
std::optional<std::vector<Elem>> order_isomorphism(const FinitePoset& a, const FinitePoset& b);

/// True when `f` (indexed by elements of `a`) is an order isomorphism onto `b`.
bool is_order_isomorphism(const FinitePoset& a, const FinitePoset& b, const std::vector<Elem>& f);

/// "{x,y}" rendering of a set of labels.
std::string set_label(const std::vector<std::string>& labels, const ElemSet& members);

}  // namespace mtlab
