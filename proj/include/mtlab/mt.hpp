#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mtlab/order.hpp"

namespace mtlab {

/// Complete (here: finite) boolean algebra with a Kuratowski interior operator.
class MTAlgebra {
 public:
  MTAlgebra() = default;

  /// Validates the four Kuratowski axioms pointwise; throws KuratowskiViolation
  /// naming the axiom and the witness elements.
  static MTAlgebra from_table(FiniteBooleanAlgebra ba, std::vector<Elem> box);

  const FiniteBooleanAlgebra& ba() const { return ba_; }
  const FiniteLattice& lattice() const { return ba_.lattice(); }
  std::size_t size() const { return ba_.size(); }
  const std::string& label(Elem e) const { return ba_.label(e); }
  bool leq(Elem a, Elem b) const { return ba_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return ba_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return ba_.join(a, b); }
  Elem neg(Elem a) const { return ba_.neg(a); }
  Elem bottom() const { return ba_.bottom(); }
  Elem top() const { return ba_.top(); }
  Elem meet_of(const ElemSet& s) const { return lattice().meet_of(s); }
  Elem join_of(const ElemSet& s) const { return lattice().join_of(s); }
  ElemSet all() const { return ElemSet::full(size()); }
  ElemSet up(Elem a) const { return lattice().poset().up(a); }
  ElemSet down(Elem a) const { return lattice().poset().down(a); }

  Elem box(Elem a) const { return box_[a]; }
  /// ¬□¬a
  Elem dia(Elem a) const { return dia_[a]; }
  const std::vector<Elem>& box_table() const { return box_; }

  /// Fixpoints of □ and of ◇.
  const ElemSet& opens() const { return opens_; }
  const ElemSet& closeds() const { return closeds_; }
  const ElemSet& atoms() const { return ba_.atoms(); }

 private:
  FiniteBooleanAlgebra ba_;
  std::vector<Elem> box_;
  std::vector<Elem> dia_;
  ElemSet opens_;
  ElemSet closeds_;
};

/// ◇a = ¬□¬a
Elem closure(const MTAlgebra& m, Elem a);

struct ElementClasses {
  ElemSet opens;
  ElemSet closeds;
  ElemSet saturated;
  ElemSet locally_closed;
  ElemSet weakly_locally_closed;
  ElemSet regular_closed;
  ElemSet gc;
  ElemSet clopen;
  ElemSet compact;
  ElemSet compact_saturated;
};

/// Every class by its literal definition. K(M) comes from the subset
/// oracle when |O(M)| is within the size guard and is cross-checked against
/// the finite characterization (all elements); above the guard only the
/// latter is used.
ElementClasses element_classes(const MTAlgebra& m);

/// a is compact iff every S ⊆ O(M) with a <= ⋁S has a finite T ⊆ S with a <= ⋁T.
/// Enumerates subsets of O(M); throws SizeGuardExceeded.
ElemSet compact_elements_bruteforce(const MTAlgebra& m);
/// In a finite algebra every element is compact.
ElemSet compact_elements_finite(const MTAlgebra& m);
/// Closed-family form: for each F ⊆ C(M) with ⋀F ∧ a = 0 there is a finite
/// G ⊆ F with ⋀G ∧ a = 0. Enumerates subsets of C(M); throws SizeGuardExceeded.
ElemSet compact_elements_fip(const MTAlgebra& m);
/// Top is compact in the closed-family form: ⋀F = 0 has a finite witness.
bool is_compact_algebra_fip(const MTAlgebra& m);

/// a ◁ b iff a <= k <= b for some compact k. With `saturated_witness` the
/// witness k is required to lie in KS(M).
Relation wedge_below(const MTAlgebra& m, const ElemSet& compact, bool saturated_witness = false);
Relation wedge_below(const MTAlgebra& m);

enum class Separation { T0, THalf, T1, Sober, Hausdorff, Regular, ZeroDim };
std::string_view to_string(Separation s);
Verdict separation_check(const MTAlgebra& m, Separation axiom);

enum class Compactness { Compact, LocallyCompact, StablyLocallyCompact, StablyCompact, LocallyStone, Stone };
std::string_view to_string(Compactness c);
Verdict compactness_check(const MTAlgebra& m, Compactness kind);

/// Every element equals the join of the class members below it; the witness
/// is the first element that does not.
Verdict join_generates(const MTAlgebra& m, const ElemSet& cls);

/// Closed-element form of zero-dimensionality for T1 algebras:
/// every closed c equals ⋀{d ∈ CL(M) | c <= d}.
Verdict zero_dim_closed_form(const MTAlgebra& m);

// ---------------------------------------------------------------- filters

struct FilterSet {
  ElemSet members;
  bool is_open_filter = false;
  bool is_scott_open = false;
};

enum class FilterKind { Open, ScottOpen };

bool is_filter(const MTAlgebra& m, const ElemSet& f);
bool is_open_filter(const MTAlgebra& m, const ElemSet& f);
/// F ∩ O(M) generates F: F = ↑(F ∩ O(M)).
bool is_open_filter_by_generation(const MTAlgebra& m, const ElemSet& f);
/// Directed-family definition over all subsets of O(M); throws SizeGuardExceeded.
bool is_scott_open_bruteforce(const MTAlgebra& m, const ElemSet& f);

/// Open filters as ↑G for the filters G of O(M), improper filter included.
/// The Scott-open flag is evaluated by the directed-family definition and
/// cross-checked against the finite-case fact that every open filter is
/// Scott-open. Throws SizeGuardExceeded when |O(M)| exceeds the guard.
std::vector<FilterSet> enumerate_filters(const MTAlgebra& m, FilterKind kind);

/// Filters of the frame O(M), by brute force over subsets of O(M) (guarded).
/// Each result is a subset of O(M) expressed in M's indices.
std::vector<ElemSet> frame_filters_of_opens_bruteforce(const MTAlgebra& m);

/// Three-valued verdict for theorems with hypotheses.
enum class Outcome { Pass, Fail, Vacuous };
std::string_view to_string(Outcome o);

struct CheckReport {
  Outcome outcome = Outcome::Pass;
  std::string detail;
  std::vector<Elem> witness;
};

/// Scott-open F and open u with ⋀F <= u imply u ∈ F. Vacuous when M is not sober.
CheckReport keimel_paseka_check(const MTAlgebra& m);

struct HMTable {
  std::vector<Elem> compact_saturated;    // KS(M), increasing index
  std::vector<ElemSet> alpha;             // alpha[i] = α(compact_saturated[i])
  std::vector<FilterSet> scott_filters;   // SFilt(M)
  std::vector<std::size_t> filter_index;  // KS index -> SFilt index
  std::vector<Elem> filter_meet;          // SFilt index -> ⋀F
};

/// α(s) = {a | s <= □a}; verifies the order-reversing bijection
/// (KS(M), >=) ≅ (SFilt(M), ⊆). Throws NotSober or BijectionFailure.
HMTable hofmann_mislove(const MTAlgebra& m);

// ---------------------------------------------------------------- morphisms

enum class MapKind { MTMorphism, FrameHom, ContinuousMap };

struct StructureMap {
  MapKind kind = MapKind::MTMorphism;
  std::vector<Elem> table;
  bool proper = false;
};

struct MTMorphismCheckResult {
  StructureMap map;
  bool is_complete_boolean_hom = false;
  bool is_mt_morphism = false;
  bool is_proper = false;
  std::vector<Elem> left_adjoint;  // f*(x) = ⋀{a | x <= f(a)}
  Verdict failure;                 // first failed condition, with witness in the source
};

/// Throws ShapeMismatch when the table is not a total map into `n`.
MTMorphismCheckResult check_mt_morphism(const StructureMap& f, const MTAlgebra& m, const MTAlgebra& n);

/// f*(x) = ⋀{a ∈ M | x <= f(a)}
std::vector<Elem> left_adjoint(const std::vector<Elem>& f, const MTAlgebra& m, const MTAlgebra& n);

/// Composition g ∘ f of element maps.
std::vector<Elem> compose(const std::vector<Elem>& g, const std::vector<Elem>& f);

}  // namespace mtlab
