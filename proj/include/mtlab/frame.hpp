#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mtlab/order.hpp"

namespace mtlab {

/// Finite frame: a finite distributive lattice.
class Frame {
 public:
  Frame() = default;
  /// Throws NotDistributive with the violating triple.
  static Frame from_lattice(FiniteLattice l);

  const FiniteLattice& lattice() const { return lattice_; }
  std::size_t size() const { return lattice_.size(); }
  const std::string& label(Elem e) const { return lattice_.label(e); }
  const std::vector<std::string>& labels() const { return lattice_.poset().labels(); }
  bool leq(Elem a, Elem b) const { return lattice_.leq(a, b); }
  Elem meet(Elem a, Elem b) const { return lattice_.meet(a, b); }
  Elem join(Elem a, Elem b) const { return lattice_.join(a, b); }
  Elem bottom() const { return lattice_.bottom(); }
  Elem top() const { return lattice_.top(); }
  Elem join_of(const ElemSet& s) const { return lattice_.join_of(s); }
  Elem meet_of(const ElemSet& s) const { return lattice_.meet_of(s); }
  ElemSet up(Elem a) const { return lattice_.poset().up(a); }
  ElemSet down(Elem a) const { return lattice_.poset().down(a); }
  ElemSet all() const { return ElemSet::full(size()); }

 private:
  FiniteLattice lattice_;
};

/// a ≪ b iff every directed D with b <= ⋁D has some d ∈ D with a <= d.
/// Enumerates all subsets of the frame; throws SizeGuardExceeded.
Relation way_below_bruteforce(const Frame& l);
/// Finite shortcut (≪ = <=), cross-checked against the subset oracle when the
/// frame is within the size guard.
Relation way_below(const Frame& l);

enum class FramePredicate { Continuous, StablyContinuous, Compact, Regular, ZeroDim, LocallyStone, Stone, Spatial };
std::string_view to_string(FramePredicate p);
std::optional<FramePredicate> frame_predicate_from_string(std::string_view name);
const std::vector<FramePredicate>& all_frame_predicates();

Verdict frame_predicate(const Frame& l, FramePredicate p);

/// b ≺ a iff b* ∨ a = 1.
bool well_inside(const Frame& l, Elem b, Elem a);

// ---------------------------------------------------------------- points

bool is_filter(const Frame& l, const ElemSet& f);
/// Proper filter with a∨b ∈ p implying a ∈ p or b ∈ p.
bool is_prime_filter(const Frame& l, const ElemSet& p);
/// Proper filter with ⋁S ∈ p implying S ∩ p nonempty, over all S ⊆ L;
/// throws SizeGuardExceeded.
bool is_completely_prime_bruteforce(const Frame& l, const ElemSet& p);

struct FramePointSet {
  std::vector<ElemSet> points;  // prime filters, sorted
  std::vector<ElemSet> zeta;    // frame element -> set of point indices containing it
};

/// Prime filters found among the principal filters (finite filters are
/// principal); completely-prime oracle applied under the size guard.
FramePointSet points(const Frame& l);

/// pt(h)(p) = h^{-1}[p] for each point p of `target`, as an index into the
/// points of `source`.
std::vector<Elem> pt_map(const std::vector<Elem>& h, const Frame& source, const FramePointSet& source_points,
                         const Frame& target, const FramePointSet& target_points);

// ---------------------------------------------------------------- homomorphisms

struct FrameHomCheck {
  std::vector<Elem> map;
  bool is_frame_hom = false;
  bool is_proper = false;
  Verdict failure;
};

/// Finite meets, finite joins, and (under the size guard) all joins; proper
/// when a ≪ b implies h(a) ≪ h(b). Throws ShapeMismatch for non-total maps.
FrameHomCheck check_frame_hom(const std::vector<Elem>& h, const Frame& source, const Frame& target);

// ---------------------------------------------------------------- filters

struct FrameFilter {
  ElemSet members;
  bool is_scott_open = false;
};

/// All filters of the frame (improper one included) as principal up-sets, with
/// the Scott-open flag from the directed-family definition; cross-checked
/// against a subset scan. Throws SizeGuardExceeded.
std::vector<FrameFilter> frame_filters(const Frame& l);
/// Scott-open filters only.
std::vector<ElemSet> scott_open_filters(const Frame& l);

}  // namespace mtlab
