#pragma once

#include <bit>
#include <cstdint>
#include <string_view>
#include <vector>

#include "mtlab/order.hpp"

namespace mtlab {

/// Joins and meets of every subset of a small family of lattice elements,
/// indexed by bitmask over `items`. Backing store for the brute-force oracles.
struct SubsetTable {
  std::vector<Elem> items;
  std::vector<Elem> joins;
  std::vector<Elem> meets;

  std::uint32_t full_mask() const { return items.empty() ? 0u : (std::uint32_t{1} << items.size()) - 1u; }
  std::size_t subset_count() const { return joins.size(); }
  /// Bitmask (over `items`) of the members of `s`.
  std::uint32_t mask_of(const ElemSet& s) const {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (s.test(items[i])) mask |= std::uint32_t{1} << i;
    return mask;
  }
};

/// Throws SizeGuardExceeded when |family| is above the guard (or 30).
inline SubsetTable make_subset_table(const FiniteLattice& l, const ElemSet& family, std::string_view what) {
  const std::size_t k = family.count();
  require_size_guard(k, what);
  if (k > 30) require_size_guard(size_guard() + 1, what);
  SubsetTable t;
  t.items = family.members();
  const std::size_t count = std::size_t{1} << k;
  t.joins.assign(count, l.bottom());
  t.meets.assign(count, l.top());
  for (std::uint32_t mask = 1; mask < count; ++mask) {
    const std::uint32_t prev = mask & (mask - 1);
    const Elem e = t.items[static_cast<std::size_t>(std::countr_zero(mask))];
    t.joins[mask] = l.join(t.joins[prev], e);
    t.meets[mask] = l.meet(t.meets[prev], e);
  }
  return t;
}

/// directed[mask]: the subset is nonempty and every pair of its members has an
/// upper bound inside it.
inline std::vector<std::uint8_t> directed_subsets(const FiniteLattice& l, const SubsetTable& t) {
  const std::size_t k = t.items.size();
  std::vector<std::uint32_t> above(k, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (l.leq(t.items[i], t.items[j])) above[i] |= std::uint32_t{1} << j;
  std::vector<std::uint8_t> directed(t.subset_count(), 0);
  for (std::uint32_t mask = 1; mask < t.subset_count(); ++mask) {
    bool ok = true;
    for (std::uint32_t a = mask; a && ok; a &= a - 1) {
      const int i = std::countr_zero(a);
      for (std::uint32_t b = a; b && ok; b &= b - 1) {
        const int j = std::countr_zero(b);
        ok = (above[i] & above[j] & mask) != 0;
      }
    }
    directed[mask] = ok;
  }
  return directed;
}

/// Literal finite-subfamily search: some T ⊆ S (T finite) satisfies `pred`.
/// Submasks are visited from S downward.
template <class Pred>
bool exists_finite_subfamily(std::uint32_t s, Pred&& pred) {
  for (std::uint32_t t = s;; t = (t - 1) & s) {
    if (pred(t)) return true;
    if (t == 0) return false;
  }
}

}  // namespace mtlab
