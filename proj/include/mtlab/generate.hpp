#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "mtlab/document.hpp"

namespace mtlab {

/// Deterministic across platforms: only the raw engine output is used, never
/// the standard distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() >> 63) != 0; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

enum class GenKind { Topology, Preorder, DLat, Boolean, MTTable };
std::string_view to_string(GenKind k);
std::optional<GenKind> gen_kind_from_string(std::string_view name);

inline constexpr std::size_t kMaxExhaustivePoints = 4;
inline constexpr std::size_t kMaxExhaustiveLattice = 10;
inline constexpr std::size_t kMaxBooleanAtoms = 8;

/// Every topology on points "0".."n-1", one per preorder (up-set topology),
/// cross-checked in count against a scan of all families of subsets.
std::vector<FiniteSpace> all_topologies(std::size_t n);
/// Families of subsets of an n-set closed under finite unions and intersections.
std::size_t count_topologies_bruteforce(std::size_t n);

/// Closure of a random subbasis under finite intersections and unions.
FiniteSpace random_topology(std::size_t n, Rng& rng);
/// Up-set topology of a random preorder.
FiniteSpace random_preorder_space(std::size_t n, Rng& rng);

/// One representative per isomorphism class of distributive lattices with at
/// most `max_size` elements, as down-set lattices of their posets of
/// join-irreducibles. Sorted by size.
std::vector<FiniteLattice> distributive_lattices_upto(std::size_t max_size);
/// Down-sets of a random poset on n points.
FiniteLattice random_distributive_lattice(std::size_t n, Rng& rng);

/// Powerset on n atoms, element labels shuffled.
FiniteBooleanAlgebra random_boolean(std::size_t atoms, Rng& rng);
/// (P(X), int) for a random topology on the atoms, labels shuffled.
MTAlgebra random_mt_table(std::size_t atoms, Rng& rng);

/// Deterministic in (kind, size, seed). Throws SizeGuardExceeded.
Document generate(GenKind kind, std::size_t size, std::uint64_t seed);
/// Exhaustive mode: all topologies/preorders on `size` points, or all
/// distributive lattices with at most `size` elements.
std::vector<Document> generate_all(GenKind kind, std::size_t size);

}  // namespace mtlab
