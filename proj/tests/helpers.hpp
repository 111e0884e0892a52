#pragma once

#include <string>
#include <vector>

#include "mtlab/functors.hpp"

namespace mtlab::test {

inline ElemSet pts(std::size_t n, std::initializer_list<Elem> members) { return ElemSet(n, members); }

inline FiniteSpace space(std::vector<std::string> points, std::vector<std::vector<Elem>> opens) {
  const std::size_t n = points.size();
  std::vector<ElemSet> sets;
  for (const auto& o : opens) {
    ElemSet s(n);
    for (Elem e : o) s.set(e);
    sets.push_back(s);
  }
  return FiniteSpace::from_opens(std::move(points), std::move(sets));
}

/// Points 0 and 1; {1} open.
inline FiniteSpace sierpinski() { return space({"0", "1"}, {{}, {1}, {0, 1}}); }
inline FiniteSpace discrete(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<std::vector<Elem>> opens;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Elem> o;
    for (Elem i = 0; i < n; ++i)
      if (mask >> i & 1u) o.push_back(i);
    opens.push_back(o);
  }
  return space(labels, opens);
}
inline FiniteSpace indiscrete(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<Elem> all;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    all.push_back(static_cast<Elem>(i));
  }
  return space(labels, {{}, all});
}

inline FinitePoset chain(std::vector<std::string> labels) {
  std::vector<OrderPair> pairs;
  for (Elem i = 0; i + 1 < labels.size(); ++i) pairs.push_back({i, i + 1});
  return FinitePoset::from_pairs(std::move(labels), pairs);
}

inline FiniteLattice chain3() { return FiniteLattice::from_poset(chain({"0", "m", "1"})); }

inline FiniteLattice m3() {
  return FiniteLattice::from_poset(
      FinitePoset::from_pairs({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
}

inline FiniteLattice diamond() {
  return FiniteLattice::from_poset(FinitePoset::from_pairs({"0", "x", "y", "1"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
}

inline ElemSet elems(const MTAlgebra& m, std::initializer_list<std::string> labels) {
  ElemSet s(m.size());
  for (const auto& l : labels) s.set(m.lattice().poset().index(l));
  return s;
}

inline Elem el(const MTAlgebra& m, const std::string& label) { return m.lattice().poset().index(label); }

}  // namespace mtlab::test
