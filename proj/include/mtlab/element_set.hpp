#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace mtlab {

/// Dense element index. Labels are metadata carried by the owning structure.
using Elem = std::uint32_t;

/// Fixed-universe bitset over element indices 0..n-1.
///
/// Every relation, class and filter in the library is an ElemSet, so the
/// universe size travels with the value and mixing universes is an error the
/// caller has to avoid (operators assume equal sizes).
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : n_(universe), words_((universe + 63) / 64, 0) {}
  ElemSet(std::size_t universe, std::initializer_list<Elem> members) : ElemSet(universe) {
    for (Elem e : members) set(e);
  }

  static ElemSet full(std::size_t universe) {
    ElemSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  std::size_t universe() const { return n_; }

  bool test(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(Elem e) { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool is_subset_of(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const ElemSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  ElemSet& operator&=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  ElemSet& operator-=(const ElemSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator-(ElemSet a, const ElemSet& b) { return a -= b; }

  ElemSet complement() const {
    ElemSet s(*this);
    for (auto& w : s.words_) w = ~w;
    s.trim();
    return s;
  }

  /// Smallest member, or universe() when empty.
  Elem first() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<Elem>(i * 64 + std::countr_zero(words_[i]));
    return static_cast<Elem>(n_);
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<Elem>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<Elem> members() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  friend bool operator==(const ElemSet&, const ElemSet&) = default;
  friend std::strong_ordering operator<=>(const ElemSet& a, const ElemSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    // Compare from the highest word so that for universes <= 64 the order is numeric.
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (auto c = a.words_[i] <=> b.words_[i]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  std::size_t hash() const {
    std::size_t h = n_ * 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

  /// Low 64 bits; convenient for universes that fit a machine word.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }
  static ElemSet from_mask(std::size_t universe, std::uint64_t mask) {
    ElemSet s(universe);
    if (!s.words_.empty()) s.words_[0] = mask;
    s.trim();
    return s;
  }

 private:
  void trim() {
    if (n_ % 64 && !words_.empty()) words_.back() &= (std::uint64_t{1} << (n_ % 64)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const { return s.hash(); }
};

}  // namespace mtlab
