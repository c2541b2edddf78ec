#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace gpoly {

// Largest supported ground set. Exhaustive subset scans are 2^n.
inline constexpr int kMaxGroundSize = 24;

// A subset of the ground set {1..n}; element e is bit e-1.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }
  static ElementSet from_elements(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) s.insert(e);
    return s;
  }
  // {1..n}
  static constexpr ElementSet full(int n) {
    return ElementSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }
  // {lo..hi}, empty when hi < lo.
  static constexpr ElementSet interval(int lo, int hi) {
    if (hi < lo) return {};
    return ElementSet(full(hi).bits_ & ~full(lo - 1).bits_);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int e) const { return (bits_ >> (e - 1)) & 1u; }
  // Smallest element; undefined on the empty set.
  constexpr int min() const { return std::countr_zero(bits_) + 1; }
  constexpr int max() const { return 32 - std::countl_zero(bits_); }

  constexpr void insert(int e) { bits_ |= 1u << (e - 1); }
  constexpr void erase(int e) { bits_ &= ~(1u << (e - 1)); }
  constexpr ElementSet with(int e) const { return ElementSet(bits_ | (1u << (e - 1))); }
  constexpr ElementSet without(int e) const { return ElementSet(bits_ & ~(1u << (e - 1))); }

  constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(ElementSet o) const { return subset_of(o) && bits_ != o.bits_; }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  // Elements in ascending order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(size());
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  // Iterates elements ascending: for (int e : s) ...
  class iterator {
   public:
    constexpr explicit iterator(std::uint32_t b) : b_(b) {}
    constexpr int operator*() const { return std::countr_zero(b_) + 1; }
    constexpr iterator& operator++() {
      b_ &= b_ - 1;
      return *this;
    }
    constexpr bool operator!=(const iterator& o) const { return b_ != o.b_; }

   private:
    std::uint32_t b_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  std::uint32_t bits_ = 0;
};

// Lexicographic order on the ascending element lists.
inline bool lex_less(ElementSet a, ElementSet b) {
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const std::uint32_t low = diff & (~diff + 1);
  // Elements below `low` are shared. Whoever owns `low` has the smaller entry
  // at that position, unless the other list has already ended.
  const std::uint32_t at_or_above = ~(low - 1);
  if (a.bits() & low) return (b.bits() & at_or_above) != 0;
  return (a.bits() & at_or_above) == 0;
}

// Canonical order for collections of sets: by size, then lexicographic.
inline bool shortlex_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return lex_less(a, b);
}

// "{1,3,4}"
inline std::string to_string(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : s) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace gpoly
