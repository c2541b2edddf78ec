#pragma once

// Bases-backed matroid kernel.
//
// Matroids are stored by their explicit basis list over {1..n}. Every
// operation here is exhaustive (subset scans, basis scans); the intended
// scale is n <= 12, and n is capped at kMaxGroundSize.

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <vector>

#include "gpoly/element_set.hpp"
#include "gpoly/poly.hpp"

namespace gpoly {

// A total order on {1..n}. sequence()[k] is the element at position k.
class ElementOrder {
 public:
  static ElementOrder natural(int n);
  // Throws Error unless `sequence` is a permutation of {1..n}.
  static ElementOrder from_sequence(std::vector<int> sequence);

  int size() const { return static_cast<int>(sequence_.size()); }
  const std::vector<int>& sequence() const { return sequence_; }
  int position(int e) const { return position_[e - 1]; }
  // Next element in the order; nullopt for the last one.
  std::optional<int> successor(int e) const;
  // The ord-minimal element of a nonempty set.
  int min_of(ElementSet s) const;
  bool is_natural() const;

 private:
  std::vector<int> sequence_;
  std::vector<int> position_;
};

enum class Validation { kCheckExchange, kSkip };

class Matroid {
 public:
  // Canonicalizes (each basis ascending, collection lexicographic, duplicates
  // dropped). Throws Error on an empty collection, ragged sizes, out-of-range
  // elements, or (when validating) a basis exchange violation.
  static Matroid from_bases(int n, std::vector<ElementSet> bases,
                            Validation validation = Validation::kCheckExchange);
  static Matroid from_bases(int n, const std::vector<std::vector<int>>& bases,
                            Validation validation = Validation::kCheckExchange);
  static Matroid from_bases(int n, std::initializer_list<std::vector<int>> bases,
                            Validation validation = Validation::kCheckExchange) {
    return from_bases(n, std::vector<std::vector<int>>(bases), validation);
  }

  int size() const { return n_; }
  int rank() const { return r_; }
  ElementSet ground() const { return ElementSet::full(n_); }
  const std::vector<ElementSet>& bases() const { return bases_; }

  bool is_basis(ElementSet s) const;
  // max |A ∩ B| over bases B.
  int rank_of(ElementSet a) const;
  ElementSet closure_of(ElementSet a) const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int r, std::vector<ElementSet> bases);

  int n_ = 0;
  int r_ = 0;
  std::vector<ElementSet> bases_;
  // Membership bitmap over all 2^n subsets; shared between copies.
  std::shared_ptr<const std::vector<std::uint64_t>> is_basis_;
};

// Rank of every subset of the ground set, indexed by ElementSet::bits().
std::vector<std::uint8_t> rank_table(const Matroid& m);

struct LoopsColoops {
  ElementSet loops;
  ElementSet coloops;
};
LoopsColoops loops_coloops(const Matroid& m);
bool has_loops_or_coloops(const Matroid& m);

// Inclusion-minimal dependent sets, in shortlex order.
std::vector<ElementSet> circuits(const Matroid& m);

// Blocks of the connectivity partition, ordered by smallest element.
std::vector<ElementSet> connected_components(const Matroid& m);
bool is_connected(const Matroid& m);

// M|A relabeled order-preservingly onto {1..|A|}. A must be nonempty.
Matroid restriction(const Matroid& m, ElementSet a);

// M1 ⊕ M2 with M2's elements shifted past M1's.
Matroid direct_sum(const Matroid& m1, const Matroid& m2);

// Unique circuit in B ∪ {e}; B a basis, e ∉ B.
ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int e);
// Unique cocircuit in (E - B) ∪ {i}; B a basis, i ∈ B.
ElementSet fundamental_cocircuit(const Matroid& m, ElementSet basis, int i);

struct Activities {
  int internal = 0;
  int external = 0;
  friend bool operator==(const Activities&, const Activities&) = default;
};

// Elements that are ord-minimal in their fundamental cocircuit (internal)
// or fundamental circuit (external).
Activities activities(const Matroid& m, const ElementOrder& order, ElementSet basis);

// Number of i ∈ B whose swap with the order-successor of i is again a basis
// with the same internal and external activity.
int alpha(const Matroid& m, const ElementOrder& order, ElementSet basis);

// Sum over bases of x^i(B) y^e(B).
BivariatePolynomial tutte(const Matroid& m, const ElementOrder& order);
BivariatePolynomial tutte(const Matroid& m);

// #{B : i(B) = 0, e(B) = 1} under the natural order.
long beta(const Matroid& m);

// Flats whose restriction has no coloops, in shortlex order.
std::vector<ElementSet> cyclic_flats(const Matroid& m);

}  // namespace gpoly
