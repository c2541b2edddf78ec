#pragma once

// g-polynomials of arbitrary matroids.
//
// A loopless, coloopless matroid is a signed sum of Schubert matroids, one
// per chain of cyclic flats from ∅ to E. The coefficient of a chain C is
// λ_C = -μ(C, 1̂), the Möbius function of the chain poset (chains ordered by
// inclusion, with a top element 1̂ adjoined).

#include <optional>
#include <string>
#include <vector>

#include "gpoly/element_set.hpp"
#include "gpoly/matroid.hpp"
#include "gpoly/poly.hpp"
#include "gpoly/schubert.hpp"

namespace gpoly {

// F_0 ⊂ F_1 ⊂ ... ⊂ F_m with ranks[j] = rank(F_j).
struct CyclicFlatChain {
  std::vector<ElementSet> flats;
  std::vector<int> ranks;

  friend bool operator==(const CyclicFlatChain&, const CyclicFlatChain&) = default;
};

// "{}<{1,2,3}<{1,...,7}" style rendering: "{} < {1,2,3} < {1,2,3,4,5,6,7}"
std::string to_string(const CyclicFlatChain& c);

class ChainPoset {
 public:
  // Throws Error when M has loops or coloops.
  static ChainPoset build(const Matroid& m);

  // Depth-first order: shorter prefixes before their extensions.
  const std::vector<CyclicFlatChain>& chains() const { return chains_; }
  const std::vector<ElementSet>& cyclic_flats() const { return flats_; }
  std::optional<std::size_t> find(const CyclicFlatChain& c) const;
  // chains()[j] strictly contains chains()[i]
  bool below(std::size_t i, std::size_t j) const;

  // -μ(C, 1̂) by the recursion μ(C,1̂) = -Σ_{C < D ≤ 1̂} μ(D,1̂).
  const Integer& lambda(std::size_t i) const { return lambda_[i]; }
  // Σ_{D ⊇ C} (-1)^{|D| - |C|}; every interval [C, D] below 1̂ is boolean.
  Integer lambda_closed_form(std::size_t i) const;

 private:
  std::vector<ElementSet> flats_;
  std::vector<CyclicFlatChain> chains_;
  // indices into flats_ of each chain's members, ascending
  std::vector<std::vector<int>> members_;
  std::vector<Integer> lambda_;
};

inline ChainPoset chain_poset(const Matroid& m) { return ChainPoset::build(m); }

// Throws Error when C is not an element of P.
Integer lambda_of(const ChainPoset& p, const CyclicFlatChain& c);

struct ChainSchubert {
  SchubertMatroid schubert;
  // relabel[k-1] is the original element that receives label k
  std::vector<int> relabel;
};

// The nested matroid whose cyclic flats are C. Labels are handed out block by
// block (F_1, then F_2 - F_1, ...), ascending within a block.
ChainSchubert schubert_of_chain(int n, const CyclicFlatChain& c);

struct DecompositionTerm {
  CyclicFlatChain chain;
  Integer lambda;
  SchubertMatroid schubert;
  IntPolynomial g;
};

// Every chain of a connected, loopless, coloopless matroid with its weight,
// Schubert matroid and that matroid's g-polynomial.
std::vector<DecompositionTerm> decompose(const Matroid& m);

// g of a Schubert matroid, memoized by (n, U). Zero with loops or coloops.
IntPolynomial g_schubert_cached(const SchubertMatroid& s);

// g for an arbitrary matroid: 0 with loops or coloops, the product over
// components when disconnected, otherwise Σ λ_C g(S_C).
IntPolynomial g_polynomial(const Matroid& m);

}  // namespace gpoly
