#pragma once

// Schubert (nested) matroids as lattice-path objects.
//
// S(n, U) has as bases the r-subsets B of {1..n} with U <= B componentwise.
// A set B is drawn as the monotone path from (0,0) to (n-r, r) whose k-th
// step is north when k ∈ B and east otherwise; the bases are exactly the
// paths weakly below path(U).

#include <string>
#include <string_view>
#include <vector>

#include "gpoly/element_set.hpp"
#include "gpoly/matroid.hpp"
#include "gpoly/poly.hpp"

namespace gpoly {

class SchubertMatroid {
 public:
  // Throws Error when U is empty or leaves {1..n}.
  static SchubertMatroid create(int n, ElementSet upper);
  static SchubertMatroid create(int n, const std::vector<int>& upper);

  int size() const { return n_; }
  int rank() const { return static_cast<int>(upper_elements_.size()); }
  ElementSet upper() const { return upper_; }
  // u_1 < ... < u_r
  const std::vector<int>& upper_elements() const { return upper_elements_; }
  // |U ∩ {1..k}| for 0 <= k <= n.
  int upper_prefix(int k) const { return prefix_[k]; }
  // Weakly below path(U) and inside the (n-r) x r box.
  bool in_region(int x, int y) const;

  friend bool operator==(const SchubertMatroid& a, const SchubertMatroid& b) {
    return a.n_ == b.n_ && a.upper_ == b.upper_;
  }

 private:
  int n_ = 0;
  ElementSet upper_;
  std::vector<int> upper_elements_;
  std::vector<int> prefix_;
};

// S(2r, {1,3,...,2r-1})
SchubertMatroid catalan_matroid(int r);

// "S(6,{1,3,5})"
std::string to_string(const SchubertMatroid& s);

// loops = {1..u_1 - 1}; coloops = the longest suffix {k..n} inside U.
LoopsColoops sch_loops_coloops(const SchubertMatroid& s);
bool is_loopless_coloopless(const SchubertMatroid& s);

// All bases, in lexicographic order.
std::vector<ElementSet> sch_bases(const SchubertMatroid& s);

Matroid sch_to_matroid(const SchubertMatroid& s);

// Activities read off the lattice path: shared north steps with path(U) and
// shared east steps with path(L), L = {n-r+1..n}. Matches the
// fundamental-circuit activities under the natural order.
Activities path_activities(const SchubertMatroid& s, ElementSet basis);

enum class Step : char { kEast = 'E', kNorth = 'N', kDiagonal = 'D' };

// Steps from (1,1) towards (n-r, r).
struct DelannoyPath {
  std::vector<Step> steps;

  int diagonals() const;
  // "DDEDN"; the empty path is "".
  std::string word() const;
  // Throws Error on characters outside {E, N, D}.
  static DelannoyPath from_word(std::string_view word);

  friend bool operator==(const DelannoyPath&, const DelannoyPath&) = default;
};

// Which step restrictions apply on top of staying in the diagram.
struct DelannoyRules {
  // North step may not lie on one of path(U)'s north steps.
  bool forbid_vertical_overlap = true;
  // Diagonal allowed only where a north step is.
  bool diagonal_needs_north = true;

  // Just the diagram: every path that stays weakly below path(U).
  static DelannoyRules region_only() { return {false, false}; }
};

// Admissible paths in depth-first order, trying E, N, D at each point.
// Requires S loopless and coloopless.
std::vector<DelannoyPath> enumerate_delannoy(const SchubertMatroid& s,
                                             const DelannoyRules& rules = {});

// Whether P starts at (1,1), ends at (n-r, r), and every step is legal.
bool is_admissible(const SchubertMatroid& s, const DelannoyPath& path,
                   const DelannoyRules& rules = {});

// Sum over admissible paths of t^(1 + #diagonals).
IntPolynomial g_delannoy(const SchubertMatroid& s, const DelannoyRules& rules = {});

// B_P: the basis whose path is E, N, then P with each diagonal replaced by
// N followed by E. Throws Error when P leaves the diagram.
ElementSet basis_of_delannoy(const SchubertMatroid& s, const DelannoyPath& path);

// t * sum over bases with i(B)=0, e(B)=1 of (t+1)^alpha(B).
IntPolynomial g_activities(const SchubertMatroid& s);

// Closed form for U_{r,n}, 1 <= r <= n-1.
IntPolynomial g_uniform(int r, int n);

}  // namespace gpoly
