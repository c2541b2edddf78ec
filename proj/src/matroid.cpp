#include "gpoly/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "gpoly/error.hpp"

namespace gpoly {

// ---------------------------------------------------------------------------
// ElementOrder

ElementOrder ElementOrder::natural(int n) {
  std::vector<int> seq(n);
  std::iota(seq.begin(), seq.end(), 1);
  return from_sequence(std::move(seq));
}

ElementOrder ElementOrder::from_sequence(std::vector<int> sequence) {
  const int n = static_cast<int>(sequence.size());
  ElementOrder ord;
  ord.position_.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    const int e = sequence[k];
    if (e < 1 || e > n || ord.position_[e - 1] != -1) {
      throw Error("element order is not a permutation of 1.." + std::to_string(n));
    }
    ord.position_[e - 1] = k;
  }
  ord.sequence_ = std::move(sequence);
  return ord;
}

std::optional<int> ElementOrder::successor(int e) const {
  const int k = position(e);
  if (k + 1 >= size()) return std::nullopt;
  return sequence_[k + 1];
}

int ElementOrder::min_of(ElementSet s) const {
  int best = -1;
  for (int e : s) {
    if (best < 0 || position(e) < position(best)) best = e;
  }
  return best;
}

bool ElementOrder::is_natural() const {
  for (int k = 0; k < size(); ++k) {
    if (sequence_[k] != k + 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Matroid

Matroid::Matroid(int n, int r, std::vector<ElementSet> bases)
    : n_(n), r_(r), bases_(std::move(bases)) {
  std::vector<std::uint64_t> bitmap(((std::size_t{1} << n) + 63) / 64, 0);
  for (ElementSet b : bases_) bitmap[b.bits() >> 6] |= std::uint64_t{1} << (b.bits() & 63u);
  is_basis_ = std::make_shared<const std::vector<std::uint64_t>>(std::move(bitmap));
}

Matroid Matroid::from_bases(int n, std::vector<ElementSet> bases, Validation validation) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error("ground set size must be in 1.." + std::to_string(kMaxGroundSize) + ", got " +
                std::to_string(n));
  }
  if (bases.empty()) throw Error("basis collection is empty");
  const ElementSet ground = ElementSet::full(n);
  const int r = bases.front().size();
  for (ElementSet b : bases) {
    if (!b.subset_of(ground)) {
      throw Error("basis " + to_string(b) + " has an element outside 1.." + std::to_string(n));
    }
    if (b.size() != r) {
      throw Error("ragged basis sizes: " + to_string(bases.front()) + " and " + to_string(b));
    }
  }
  std::sort(bases.begin(), bases.end(), lex_less);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  Matroid m(n, r, std::move(bases));

  if (validation == Validation::kCheckExchange) {
    for (ElementSet b1 : m.bases_) {
      for (ElementSet b2 : m.bases_) {
        for (int e : b1 - b2) {
          bool found = false;
          for (int f : b2 - b1) {
            if (m.is_basis(b1.without(e).with(f))) {
              found = true;
              break;
            }
          }
          if (!found) {
            throw Error("basis exchange fails for B1=" + to_string(b1) + ", B2=" + to_string(b2) +
                        ", e=" + std::to_string(e));
          }
        }
      }
    }
  }
  return m;
}

Matroid Matroid::from_bases(int n, const std::vector<std::vector<int>>& bases,
                            Validation validation) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error("ground set size must be in 1.." + std::to_string(kMaxGroundSize) + ", got " +
                std::to_string(n));
  }
  std::vector<ElementSet> sets;
  sets.reserve(bases.size());
  for (const auto& b : bases) {
    ElementSet s;
    for (int e : b) {
      if (e < 1 || e > n) {
        throw Error("element " + std::to_string(e) + " outside 1.." + std::to_string(n));
      }
      if (s.contains(e)) throw Error("element " + std::to_string(e) + " repeated in a basis");
      s.insert(e);
    }
    sets.push_back(s);
  }
  return from_bases(n, std::move(sets), validation);
}

bool Matroid::is_basis(ElementSet s) const {
  if (!s.subset_of(ground())) return false;
  const auto& bm = *is_basis_;
  return (bm[s.bits() >> 6] >> (s.bits() & 63u)) & 1u;
}

int Matroid::rank_of(ElementSet a) const {
  int best = 0;
  for (ElementSet b : bases_) best = std::max(best, (a & b).size());
  return best;
}

ElementSet Matroid::closure_of(ElementSet a) const {
  const int ra = rank_of(a);
  ElementSet out = a;
  for (int e : ground() - a) {
    if (rank_of(a.with(e)) == ra) out.insert(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Derived structure

std::vector<std::uint8_t> rank_table(const Matroid& m) {
  const std::uint32_t count = std::uint32_t{1} << m.size();
  std::vector<std::uint8_t> independent(count, 0);
  for (ElementSet b : m.bases()) {
    // every subset of a basis
    const std::uint32_t bits = b.bits();
    std::uint32_t sub = bits;
    while (true) {
      independent[sub] = 1;
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  std::vector<std::uint8_t> rank(count, 0);
  for (std::uint32_t s = 1; s < count; ++s) {
    if (independent[s]) {
      rank[s] = static_cast<std::uint8_t>(std::popcount(s));
      continue;
    }
    std::uint8_t best = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      best = std::max(best, rank[s & ~(rest & (~rest + 1))]);
    }
    rank[s] = best;
  }
  return rank;
}

LoopsColoops loops_coloops(const Matroid& m) {
  ElementSet in_some;
  ElementSet in_all = m.ground();
  for (ElementSet b : m.bases()) {
    in_some = in_some | b;
    in_all = in_all & b;
  }
  return {m.ground() - in_some, in_all};
}

bool has_loops_or_coloops(const Matroid& m) {
  const auto lc = loops_coloops(m);
  return !lc.loops.empty() || !lc.coloops.empty();
}

std::vector<ElementSet> circuits(const Matroid& m) {
  const auto rank = rank_table(m);
  std::vector<ElementSet> out;
  const std::uint32_t count = std::uint32_t{1} << m.size();
  for (int k = 1; k <= m.size(); ++k) {
    for (std::uint32_t s = 1; s < count; ++s) {
      if (std::popcount(s) != k || rank[s] == k) continue;
      bool minimal = true;
      for (std::uint32_t rest = s; rest; rest &= rest - 1) {
        const std::uint32_t smaller = s & ~(rest & (~rest + 1));
        if (rank[smaller] < std::popcount(smaller)) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.emplace_back(s);
    }
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

std::vector<ElementSet> connected_components(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : circuits(m)) {
    const int root = find(c.min());
    for (int e : c) parent[find(e)] = root;
  }
  std::vector<ElementSet> blocks;
  std::vector<int> block_of(n + 1, -1);
  for (int e = 1; e <= n; ++e) {
    const int root = find(e);
    if (block_of[root] < 0) {
      block_of[root] = static_cast<int>(blocks.size());
      blocks.emplace_back();
    }
    blocks[block_of[root]].insert(e);
  }
  return blocks;
}

bool is_connected(const Matroid& m) { return connected_components(m).size() == 1; }

namespace {

// Packs the bits of `s` selected by `mask` into the low bits (order kept).
ElementSet compress(ElementSet s, ElementSet mask) {
  std::uint32_t out = 0;
  int k = 0;
  for (int e : mask) {
    if (s.contains(e)) out |= 1u << k;
    ++k;
  }
  return ElementSet(out);
}

}  // namespace

Matroid restriction(const Matroid& m, ElementSet a) {
  if (a.empty()) throw Error("restriction to the empty set");
  if (!a.subset_of(m.ground())) throw Error("restriction set " + to_string(a) + " out of range");
  int best = 0;
  for (ElementSet b : m.bases()) best = std::max(best, (a & b).size());
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if ((a & b).size() == best) bases.push_back(compress(a & b, a));
  }
  // Restrictions of matroids are matroids; no need to recheck exchange.
  return Matroid::from_bases(a.size(), std::move(bases), Validation::kSkip);
}

Matroid direct_sum(const Matroid& m1, const Matroid& m2) {
  const int n = m1.size() + m2.size();
  if (n > kMaxGroundSize) throw Error("direct sum exceeds the maximum ground set size");
  std::vector<ElementSet> bases;
  bases.reserve(m1.bases().size() * m2.bases().size());
  for (ElementSet b1 : m1.bases()) {
    for (ElementSet b2 : m2.bases()) bases.emplace_back(b1.bits() | (b2.bits() << m1.size()));
  }
  return Matroid::from_bases(n, std::move(bases), Validation::kSkip);
}

ElementSet fundamental_circuit(const Matroid& m, ElementSet basis, int e) {
  if (!m.is_basis(basis)) throw Error(to_string(basis) + " is not a basis");
  if (e < 1 || e > m.size() || basis.contains(e)) {
    throw Error("fundamental circuit needs an element outside the basis, got " + std::to_string(e));
  }
  ElementSet c;
  c.insert(e);
  for (int i : basis) {
    if (m.is_basis(basis.without(i).with(e))) c.insert(i);
  }
  return c;
}

ElementSet fundamental_cocircuit(const Matroid& m, ElementSet basis, int i) {
  if (!m.is_basis(basis)) throw Error(to_string(basis) + " is not a basis");
  if (i < 1 || i > m.size() || !basis.contains(i)) {
    throw Error("fundamental cocircuit needs an element of the basis, got " + std::to_string(i));
  }
  ElementSet c;
  c.insert(i);
  for (int e : m.ground() - basis) {
    if (m.is_basis(basis.without(i).with(e))) c.insert(e);
  }
  return c;
}

Activities activities(const Matroid& m, const ElementOrder& order, ElementSet basis) {
  if (!m.is_basis(basis)) throw Error(to_string(basis) + " is not a basis");
  Activities act;
  for (int i : basis) {
    if (order.min_of(fundamental_cocircuit(m, basis, i)) == i) ++act.internal;
  }
  for (int e : m.ground() - basis) {
    if (order.min_of(fundamental_circuit(m, basis, e)) == e) ++act.external;
  }
  return act;
}

int alpha(const Matroid& m, const ElementOrder& order, ElementSet basis) {
  const Activities here = activities(m, order, basis);
  int count = 0;
  for (int i : basis) {
    const auto next = order.successor(i);
    if (!next || basis.contains(*next)) continue;
    const ElementSet swapped = basis.without(i).with(*next);
    if (m.is_basis(swapped) && activities(m, order, swapped) == here) ++count;
  }
  return count;
}

BivariatePolynomial tutte(const Matroid& m, const ElementOrder& order) {
  if (order.size() != m.size()) throw Error("element order size does not match the ground set");
  std::vector<std::vector<long>> counts(m.rank() + 1, std::vector<long>(m.size() - m.rank() + 1));
  for (ElementSet b : m.bases()) {
    const Activities a = activities(m, order, b);
    ++counts[a.internal][a.external];
  }
  std::vector<std::vector<Integer>> rows(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) {
    for (long c : counts[i]) rows[i].emplace_back(c);
  }
  return BivariatePolynomial(std::move(rows));
}

BivariatePolynomial tutte(const Matroid& m) { return tutte(m, ElementOrder::natural(m.size())); }

long beta(const Matroid& m) {
  const auto order = ElementOrder::natural(m.size());
  long count = 0;
  for (ElementSet b : m.bases()) {
    if (activities(m, order, b) == Activities{0, 1}) ++count;
  }
  return count;
}

std::vector<ElementSet> cyclic_flats(const Matroid& m) {
  const auto rank = rank_table(m);
  const std::uint32_t count = std::uint32_t{1} << m.size();
  const std::uint32_t ground = m.ground().bits();
  std::vector<ElementSet> out;
  for (std::uint32_t s = 0; s < count; ++s) {
    bool ok = true;
    // flat: adding anything raises the rank
    for (std::uint32_t rest = ground & ~s; rest && ok; rest &= rest - 1) {
      ok = rank[s | (rest & (~rest + 1))] > rank[s];
    }
    // cyclic: removing anything keeps the rank
    for (std::uint32_t rest = s; rest && ok; rest &= rest - 1) {
      ok = rank[s & ~(rest & (~rest + 1))] == rank[s];
    }
    if (ok) out.emplace_back(s);
  }
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

}  // namespace gpoly
