#include "gpoly/schubert.hpp"

#include <functional>

#include "gpoly/error.hpp"

namespace gpoly {

SchubertMatroid SchubertMatroid::create(int n, ElementSet upper) {
  if (n < 1 || n > kMaxGroundSize) {
    throw Error("Schubert ground set size must be in 1.." + std::to_string(kMaxGroundSize));
  }
  if (upper.empty()) throw Error("Schubert upper set is empty");
  if (!upper.subset_of(ElementSet::full(n))) {
    throw Error("Schubert upper set " + to_string(upper) + " leaves 1.." + std::to_string(n));
  }
  SchubertMatroid s;
  s.n_ = n;
  s.upper_ = upper;
  s.upper_elements_ = upper.elements();
  s.prefix_.assign(n + 1, 0);
  for (int k = 1; k <= n; ++k) s.prefix_[k] = s.prefix_[k - 1] + (upper.contains(k) ? 1 : 0);
  return s;
}

SchubertMatroid SchubertMatroid::create(int n, const std::vector<int>& upper) {
  ElementSet u;
  for (int e : upper) {
    if (e < 1 || e > n || n > kMaxGroundSize) {
      throw Error("Schubert upper element " + std::to_string(e) + " outside 1.." + std::to_string(n));
    }
    if (u.contains(e)) throw Error("Schubert upper element " + std::to_string(e) + " repeated");
    u.insert(e);
  }
  return create(n, u);
}

bool SchubertMatroid::in_region(int x, int y) const {
  const int r = rank();
  if (x < 0 || y < 0 || x > n_ - r || y > r) return false;
  return y <= prefix_[x + y];
}

SchubertMatroid catalan_matroid(int r) {
  if (r < 1) throw Error("Catalan matroid needs r >= 1");
  std::vector<int> u;
  for (int k = 0; k < r; ++k) u.push_back(2 * k + 1);
  return SchubertMatroid::create(2 * r, u);
}

std::string to_string(const SchubertMatroid& s) {
  return "S(" + std::to_string(s.size()) + "," + to_string(s.upper()) + ")";
}

LoopsColoops sch_loops_coloops(const SchubertMatroid& s) {
  LoopsColoops lc;
  lc.loops = ElementSet::interval(1, s.upper().min() - 1);
  for (int k = s.size(); k >= 1 && s.upper().contains(k); --k) lc.coloops.insert(k);
  return lc;
}

bool is_loopless_coloopless(const SchubertMatroid& s) {
  const auto lc = sch_loops_coloops(s);
  return lc.loops.empty() && lc.coloops.empty();
}

std::vector<ElementSet> sch_bases(const SchubertMatroid& s) {
  const int n = s.size();
  const int r = s.rank();
  std::vector<ElementSet> out;
  // Step k is north iff k ∈ B; trying north first yields lexicographic order.
  std::function<void(int, int, ElementSet)> walk = [&](int k, int norths, ElementSet b) {
    if (k > n) {
      out.push_back(b);
      return;
    }
    if (norths < r && norths + 1 <= s.upper_prefix(k)) walk(k + 1, norths + 1, b.with(k));
    if ((k - 1 - norths) < n - r) walk(k + 1, norths, b);
  };
  walk(1, 0, ElementSet{});
  return out;
}

Matroid sch_to_matroid(const SchubertMatroid& s) {
  return Matroid::from_bases(s.size(), sch_bases(s), Validation::kSkip);
}

namespace {

// U <= B componentwise, |B| = r.
bool is_schubert_basis(const SchubertMatroid& s, ElementSet b) {
  if (b.size() != s.rank() || !b.subset_of(ElementSet::full(s.size()))) return false;
  int count = 0;
  for (int k = 1; k <= s.size(); ++k) {
    if (b.contains(k)) ++count;
    if (count > s.upper_prefix(k)) return false;
  }
  return true;
}

}  // namespace

Activities path_activities(const SchubertMatroid& s, ElementSet basis) {
  if (!is_schubert_basis(s, basis)) {
    throw Error(to_string(basis) + " is not a basis of " + to_string(s));
  }
  Activities act;
  int count = 0;
  for (int k = 1; k <= s.size(); ++k) {
    if (!basis.contains(k)) continue;
    // same starting point and both paths step north at k
    if (s.upper().contains(k) && count == s.upper_prefix(k - 1)) ++act.internal;
    ++count;
  }
  act.external = basis.min() - 1;
  return act;
}

int DelannoyPath::diagonals() const {
  int d = 0;
  for (Step st : steps) d += st == Step::kDiagonal ? 1 : 0;
  return d;
}

std::string DelannoyPath::word() const {
  std::string w;
  w.reserve(steps.size());
  for (Step st : steps) w.push_back(static_cast<char>(st));
  return w;
}

DelannoyPath DelannoyPath::from_word(std::string_view word) {
  DelannoyPath p;
  for (char c : word) {
    switch (c) {
      case 'E': p.steps.push_back(Step::kEast); break;
      case 'N': p.steps.push_back(Step::kNorth); break;
      case 'D': p.steps.push_back(Step::kDiagonal); break;
      default: throw Error(std::string("invalid Delannoy step '") + c + "'");
    }
  }
  return p;
}

namespace {

// A north step from (x, y) coincides with path(U)'s (y+1)-th north step,
// which is taken at column u_{y+1} - (y+1).
bool vertical_overlap(const SchubertMatroid& s, int x, int y) {
  return s.upper_elements()[y] == x + y + 1;
}

bool step_legal(const SchubertMatroid& s, const DelannoyRules& rules, int x, int y, Step st) {
  const int width = s.size() - s.rank();
  const int height = s.rank();
  switch (st) {
    case Step::kEast:
      return x + 1 <= width;
    case Step::kNorth:
      return y + 1 <= height && s.in_region(x, y + 1) &&
             !(rules.forbid_vertical_overlap && vertical_overlap(s, x, y));
    case Step::kDiagonal:
      // the unit square crossed must lie in the diagram
      if (x + 1 > width || y + 1 > height || !s.in_region(x, y + 1)) return false;
      return !(rules.diagonal_needs_north && rules.forbid_vertical_overlap &&
               vertical_overlap(s, x, y));
  }
  return false;
}

void advance(int& x, int& y, Step st) {
  if (st != Step::kNorth) ++x;
  if (st != Step::kEast) ++y;
}

void require_loopless_coloopless(const SchubertMatroid& s) {
  if (!is_loopless_coloopless(s)) {
    const auto lc = sch_loops_coloops(s);
    throw Error(to_string(s) + " has loops " + to_string(lc.loops) + " and coloops " +
                to_string(lc.coloops) + "; the formula needs neither");
  }
}

}  // namespace

std::vector<DelannoyPath> enumerate_delannoy(const SchubertMatroid& s, const DelannoyRules& rules) {
  require_loopless_coloopless(s);
  const int width = s.size() - s.rank();
  const int height = s.rank();
  std::vector<DelannoyPath> out;
  DelannoyPath current;
  std::function<void(int, int)> walk = [&](int x, int y) {
    if (x == width && y == height) {
      out.push_back(current);
      return;
    }
    for (Step st : {Step::kEast, Step::kNorth, Step::kDiagonal}) {
      if (!step_legal(s, rules, x, y, st)) continue;
      int nx = x, ny = y;
      advance(nx, ny, st);
      current.steps.push_back(st);
      walk(nx, ny);
      current.steps.pop_back();
    }
  };
  walk(1, 1);
  return out;
}

bool is_admissible(const SchubertMatroid& s, const DelannoyPath& path, const DelannoyRules& rules) {
  if (!is_loopless_coloopless(s)) return false;
  int x = 1, y = 1;
  for (Step st : path.steps) {
    if (!step_legal(s, rules, x, y, st)) return false;
    advance(x, y, st);
  }
  return x == s.size() - s.rank() && y == s.rank();
}

IntPolynomial g_delannoy(const SchubertMatroid& s, const DelannoyRules& rules) {
  std::vector<Integer> c(s.rank() + 1);
  for (const auto& p : enumerate_delannoy(s, rules)) c[1 + p.diagonals()] += 1;
  return IntPolynomial(std::move(c));
}

ElementSet basis_of_delannoy(const SchubertMatroid& s, const DelannoyPath& path) {
  if (!is_admissible(s, path, DelannoyRules::region_only())) {
    throw Error("Delannoy path '" + path.word() + "' leaves the diagram of " + to_string(s));
  }
  ElementSet b;
  b.insert(2);
  int pos = 3;
  for (Step st : path.steps) {
    switch (st) {
      case Step::kEast: pos += 1; break;
      case Step::kNorth: b.insert(pos); pos += 1; break;
      case Step::kDiagonal: b.insert(pos); pos += 2; break;
    }
  }
  return b;
}

IntPolynomial g_activities(const SchubertMatroid& s) {
  require_loopless_coloopless(s);
  const Matroid m = sch_to_matroid(s);
  const auto order = ElementOrder::natural(s.size());
  const IntPolynomial one_plus_t{1, 1};
  std::vector<IntPolynomial> powers{IntPolynomial::one()};
  IntPolynomial sum;
  for (ElementSet b : m.bases()) {
    if (path_activities(s, b) != Activities{0, 1}) continue;
    const int a = alpha(m, order, b);
    while (static_cast<int>(powers.size()) <= a) powers.push_back(mul(powers.back(), one_plus_t));
    sum += powers[a];
  }
  return mul(IntPolynomial::t(), sum);
}

IntPolynomial g_uniform(int r, int n) {
  if (r < 1 || r > n - 1) {
    throw Error("uniform closed form needs 1 <= r <= n-1 (U_{" + std::to_string(r) + "," +
                std::to_string(n) + "} has loops or coloops)");
  }
  auto binom = [](long a, long b) {
    Integer out;
    if (a < 0 || b < 0 || b > a) return Integer(0);
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return out;
  };
  std::vector<Integer> c(r + 1);
  const int top = std::min(r - 1, n - r - 1);
  for (int i = 0; i <= top; ++i) c[i + 1] = binom(n - 2 - i, i) * binom(n - 2 - 2 * i, r - 1 - i);
  return IntPolynomial(std::move(c));
}

}  // namespace gpoly
