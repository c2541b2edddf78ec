#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "gpoly/error.hpp"
#include "gpoly/matroid.hpp"
#include "gpoly/schubert.hpp"

using namespace gpoly;

namespace {

ElementSet set(std::vector<int> v) { return ElementSet::from_elements(v); }

std::vector<std::vector<int>> all_subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) == k) out.push_back(ElementSet(m).elements());
  }
  return out;
}

Matroid uniform(int r, int n) { return Matroid::from_bases(n, all_subsets_of_size(n, r)); }

// rank 2 on 4 elements, 1 and 2 parallel
Matroid parallel_pair() { return Matroid::from_bases(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}); }

Matroid two_digons() { return Matroid::from_bases(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}); }

// K4 with edges 1:12 2:13 3:14 4:23 5:24 6:34; triangles 124, 135, 236, 456
Matroid k4() {
  std::vector<std::vector<int>> bases;
  const std::vector<ElementSet> triangles{set({1, 2, 4}), set({1, 3, 5}), set({2, 3, 6}), set({4, 5, 6})};
  for (const auto& b : all_subsets_of_size(6, 3)) {
    if (std::find(triangles.begin(), triangles.end(), set(b)) == triangles.end()) bases.push_back(b);
  }
  return Matroid::from_bases(6, bases);
}

const std::vector<ElementSet> kFanoLines{set({1, 2, 4}), set({1, 3, 7}), set({1, 5, 6}), set({2, 3, 5}),
                                         set({2, 6, 7}), set({3, 4, 6}), set({4, 5, 7})};

Matroid fano() {
  std::vector<std::vector<int>> bases;
  for (const auto& b : all_subsets_of_size(7, 3)) {
    if (std::find(kFanoLines.begin(), kFanoLines.end(), set(b)) == kFanoLines.end()) bases.push_back(b);
  }
  return Matroid::from_bases(7, bases);
}

BivariatePolynomial bivariate(std::initializer_list<std::tuple<int, int, int>> terms) {
  BivariatePolynomial p;
  for (auto [i, j, c] : terms) p.add_term(i, j, c);
  return p;
}

}  // namespace

TEST_CASE("element orders") {
  const ElementOrder nat = ElementOrder::natural(4);
  CHECK(nat.is_natural());
  CHECK(nat.successor(2) == 3);
  CHECK_FALSE(nat.successor(4).has_value());

  const ElementOrder ord = ElementOrder::from_sequence({3, 1, 4, 2});
  CHECK_FALSE(ord.is_natural());
  CHECK(ord.position(3) == 0);
  CHECK(ord.successor(1) == 4);
  CHECK(ord.min_of(set({1, 2, 4})) == 1);
  CHECK(ord.min_of(set({2, 3})) == 3);
  CHECK_THROWS_AS(ElementOrder::from_sequence({1, 1, 2}), Error);
  CHECK_THROWS_AS(ElementOrder::from_sequence({1, 3}), Error);
}

TEST_CASE("from_bases canonicalizes") {
  const Matroid m = Matroid::from_bases(4, {{4, 3}, {2, 4}, {1, 3}, {3, 4}, {1, 4}, {2, 3}, {1, 3}});
  CHECK(m.bases() == std::vector<ElementSet>{set({1, 3}), set({1, 4}), set({2, 3}), set({2, 4}), set({3, 4})});
  CHECK(m == parallel_pair());
  CHECK(m.rank() == 2);
  CHECK(m.size() == 4);
  CHECK(uniform(2, 4).bases().size() == 6);
}

TEST_CASE("from_bases rejects bad input") {
  CHECK_THROWS_AS(Matroid::from_bases(3, std::vector<std::vector<int>>{}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(3, {{1, 2}, {3}}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(4, {{1, 5}}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(4, {{0, 1}}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(0, {{}}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(25, {{1}}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(3, {{1, 1}}), Error);

  // {1,2}, {3,4}: dropping 1 from {1,2} admits neither {2,3} nor {2,4}
  try {
    Matroid::from_bases(4, {{1, 2}, {3, 4}});
    FAIL("expected an exchange violation");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("{1,2}") != std::string::npos);
    CHECK(msg.find("{3,4}") != std::string::npos);
  }
  CHECK_NOTHROW(Matroid::from_bases(4, {{1, 2}, {3, 4}}, Validation::kSkip));
}

TEST_CASE("rank and closure") {
  const Matroid u24 = uniform(2, 4);
  CHECK(u24.rank_of(set({1, 2, 3})) == 2);
  CHECK(u24.rank_of({}) == 0);
  CHECK(u24.closure_of(set({1})) == set({1}));
  CHECK(u24.closure_of(u24.ground()) == u24.ground());
  CHECK(parallel_pair().closure_of(set({1})) == set({1, 2}));
  CHECK(parallel_pair().rank_of(set({1, 2})) == 1);

  const Matroid f = fano();
  for (ElementSet line : kFanoLines) CHECK(f.rank_of(line) == 2);
  CHECK(f.closure_of(set({1, 2})) == set({1, 2, 4}));
  CHECK(f.closure_of(set({1, 2, 3})) == f.ground());

  const auto table = rank_table(f);
  CHECK(table.size() == 128);
  CHECK(table[set({1, 2, 4}).bits()] == 2);
  CHECK(table[set({1, 2, 3}).bits()] == 3);
  CHECK(table[0] == 0);
}

TEST_CASE("loops and coloops") {
  const auto u = loops_coloops(uniform(2, 4));
  CHECK(u.loops.empty());
  CHECK(u.coloops.empty());

  const auto c = loops_coloops(Matroid::from_bases(3, {{1, 3}, {2, 3}}));
  CHECK(c.loops.empty());
  CHECK(c.coloops == set({3}));

  const auto l = loops_coloops(Matroid::from_bases(1, {{}}));
  CHECK(l.loops == set({1}));
  CHECK(l.coloops.empty());
  CHECK(has_loops_or_coloops(Matroid::from_bases(1, {{1}})));
  CHECK_FALSE(has_loops_or_coloops(fano()));
}

TEST_CASE("circuits") {
  CHECK(circuits(uniform(2, 4)) ==
        std::vector<ElementSet>{set({1, 2, 3}), set({1, 2, 4}), set({1, 3, 4}), set({2, 3, 4})});
  CHECK(circuits(parallel_pair()) == std::vector<ElementSet>{set({1, 2}), set({1, 3, 4}), set({2, 3, 4})});
  CHECK(circuits(Matroid::from_bases(1, {{1}})).empty());
  CHECK(circuits(Matroid::from_bases(1, {{}})) == std::vector<ElementSet>{set({1})});
  // Fano: 7 lines plus the 7 four-point complements of lines
  CHECK(circuits(fano()).size() == 14);
}

TEST_CASE("connectivity") {
  CHECK(connected_components(two_digons()) == std::vector<ElementSet>{set({1, 2}), set({3, 4})});
  CHECK_FALSE(is_connected(two_digons()));
  CHECK(connected_components(k4()) == std::vector<ElementSet>{set({1, 2, 3, 4, 5, 6})});
  CHECK(connected_components(Matroid::from_bases(1, {{1}})) == std::vector<ElementSet>{set({1})});
  // {2,4} parallel, 1 and 3 coloops
  CHECK(connected_components(Matroid::from_bases(4, {{1, 2, 3}, {1, 3, 4}})) ==
        std::vector<ElementSet>{set({1}), set({2, 4}), set({3})});
}

TEST_CASE("restriction and direct sum") {
  const Matroid u12 = uniform(1, 2);
  CHECK(restriction(two_digons(), set({3, 4})) == u12);
  CHECK(restriction(fano(), fano().ground()) == fano());
  CHECK(restriction(fano(), set({1, 2, 4})) == Matroid::from_bases(3, {{1, 2}, {1, 3}, {2, 3}}));
  CHECK(restriction(fano(), set({3, 5, 6})) == uniform(3, 3));
  CHECK(direct_sum(u12, u12) == two_digons());
  CHECK(direct_sum(uniform(1, 1), uniform(0, 1)) == Matroid::from_bases(2, {{1}}));
}

TEST_CASE("fundamental circuits and cocircuits") {
  const Matroid p = parallel_pair();
  CHECK(fundamental_circuit(p, set({3, 4}), 1) == set({1, 3, 4}));
  CHECK(fundamental_circuit(p, set({2, 3}), 1) == set({1, 2}));
  CHECK(fundamental_circuit(uniform(2, 4), set({1, 2}), 3) == set({1, 2, 3}));
  CHECK_THROWS_AS(fundamental_circuit(p, set({3, 4}), 3), Error);
  CHECK_THROWS_AS(fundamental_circuit(p, set({1, 2}), 3), Error);

  CHECK(fundamental_cocircuit(p, set({3, 4}), 3) == set({1, 2, 3}));
  CHECK(fundamental_cocircuit(uniform(2, 4), set({1, 2}), 1) == set({1, 3, 4}));
  CHECK_THROWS_AS(fundamental_cocircuit(p, set({3, 4}), 1), Error);
}

TEST_CASE("activities") {
  const ElementOrder nat = ElementOrder::natural(4);
  CHECK(activities(parallel_pair(), nat, set({3, 4})) == Activities{0, 2});
  CHECK(activities(uniform(2, 4), nat, set({1, 2})) == Activities{2, 0});
  CHECK(activities(uniform(2, 4), nat, set({3, 4})) == Activities{0, 2});
  CHECK(activities(uniform(2, 4), nat, set({2, 3})) == Activities{0, 1});
  CHECK_THROWS_AS(activities(parallel_pair(), nat, set({1, 2})), Error);

  // reversing the order turns {3,4} into the lex-first basis
  const ElementOrder rev = ElementOrder::from_sequence({4, 3, 2, 1});
  CHECK(activities(uniform(2, 4), rev, set({3, 4})) == Activities{2, 0});
}

TEST_CASE("alpha") {
  // U_{1,2}: 2 has no successor
  CHECK(alpha(uniform(1, 2), ElementOrder::natural(2), set({2})) == 0);
  // B={2,4} in the parallel-pair matroid: swapping 2 -> 3 gives {3,4} with activities (0,2)
  CHECK(alpha(parallel_pair(), ElementOrder::natural(4), set({2, 4})) == 0);
  // U_{2,4}, B={2,4}: 2 -> 3 gives {3,4} with (0,2) != (0,1)
  CHECK(alpha(uniform(2, 4), ElementOrder::natural(4), set({2, 4})) == 0);
  // U_{2,4}, B={2,3}: 2 -> 3 collides, 3 -> 4 gives {2,4} with (0,1): one witness
  CHECK(alpha(uniform(2, 4), ElementOrder::natural(4), set({2, 3})) == 1);
}

TEST_CASE("tutte polynomial") {
  CHECK(tutte(uniform(2, 4)) == bivariate({{2, 0, 1}, {1, 0, 2}, {0, 1, 2}, {0, 2, 1}}));
  CHECK(tutte(k4()) == bivariate({{3, 0, 1}, {2, 0, 3}, {1, 0, 2}, {1, 1, 4}, {0, 1, 2}, {0, 2, 3}, {0, 3, 1}}));
  CHECK(tutte(Matroid::from_bases(1, {{1}})) == bivariate({{1, 0, 1}}));
  CHECK(tutte(Matroid::from_bases(1, {{}})) == bivariate({{0, 1, 1}}));
  // deletion-contraction on element 1: U_{2,3} plus a loop times U_{1,2}
  CHECK(tutte(parallel_pair()) == bivariate({{2, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}, {0, 2, 1}}));
  CHECK(tutte(fano()) ==
        bivariate({{3, 0, 1}, {2, 0, 4}, {1, 0, 3}, {1, 1, 7}, {0, 1, 3}, {0, 2, 6}, {0, 3, 3}, {0, 4, 1}}));
  CHECK(tutte(parallel_pair(), ElementOrder::from_sequence({4, 2, 3, 1})) == tutte(parallel_pair()));
}

TEST_CASE("beta") {
  CHECK(beta(k4()) == 2);
  CHECK(beta(fano()) == 3);
  CHECK(beta(uniform(2, 4)) == 2);
  CHECK(beta(parallel_pair()) == 1);
  CHECK(beta(two_digons()) == 0);
}

TEST_CASE("cyclic flats") {
  CHECK(cyclic_flats(uniform(2, 4)) == std::vector<ElementSet>{{}, set({1, 2, 3, 4})});
  CHECK(cyclic_flats(Matroid::from_bases(1, {{1}})) == std::vector<ElementSet>{{}});
  CHECK(cyclic_flats(parallel_pair()) == std::vector<ElementSet>{{}, set({1, 2}), set({1, 2, 3, 4})});
  CHECK(cyclic_flats(k4()).size() == 6);

  const auto f = cyclic_flats(fano());
  REQUIRE(f.size() == 9);
  CHECK(f.front().empty());
  CHECK(f.back() == fano().ground());
  for (ElementSet line : kFanoLines) CHECK(std::find(f.begin(), f.end(), line) != f.end());

  // a loop lies in every cyclic flat, including the smallest
  CHECK(cyclic_flats(Matroid::from_bases(3, {{2}, {3}})) ==
        std::vector<ElementSet>{set({1}), set({1, 2, 3})});
}

namespace {

// Every Schubert matroid up to n = 6 plus a few non-nested ones.
std::vector<Matroid> small_matroids() {
  std::vector<Matroid> out{k4(), parallel_pair(), two_digons(), uniform(0, 3), uniform(3, 3)};
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t u = 1; u < (1u << n); ++u) out.push_back(sch_to_matroid(SchubertMatroid::create(n, ElementSet(u))));
  }
  return out;
}

Matroid relabel(const Matroid& m, const std::vector<int>& image) {
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    ElementSet c;
    for (int e : b) c.insert(image[e - 1]);
    bases.push_back(c);
  }
  return Matroid::from_bases(m.size(), bases);
}

}  // namespace

TEST_CASE("rank is monotone and submodular") {
  for (const Matroid& m : small_matroids()) {
    const auto rank = rank_table(m);
    const std::uint32_t count = 1u << m.size();
    bool ok = true;
    for (std::uint32_t a = 0; a < count && ok; ++a) {
      for (std::uint32_t b = 0; b < count && ok; ++b) {
        if ((a & ~b) == 0 && rank[a] > rank[b]) ok = false;
        if (rank[a | b] + rank[a & b] > rank[a] + rank[b]) ok = false;
      }
      if (rank[a] != m.rank_of(ElementSet(a))) ok = false;
    }
    CHECK(ok);
  }
}

TEST_CASE("tutte identities") {
  std::mt19937_64 rng(11);
  for (const Matroid& m : small_matroids()) {
    const BivariatePolynomial t = tutte(m);
    CHECK(t.eval(1, 1) == static_cast<long>(m.bases().size()));
    if (m.size() >= 2) {
      CHECK(t.coeff(1, 0) == beta(m));
      CHECK(t.coeff(0, 1) == beta(m));
    }
  }
  for (const Matroid& m : {k4(), fano(), parallel_pair()}) {
    const BivariatePolynomial t = tutte(m);
    for (int k = 0; k < 5; ++k) {
      std::vector<int> seq(m.size());
      for (int i = 0; i < m.size(); ++i) seq[i] = i + 1;
      std::shuffle(seq.begin(), seq.end(), rng);
      CHECK(tutte(m, ElementOrder::from_sequence(seq)) == t);
    }
  }
}

TEST_CASE("cyclic flats are flats and unions of circuits") {
  for (const Matroid& m : small_matroids()) {
    const auto cs = circuits(m);
    for (ElementSet f : cyclic_flats(m)) {
      CHECK(m.closure_of(f) == f);
      ElementSet covered;
      for (ElementSet c : cs) {
        if (c.subset_of(f)) covered = covered | c;
      }
      CHECK(covered == f);
    }
  }
}

TEST_CASE("components under relabeling and restriction") {
  std::mt19937_64 rng(5);
  for (const Matroid& m : small_matroids()) {
    const auto blocks = connected_components(m);
    ElementSet all;
    for (ElementSet b : blocks) {
      CHECK((all & b).empty());
      all = all | b;
      CHECK(is_connected(restriction(m, b)));
    }
    CHECK(all == m.ground());

    std::vector<int> image(m.size());
    for (int i = 0; i < m.size(); ++i) image[i] = i + 1;
    std::shuffle(image.begin(), image.end(), rng);
    std::vector<ElementSet> moved;
    for (ElementSet b : blocks) {
      ElementSet c;
      for (int e : b) c.insert(image[e - 1]);
      moved.push_back(c);
    }
    std::sort(moved.begin(), moved.end(), [](ElementSet a, ElementSet b) { return a.min() < b.min(); });
    CHECK(connected_components(relabel(m, image)) == moved);
  }
}
