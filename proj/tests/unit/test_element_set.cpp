#include <doctest.h>

#include <algorithm>
#include <vector>

#include "gpoly/element_set.hpp"

using namespace gpoly;

TEST_CASE("construction and queries") {
  const ElementSet s = ElementSet::from_elements({4, 1, 3});
  CHECK(s.size() == 3);
  CHECK(s.contains(1));
  CHECK_FALSE(s.contains(2));
  CHECK(s.min() == 1);
  CHECK(s.max() == 4);
  CHECK(s.elements() == std::vector<int>{1, 3, 4});
  CHECK(to_string(s) == "{1,3,4}");
  CHECK(to_string(ElementSet{}) == "{}");
  CHECK(ElementSet::full(3) == ElementSet::from_elements({1, 2, 3}));
  CHECK(ElementSet::interval(2, 4) == ElementSet::from_elements({2, 3, 4}));
  CHECK(ElementSet::interval(3, 2).empty());
}

TEST_CASE("set algebra") {
  const ElementSet a = ElementSet::from_elements({1, 2});
  const ElementSet b = ElementSet::from_elements({2, 3});
  CHECK((a | b) == ElementSet::from_elements({1, 2, 3}));
  CHECK((a & b) == ElementSet::from_elements({2}));
  CHECK((a - b) == ElementSet::from_elements({1}));
  CHECK(a.with(5).contains(5));
  CHECK(a.without(1) == ElementSet::from_elements({2}));
  CHECK(a.subset_of(a));
  CHECK_FALSE(a.proper_subset_of(a));
  CHECK(ElementSet{}.proper_subset_of(a));
}

TEST_CASE("high elements") {
  const ElementSet s = ElementSet::from_elements({24});
  CHECK(s.min() == 24);
  CHECK(s.max() == 24);
  CHECK(ElementSet::full(kMaxGroundSize).size() == kMaxGroundSize);
}

TEST_CASE("lexicographic order on sorted element lists") {
  auto set = [](std::vector<int> v) { return ElementSet::from_elements(v); };
  CHECK(lex_less(set({1, 3}), set({2, 3})));
  CHECK(lex_less(set({1, 4}), set({2, 3})));
  CHECK(lex_less(set({1, 2, 4}), set({1, 3})));
  CHECK(lex_less(set({1}), set({1, 2})));
  CHECK_FALSE(lex_less(set({1, 2}), set({1})));
  CHECK_FALSE(lex_less(set({2, 3}), set({2, 3})));

  std::vector<ElementSet> v{set({3, 4}), set({1, 3}), set({2, 4}), set({1, 4}), set({2, 3})};
  std::sort(v.begin(), v.end(), lex_less);
  CHECK(v == std::vector<ElementSet>{set({1, 3}), set({1, 4}), set({2, 3}), set({2, 4}), set({3, 4})});
}

TEST_CASE("shortlex order") {
  auto set = [](std::vector<int> v) { return ElementSet::from_elements(v); };
  CHECK(shortlex_less(ElementSet{}, set({1})));
  CHECK(shortlex_less(set({5}), set({1, 2})));
  CHECK(shortlex_less(set({1, 2}), set({1, 3})));
}
