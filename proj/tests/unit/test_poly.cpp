#include <doctest.h>

#include <random>

#include "gpoly/error.hpp"
#include "gpoly/poly.hpp"

using namespace gpoly;

TEST_CASE("zero polynomial") {
  const IntPolynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);
  CHECK(to_text(z) == "0");
  CHECK(to_json(z) == R"({"coeffs":[]})");
  CHECK(eval_int(z, 7) == 0);
  CHECK(IntPolynomial{0, 0, 0} == z);
}

TEST_CASE("trailing zeros are trimmed") {
  const IntPolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(p == IntPolynomial{1, 2});
  CHECK((IntPolynomial{0, 1} - IntPolynomial{0, 1}).is_zero());
}

TEST_CASE("arithmetic") {
  const IntPolynomial a{1, 1};  // t + 1
  CHECK(a * a == IntPolynomial{1, 2, 1});
  CHECK(pow(a, 3) == IntPolynomial{1, 3, 3, 1});
  CHECK(pow(a, 0) == IntPolynomial::one());
  CHECK(IntPolynomial{0, 3} + IntPolynomial{2, -3, 4} == IntPolynomial{2, 0, 4});
  CHECK(Integer(7) * IntPolynomial{0, 9, 11, 3} == IntPolynomial{0, 63, 77, 21});
  CHECK(scale(a, 0).is_zero());
  CHECK(IntPolynomial::monomial(5, 3) == IntPolynomial{0, 0, 0, 5});
}

TEST_CASE("text rendering") {
  CHECK(to_text(IntPolynomial{0, 3, 5, 3}) == "3t^3 + 5t^2 + 3t");
  CHECK(to_text(IntPolynomial{1, -1, 3}) == "3t^2 - t + 1");
  CHECK(to_text(IntPolynomial{0, 1}) == "t");
  CHECK(to_text(IntPolynomial{0, -1}) == "-t");
  CHECK(to_text(IntPolynomial{-2}) == "-2");
  CHECK(to_text(IntPolynomial{1}) == "1");
  CHECK(to_text(IntPolynomial{1, -3, 9, 1}) == "t^3 + 9t^2 - 3t + 1");
  CHECK(to_text(IntPolynomial{0, 0, -4}, 'x') == "-4x^2");
}

TEST_CASE("json rendering") {
  CHECK(to_json(IntPolynomial{0, 3, 5, 3}) == R"({"coeffs":[0,3,5,3]})");
  CHECK(to_json(IntPolynomial{1, -1, 3}) == R"({"coeffs":[1,-1,3]})");
}

TEST_CASE("evaluation") {
  CHECK(eval_int(IntPolynomial{0, 2, 1}, 3) == 15);
  CHECK(eval_int(IntPolynomial{1, -1, 3}, -1) == 5);
  CHECK(eval_int(IntPolynomial{4}, 100) == 4);
}

TEST_CASE("compose_shift") {
  CHECK(compose_shift(IntPolynomial{5, 5, 1}, -1) == IntPolynomial{1, 3, 1});
  CHECK(compose_shift(IntPolynomial{3, 5, 3}, -1) == IntPolynomial{1, -1, 3});
  CHECK(compose_shift(IntPolynomial{1, 3, 1}, 1) == IntPolynomial{5, 5, 1});
  CHECK(compose_shift(IntPolynomial{}, -1).is_zero());
  CHECK_THROWS_AS(compose_shift(IntPolynomial{1, 1}, 0), Error);
  CHECK_THROWS_AS(compose_shift(IntPolynomial{1, 1}, 2), Error);
}

TEST_CASE("divide_by_t") {
  CHECK(divide_by_t(IntPolynomial{0, 3, 5, 3}) == IntPolynomial{3, 5, 3});
  CHECK(divide_by_t(IntPolynomial{}).is_zero());
  CHECK_THROWS_WITH_AS(divide_by_t(IntPolynomial{1, 1}), "not divisible by t", Error);
}

TEST_CASE("nonnegative") {
  CHECK(nonnegative(IntPolynomial{1, 3, 1}));
  CHECK(nonnegative(IntPolynomial{}));
  CHECK_FALSE(nonnegative(IntPolynomial{1, -1, 3}));
}

TEST_CASE("coefficients beyond 64 bits") {
  const IntPolynomial p = pow(IntPolynomial{1, 1}, 100);
  CHECK(p.coeff(50) == Integer("100891344545564193334812497256"));
  CHECK(eval_int(p, 1) == Integer("1267650600228229401496703205376"));
  CHECK(coeff_strings(p)[50] == "100891344545564193334812497256");
  CHECK(p.coeff(101) == 0);
}

TEST_CASE("bivariate polynomial") {
  BivariatePolynomial u24;
  u24.add_term(2, 0, 1);
  u24.add_term(1, 0, 2);
  u24.add_term(0, 1, 2);
  u24.add_term(0, 2, 1);
  CHECK(to_text(u24) == "x^2 + 2x + 2y + y^2");
  CHECK(to_json(u24) == R"({"coeffs":[[0,2,1],[2],[1]]})");
  CHECK(u24.eval(1, 1) == 6);
  CHECK(u24.coeff(1, 0) == 2);
  CHECK(u24.coeff(5, 5) == 0);

  BivariatePolynomial k4;
  for (auto [i, j, c] : {std::tuple{3, 0, 1}, {2, 0, 3}, {1, 0, 2}, {1, 1, 4}, {0, 1, 2}, {0, 2, 3}, {0, 3, 1}}) {
    k4.add_term(i, j, c);
  }
  CHECK(to_text(k4) == "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3");
  CHECK(k4.eval(1, 1) == 16);
  CHECK(to_text(BivariatePolynomial{}) == "0");

  BivariatePolynomial cancel;
  cancel.add_term(1, 1, 3);
  cancel.add_term(1, 1, -3);
  CHECK(cancel.is_zero());
}

TEST_CASE("add and mul examples") {
  const IntPolynomial t = IntPolynomial::t();
  CHECK(t + t == IntPolynomial{0, 2});
  CHECK(IntPolynomial{0, 3, 5, 3} + IntPolynomial{} == IntPolynomial{0, 3, 5, 3});
  CHECK(IntPolynomial{0, 2, 1} + IntPolynomial{0, 0, -1} == IntPolynomial{0, 2});
  CHECK((IntPolynomial{0, 2, 1} + IntPolynomial{0, 0, -1}).degree() == 1);
  CHECK(t * t == IntPolynomial{0, 0, 1});
  CHECK((IntPolynomial{0, 3, 5, 3} * IntPolynomial{}).is_zero());
}

TEST_CASE("algebraic identities on random polynomials") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coeff(-9, 9);
  std::uniform_int_distribution<int> degree(0, 6);
  auto random_poly = [&] {
    std::vector<Integer> c(degree(rng) + 1);
    for (auto& x : c) x = coeff(rng);
    return IntPolynomial(std::move(c));
  };
  for (int trial = 0; trial < 200; ++trial) {
    const IntPolynomial p = random_poly();
    const IntPolynomial q = random_poly();
    for (long v = -2; v <= 2; ++v) {
      CHECK(eval_int(p * q, v) == eval_int(p, v) * eval_int(q, v));
      CHECK(eval_int(p + q, v) == eval_int(p, v) + eval_int(q, v));
    }
    CHECK(compose_shift(compose_shift(p, -1), 1) == p);
    CHECK(eval_int(compose_shift(p, -1), 3) == eval_int(p, 2));
    const IntPolynomial tp = p * IntPolynomial::t();
    CHECK(divide_by_t(tp) * IntPolynomial::t() == tp);
  }
}
