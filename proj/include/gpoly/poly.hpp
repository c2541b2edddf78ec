#pragma once

/**
 * Exact integer polynomials.
 *
 * IntPolynomial is a dense univariate polynomial in t with arbitrary
 * precision coefficients; coeffs()[i] is the coefficient of t^i and the
 * sequence never ends in a zero (the zero polynomial is empty).
 *
 * BivariatePolynomial is the coefficient table used for Tutte polynomials:
 * entry (i, j) is the coefficient of x^i y^j.
 */

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gpoly {

using Integer = mpz_class;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(Integer c, std::size_t power);
  static IntPolynomial t() { return monomial(1, 1); }
  static IntPolynomial one() { return monomial(1, 0); }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  Integer coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Integer(0);
  }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const Integer& c);

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial scale(const IntPolynomial& p, const Integer& c);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) { return add(p, q); }
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) { return sub(p, q); }
inline IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& q) { return mul(p, q); }
inline IntPolynomial operator*(const Integer& c, const IntPolynomial& p) { return scale(p, c); }

// p^k by repeated squaring.
IntPolynomial pow(const IntPolynomial& p, unsigned k);

Integer eval_int(const IntPolynomial& p, const Integer& v);

// p(t + shift) for shift in {-1, +1}, expanded with binomial coefficients.
IntPolynomial compose_shift(const IntPolynomial& p, int shift);

// p / t; throws Error("not divisible by t") on a nonzero constant term.
IntPolynomial divide_by_t(const IntPolynomial& p);

// True when every coefficient is >= 0.
bool nonnegative(const IntPolynomial& p);

// "3t^3 + 5t^2 + 3t"; zero renders as "0". `var` names the variable.
std::string to_text(const IntPolynomial& p, char var = 't');
// {"coeffs":[0,3,5,3]}
std::string to_json(const IntPolynomial& p);
// Coefficients as decimal strings, ascending.
std::vector<std::string> coeff_strings(const IntPolynomial& p);

class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  // rows[i][j] is the coefficient of x^i y^j.
  explicit BivariatePolynomial(std::vector<std::vector<Integer>> rows);

  void add_term(std::size_t i, std::size_t j, const Integer& c);

  Integer coeff(std::size_t i, std::size_t j) const;
  const std::vector<std::vector<Integer>>& rows() const { return rows_; }
  bool is_zero() const { return rows_.empty(); }
  Integer eval(const Integer& x, const Integer& y) const;

  friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    return a.rows_ == b.rows_;
  }

 private:
  void trim();
  std::vector<std::vector<Integer>> rows_;
};

// Terms by descending x power, then ascending y power:
// "x^3 + 3x^2 + 2x + 4xy + 2y + 3y^2 + y^3".
std::string to_text(const BivariatePolynomial& p);
// {"coeffs":[[...],[...]]} with rows indexed by the power of x.
std::string to_json(const BivariatePolynomial& p);

}  // namespace gpoly
