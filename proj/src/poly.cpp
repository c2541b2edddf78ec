#include "gpoly/poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gpoly/error.hpp"

namespace gpoly {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(Integer c, std::size_t power) {
  std::vector<Integer> v(power + 1);
  v[power] = std::move(c);
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial add(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial r = p;
  r += q;
  return r;
}

IntPolynomial sub(const IntPolynomial& p, const IntPolynomial& q) {
  IntPolynomial r = p;
  r -= q;
  return r;
}

IntPolynomial scale(const IntPolynomial& p, const Integer& c) {
  IntPolynomial r = p;
  r *= c;
  return r;
}

IntPolynomial mul(const IntPolynomial& p, const IntPolynomial& q) {
  if (p.is_zero() || q.is_zero()) return {};
  const auto& a = p.coeffs();
  const auto& b = q.coeffs();
  std::vector<Integer> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial pow(const IntPolynomial& p, unsigned k) {
  IntPolynomial result = IntPolynomial::one();
  IntPolynomial base = p;
  while (k > 0) {
    if (k & 1u) result = mul(result, base);
    k >>= 1u;
    if (k > 0) base = mul(base, base);
  }
  return result;
}

Integer eval_int(const IntPolynomial& p, const Integer& v) {
  Integer acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * v + *it;
  return acc;
}

IntPolynomial compose_shift(const IntPolynomial& p, int shift) {
  if (shift != 1 && shift != -1) throw Error("compose_shift: shift must be -1 or +1");
  // p(t+b) = sum_k t^k sum_{i>=k} c_i C(i,k) b^(i-k)
  const auto& c = p.coeffs();
  std::vector<Integer> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Integer binom = 1;  // C(i, k), walked down from k = i
    for (std::size_t k = i + 1; k-- > 0;) {
      Integer term = c[i] * binom;
      if (shift < 0 && ((i - k) & 1u)) term = -term;
      out[k] += term;
      if (k > 0) {
        binom *= static_cast<unsigned long>(k);
        binom /= static_cast<unsigned long>(i - k + 1);
      }
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_by_t(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  if (p.coeffs().front() != 0) throw Error("not divisible by t");
  return IntPolynomial(std::vector<Integer>(p.coeffs().begin() + 1, p.coeffs().end()));
}

bool nonnegative(const IntPolynomial& p) {
  return std::all_of(p.coeffs().begin(), p.coeffs().end(),
                     [](const Integer& c) { return c >= 0; });
}

namespace {

// Appends one term with the " + " / " - " separator convention. `body` is the
// monomial without coefficient ("t^2", "xy", or "" for a constant).
void append_term(std::string& out, const Integer& c, const std::string& body) {
  const bool negative = c < 0;
  Integer mag = abs(c);
  if (out.empty()) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  if (mag != 1 || body.empty()) out += mag.get_str();
  out += body;
}

std::string power_body(char var, std::size_t k) {
  if (k == 0) return "";
  std::string s(1, var);
  if (k > 1) s += "^" + std::to_string(k);
  return s;
}

}  // namespace

std::string to_text(const IntPolynomial& p, char var) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    append_term(out, c[k], power_body(var, k));
  }
  return out;
}

std::string to_json(const IntPolynomial& p) {
  std::string out = "{\"coeffs\":[";
  const auto& c = p.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ",";
    out += c[i].get_str();
  }
  out += "]}";
  return out;
}

std::vector<std::string> coeff_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<Integer>> rows)
    : rows_(std::move(rows)) {
  trim();
}

void BivariatePolynomial::trim() {
  for (auto& row : rows_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
}

void BivariatePolynomial::add_term(std::size_t i, std::size_t j, const Integer& c) {
  if (rows_.size() <= i) rows_.resize(i + 1);
  auto& row = rows_[i];
  if (row.size() <= j) row.resize(j + 1);
  row[j] += c;
  trim();
}

Integer BivariatePolynomial::coeff(std::size_t i, std::size_t j) const {
  if (i >= rows_.size() || j >= rows_[i].size()) return 0;
  return rows_[i][j];
}

Integer BivariatePolynomial::eval(const Integer& x, const Integer& y) const {
  Integer acc = 0;
  Integer xp = 1;
  for (const auto& row : rows_) {
    Integer inner = 0;
    for (auto it = row.rbegin(); it != row.rend(); ++it) inner = inner * y + *it;
    acc += xp * inner;
    xp *= x;
  }
  return acc;
}

std::string to_text(const BivariatePolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& rows = p.rows();
  for (std::size_t i = rows.size(); i-- > 0;) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (rows[i][j] == 0) continue;
      append_term(out, rows[i][j], power_body('x', i) + power_body('y', j));
    }
  }
  return out;
}

std::string to_json(const BivariatePolynomial& p) {
  std::string out = "{\"coeffs\":[";
  const auto& rows = p.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ",";
      out += rows[i][j].get_str();
    }
    out += "]";
  }
  out += "]}";
  return out;
}

}  // namespace gpoly
