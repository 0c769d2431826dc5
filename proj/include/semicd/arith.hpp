#pragma once

// Exact arithmetic primitives shared across the library: arbitrary-precision
// integers and rationals, binomial/multinomial coefficients, and a small dense
// univariate polynomial used for h-polynomials and commutative evaluations.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace semicd {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return Int(0);
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is a binomial coefficient after every step
  }
  return r;
}

/// (p_1 + ... + p_k choose p_1, ..., p_k); zero if any part is negative.
inline Int multinomial(const std::vector<long long>& parts) {
  Int r = 1;
  long long total = 0;
  for (long long p : parts) {
    if (p < 0) return Int(0);
    total += p;
    r *= binomial(total, p);
  }
  return r;
}

inline Int int_pow(Int base, long long exp) {
  if (exp < 0) throw std::invalid_argument("int_pow: negative exponent");
  Int r = 1;
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

inline Int parity_sign(long long e) { return (e % 2 == 0) ? Int(1) : Int(-1); }

/// Dense univariate polynomial over Int, coefficients stored by ascending
/// degree with no trailing zeros.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(Int constant) {
    if (constant != 0) coeff_.push_back(std::move(constant));
  }
  IntPolynomial(long long constant) : IntPolynomial(Int(constant)) {}
  explicit IntPolynomial(std::vector<Int> coeff) : coeff_(std::move(coeff)) { trim(); }

  static IntPolynomial variable() { return IntPolynomial(std::vector<Int>{Int(0), Int(1)}); }

  bool is_zero() const { return coeff_.empty(); }
  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  Int coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return Int(0);
    return coeff_[static_cast<std::size_t>(i)];
  }
  const std::vector<Int>& coefficients() const { return coeff_; }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size());
    for (std::size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] += o.coeff_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (coeff_.size() < o.coeff_.size()) coeff_.resize(o.coeff_.size());
    for (std::size_t i = 0; i < o.coeff_.size(); ++i) coeff_[i] -= o.coeff_[i];
    trim();
    return *this;
  }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> c(a.coeff_.size() + b.coeff_.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.coeff_.size(); ++i)
      for (std::size_t j = 0; j < b.coeff_.size(); ++j) c[i + j] += a.coeff_[i] * b.coeff_[j];
    return IntPolynomial(std::move(c));
  }
  friend IntPolynomial operator*(const Int& s, const IntPolynomial& a) {
    if (s == 0) return {};
    IntPolynomial r = a;
    for (auto& c : r.coeff_) c *= s;
    return r;
  }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeff_ == b.coeff_;
  }

  IntPolynomial pow(long long e) const {
    if (e < 0) throw std::invalid_argument("IntPolynomial::pow: negative exponent");
    IntPolynomial r(Int(1)), base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeff_.size(); ++i) {
      if (coeff_[i] == 0) continue;
      if (!first) os << " + ";
      os << coeff_[i];
      if (i == 1)
        os << "*t";
      else if (i > 1)
        os << "*t^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void trim() {
    while (!coeff_.empty() && coeff_.back() == 0) coeff_.pop_back();
  }
  std::vector<Int> coeff_;
};

}  // namespace semicd
