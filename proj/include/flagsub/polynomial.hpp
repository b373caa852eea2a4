#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "flagsub/error.hpp"

namespace flagsub {

using BigInt = boost::multiprecision::cpp_int;

/// Exact polynomial with arbitrary-precision integer coefficients; index = degree.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long long> coeffs) {
    for (long long c : coeffs) coeffs_.emplace_back(c);
    normalize();
  }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static IntPolynomial constant(BigInt c) { return IntPolynomial(std::vector<BigInt>{std::move(c)}); }
  static IntPolynomial monomial(std::size_t degree, BigInt c = 1) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return IntPolynomial(std::move(v));
  }
  /// (1 + x)^n
  static IntPolynomial one_plus_x_pow(int n) { return pow(IntPolynomial{1, 1}, n); }
  /// (1 - x)^n
  static IntPolynomial one_minus_x_pow(int n) { return pow(IntPolynomial{1, -1}, n); }

  static IntPolynomial pow(const IntPolynomial& base, int n) {
    IntPolynomial out{1};
    for (int i = 0; i < n; ++i) out = out * base;
    return out;
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  /// Coefficient of x^i (zero beyond the degree).
  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt at(int i) const { return i < 0 ? BigInt(0) : (*this)[static_cast<std::size_t>(i)]; }

  BigInt eval(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// x^d · p(1/x). Requires degree ≤ d.
  IntPolynomial reversed(int d) const {
    if (degree() > d) throw Error(Errc::InvalidArgument, "cannot reverse a polynomial of degree above " + std::to_string(d));
    std::vector<BigInt> v(static_cast<std::size_t>(std::max(d + 1, 0)));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[static_cast<std::size_t>(d) - i] = coeffs_[i];
    return IntPolynomial(std::move(v));
  }

  /// p · x^k
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(k, BigInt(0));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(v));
  }

  IntPolynomial& operator+=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  IntPolynomial& operator-=(const IntPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
  }
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(v));
  }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial p) {
    for (auto& x : p.coeffs_) x *= c;
    p.normalize();
    return p;
  }

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Coefficientwise a ≥ b.
  friend bool dominates(const IntPolynomial& a, const IntPolynomial& b) {
    const std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] < b[i]) return false;
    return true;
  }

  bool nonnegative() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
  }

  /// Weakly increasing then weakly decreasing, ignoring nothing (internal zeros count).
  bool unimodal() const {
    std::size_t i = 0;
    while (i + 1 < coeffs_.size() && coeffs_[i] <= coeffs_[i + 1]) ++i;
    while (i + 1 < coeffs_.size() && coeffs_[i] >= coeffs_[i + 1]) ++i;
    return i + 1 >= coeffs_.size();
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const BigInt& c = coeffs_[i];
      if (c == 0) continue;
      BigInt mag = c < 0 ? BigInt(-c) : c;
      if (first) {
        if (c < 0) os << "-";
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (i == 0 || mag != 1) os << mag;
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.str(); }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

}  // namespace flagsub
