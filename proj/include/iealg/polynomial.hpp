#pragma once

// Dense univariate polynomials in the grading element d.

#include "iealg/rational.hpp"

#include <algorithm>
#include <concepts>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace iealg {

template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Scalar& c) {  // NOLINT: constants lift implicitly
    if (c != 0) coeffs_.push_back(c);
  }
  template <std::integral I>
  Polynomial(I c) : Polynomial(Scalar(c)) {}  // NOLINT
  Polynomial(std::initializer_list<Scalar> low_to_high) : coeffs_(low_to_high) { trim(); }
  explicit Polynomial(std::vector<Scalar> low_to_high) : coeffs_(std::move(low_to_high)) { trim(); }

  static Polynomial monomial(std::size_t k, const Scalar& c = Scalar(1)) {
    if (c == 0) return {};
    Polynomial p;
    p.coeffs_.assign(k + 1, Scalar(0));
    p.coeffs_[k] = c;
    return p;
  }
  /// d + c
  static Polynomial linear(const Scalar& c) { return Polynomial{c, Scalar(1)}; }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; −1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  Scalar coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(0); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// q(d) = p(d + delta).
  Polynomial shifted(const Scalar& delta) const {
    // Horner in the ring: ((a_n)(d+δ) + a_{n-1})(d+δ) + ...
    Polynomial out;
    const Polynomial step = linear(delta);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      out = out * step;
      out += Polynomial(*it);
    }
    return out;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& c) {
    if (c == 0) coeffs_.clear();
    for (auto& a : coeffs_) a *= c;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) { return a *= Scalar(-1); }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;  // low to high
};

using PolynomialQ = Polynomial<Rational>;

/// "c_k*d^k+...+c_1*d+c_0", highest degree first; "0" for zero.
std::string format_polynomial(const PolynomialQ& p);
PolynomialQ parse_polynomial(std::string_view text);

}  // namespace iealg
