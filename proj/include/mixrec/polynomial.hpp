#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mixrec/complex.hpp"
#include "mixrec/errors.hpp"

namespace mixrec {

/// Dense polynomial, coefficients stored from the constant term up to the
/// leading term. Exact trailing zeros are trimmed, so degree() is the index
/// of the last stored coefficient (the zero polynomial has degree 0).
template <class T>
class Polynomial {
 public:
  Polynomial() : coeffs_{T(0)} {}
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }
  static Polynomial one() { return constant(T(1)); }
  /// x - root
  static Polynomial linear(const T& root) { return Polynomial(std::vector<T>{-root, T(1)}); }
  static Polynomial x() { return Polynomial(std::vector<T>{T(0), T(1)}); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<T>& coeffs() const { return coeffs_; }
  std::span<const T> span() const { return coeffs_; }

  /// Coefficient of x^k; zero beyond the degree.
  T operator[](int k) const { return k >= 0 && k <= degree() ? coeffs_[k] : T(0); }
  const T& leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == T(0); }

  /// Horner evaluation; the accumulator type follows the argument so a real
  /// polynomial can be evaluated at a complex point.
  template <class U>
  U operator()(const U& z) const {
    U acc(coeffs_.back());
    for (int k = degree() - 1; k >= 0; --k) {
      acc *= z;
      acc += U(coeffs_[k]);
    }
    return acc;
  }

  /// Value and first derivative in one pass.
  template <class U>
  std::pair<U, U> eval_with_derivative(const U& z) const {
    U value(coeffs_.back());
    U slope(0);
    for (int k = degree() - 1; k >= 0; --k) {
      slope *= z;
      slope += value;
      value *= z;
      value += U(coeffs_[k]);
    }
    return {value, slope};
  }

  Polynomial derivative() const {
    if (degree() == 0) return Polynomial();
    std::vector<T> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * T(static_cast<int>(k));
    return Polynomial(std::move(d));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator*=(const T& s) {
    for (auto& c : coeffs_) c *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& s) { return a *= s; }
  friend Polynomial operator*(const T& s, Polynomial a) { return a *= s; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == T(0)) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  /// Largest coefficient magnitude; the scale used by every relative test.
  auto max_abs_coeff() const {
    using std::abs;
    auto best = abs(coeffs_[0]);
    for (const auto& c : coeffs_) {
      auto m = abs(c);
      if (m > best) best = m;
    }
    return best;
  }

 private:
  void trim() {
    if (coeffs_.empty()) coeffs_.push_back(T(0));
    while (coeffs_.size() > 1 && coeffs_.back() == T(0)) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

template <class Real>
using RealPolynomial = Polynomial<Real>;

/// Sum of c_i(x) * p_i(x) over the listed pairs.
template <class T>
Polynomial<T> poly_linear_combine(std::span<const std::pair<Polynomial<T>, Polynomial<T>>> terms) {
  Polynomial<T> sum;
  for (const auto& [coefficient, poly] : terms) sum += coefficient * poly;
  return sum;
}

template <class T>
Polynomial<T> poly_linear_combine(std::initializer_list<std::pair<Polynomial<T>, Polynomial<T>>> terms) {
  return poly_linear_combine<T>(std::span<const std::pair<Polynomial<T>, Polynomial<T>>>(terms.begin(), terms.size()));
}

/// Evaluate at a complex point.
template <class Real>
Complex<Real> poly_eval(const Polynomial<Real>& poly, const Complex<Real>& z) {
  return poly(z);
}

/// Largest |a_k - b_k| over all coefficient positions.
template <class T>
auto max_coeff_difference(const Polynomial<T>& a, const Polynomial<T>& b) {
  using std::abs;
  const int top = std::max(a.degree(), b.degree());
  auto best = abs(a[0] - b[0]);
  for (int k = 1; k <= top; ++k) {
    auto d = abs(a[k] - b[k]);
    if (d > best) best = d;
  }
  return best;
}

}  // namespace mixrec
