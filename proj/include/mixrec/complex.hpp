#pragma once

#include <cmath>

namespace mixrec {

/// Minimal complex scalar over an arbitrary real type. std::complex is only
/// specified for the builtin floating types, so multiprecision reals need this.
template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(const Real& r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)
  Complex(const Real& r, const Real& i) : re(r), im(i) {}
  Complex(int r) : re(r), im(0) {}  // NOLINT(google-explicit-constructor)

  static Complex i() { return Complex(Real(0), Real(1)); }

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    Real r = re * o.re - im * o.im;
    im = re * o.im + im * o.re;
    re = r;
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    Real d = o.re * o.re + o.im * o.im;
    Real r = (re * o.re + im * o.im) / d;
    im = (im * o.re - re * o.im) / d;
    re = r;
    return *this;
  }
  Complex& operator*=(const Real& s) {
    re *= s;
    im *= s;
    return *this;
  }
  Complex& operator/=(const Real& s) {
    re /= s;
    im /= s;
    return *this;
  }

  Complex operator-() const { return Complex(-re, -im); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& s) { return a *= s; }
  friend Complex operator*(const Real& s, Complex a) { return a *= s; }
  friend Complex operator/(Complex a, const Real& s) { return a /= s; }
  friend Complex operator+(Complex a, const Real& s) {
    a.re += s;
    return a;
  }
  friend Complex operator-(Complex a, const Real& s) {
    a.re -= s;
    return a;
  }
  friend Complex operator+(Complex a, int s) {
    a.re += s;
    return a;
  }

  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }
};

template <class Real>
Complex<Real> conj(const Complex<Real>& z) {
  return Complex<Real>(z.re, -z.im);
}

template <class Real>
Real norm(const Complex<Real>& z) {
  return z.re * z.re + z.im * z.im;
}

template <class Real>
Real abs(const Complex<Real>& z) {
  using std::sqrt;
  return sqrt(norm(z));
}

template <class Real>
Complex<Real> pow(Complex<Real> base, int exponent) {
  Complex<Real> result(Real(1));
  if (exponent < 0) {
    base = Complex<Real>(Real(1)) / base;
    exponent = -exponent;
  }
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

/// i^n without rounding.
template <class Real>
Complex<Real> i_power(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return Complex<Real>(Real(1), Real(0));
    case 1: return Complex<Real>(Real(0), Real(1));
    case 2: return Complex<Real>(Real(-1), Real(0));
    default: return Complex<Real>(Real(0), Real(-1));
  }
}

}  // namespace mixrec
