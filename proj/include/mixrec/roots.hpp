#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Core>
#include <unsupported/Eigen/Polynomials>

#include "mixrec/complex.hpp"
#include "mixrec/errors.hpp"
#include "mixrec/polynomial.hpp"
#include "mixrec/precision.hpp"

namespace mixrec {

/// Real zeros of a polynomial, strictly increasing, with |p(zero)| alongside.
template <class Real>
struct ZeroSet {
  std::vector<Real> zeros;
  std::vector<Real> residuals;
  bool all_real = false;   // zeros.size() == degree
  int degree = 0;
  int complex_leakage = 0;  // roots dropped for a non-negligible imaginary part
  Real sep_tol{0};         // separation threshold used for this set

  std::size_t size() const { return zeros.size(); }
  const Real& operator[](std::size_t i) const { return zeros[i]; }
};

namespace detail {

/// Double-precision starting values from the balanced companion matrix.
template <class Real>
std::vector<Complex<Real>> companion_seeds(const Polynomial<Real>& poly) {
  const int n = poly.degree();
  if (n == 1) return {Complex<Real>(-poly[0] / poly[1])};
  Eigen::VectorXd coeffs(n + 1);
  for (int k = 0; k <= n; ++k) coeffs[k] = to_double(poly[k] / poly.leading());
  Eigen::PolynomialSolver<double, Eigen::Dynamic> solver(coeffs);
  std::vector<Complex<Real>> seeds;
  seeds.reserve(n);
  for (const std::complex<double>& z : solver.roots()) seeds.emplace_back(Real(z.real()), Real(z.imag()));
  return seeds;
}

}  // namespace detail

/// All real zeros of `poly`. Seeds come from a double-precision eigenvalue
/// solve and are polished together in working precision by Newton steps with
/// implicit deflation against the other estimates (Aberth), which keeps two
/// seeds from settling on the same root.
template <class Real>
ZeroSet<Real> find_real_zeros(const Polynomial<Real>& poly, const PrecisionConfig& config) {
  using C = Complex<Real>;
  using std::abs;
  using std::pow;
  const int n = poly.degree();
  if (n < 1) fail(ErrorKind::InvalidParams, "find_real_zeros: degree must be >= 1");

  std::vector<C> z = detail::companion_seeds(poly);
  const Real step_tol = pow(machine_epsilon<Real>(), Real(0.6));

  bool converged = false;
  for (int iter = 0; iter < config.max_iterations && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < n; ++i) {
      auto [value, slope] = poly.eval_with_derivative(z[i]);
      if (value == C(0)) continue;
      if (slope == C(0)) {
        // stationary point: nudge off it and try again next sweep
        z[i] += C(step_tol, step_tol) * (1 + abs(z[i]));
        converged = false;
        continue;
      }
      C repulsion(0);
      for (int j = 0; j < n; ++j) {
        if (j != i) repulsion += C(1) / (z[i] - z[j]);
      }
      const C newton = value / slope;
      const C step = newton / (C(1) - newton * repulsion);
      z[i] -= step;
      using boost::multiprecision::isfinite;
      using std::isfinite;
      if (!isfinite(z[i].re) || !isfinite(z[i].im)) fail(ErrorKind::ConvergenceFailure, "root polishing diverged");
      if (abs(step) > step_tol * (1 + abs(z[i]))) converged = false;
    }
  }
  if (!converged) fail(ErrorKind::ConvergenceFailure, "root polishing did not converge");

  ZeroSet<Real> out;
  out.degree = n;
  Real lo = z[0].re;
  Real hi = z[0].re;
  for (const auto& w : z) {
    lo = std::min(lo, w.re);
    hi = std::max(hi, w.re);
  }
  out.sep_tol = config.sep_tol * (1 + (hi - lo));

  for (const auto& w : z) {
    if (abs(w.im) > out.sep_tol) {
      ++out.complex_leakage;
      continue;
    }
    out.zeros.push_back(w.re);
  }
  std::sort(out.zeros.begin(), out.zeros.end());

  const Real limit = config.residual_tol * poly.max_abs_coeff();
  for (std::size_t i = 0; i < out.zeros.size(); ++i) {
    if (i > 0 && out.zeros[i] - out.zeros[i - 1] <= out.sep_tol)
      fail(ErrorKind::ConvergenceFailure, "two polished zeros collide within sep_tol");
    Real residual = abs(poly(out.zeros[i]));
    if (residual > limit) fail(ErrorKind::ConvergenceFailure, "zero residual above tolerance");
    out.residuals.push_back(std::move(residual));
  }
  out.all_real = static_cast<int>(out.zeros.size()) == n;
  return out;
}

/// min |a_i - b_j|; a numerical proxy for co-primality.
template <class Real>
Real min_zero_gap(const std::vector<Real>& a, const std::vector<Real>& b) {
  using std::abs;
  if (a.empty() || b.empty()) fail(ErrorKind::InvalidParams, "min_zero_gap: empty zero set");
  Real best = abs(a[0] - b[0]);
  for (const auto& x : a)
    for (const auto& y : b) best = std::min(best, Real(abs(x - y)));
  return best;
}

template <class Real>
Real min_zero_gap(const ZeroSet<Real>& a, const ZeroSet<Real>& b) {
  return min_zero_gap(a.zeros, b.zeros);
}

}  // namespace mixrec
