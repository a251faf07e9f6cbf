#pragma once

#include <cmath>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "mixrec/complex.hpp"
#include "mixrec/errors.hpp"
#include "mixrec/polynomial.hpp"
#include "mixrec/precision.hpp"

namespace mixrec {

enum class Family { MP, PJ, CH };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::MP: return "mp";
    case Family::PJ: return "pj";
    case Family::CH: return "ch";
  }
  return "?";
}

/// Meixner-Pollaczek P_n^(lambda)(x; phi).
template <class Real>
struct MpParams {
  Real lambda;
  Real phi;
};

/// Pseudo-Jacobi P_n(x; a, b).
template <class Real>
struct PjParams {
  Real a;
  Real b;
};

/// Continuous Hahn p_n(x; p+iq, r+is, p-iq, r-is).
template <class Real>
struct ChParams {
  Real p;
  Real q;
  Real r;
  Real s;
};

template <class Real>
using FamilyParams = std::variant<MpParams<Real>, PjParams<Real>, ChParams<Real>>;

template <class Real>
Family family_of(const FamilyParams<Real>& params) {
  return static_cast<Family>(params.index());
}

template <class Real>
bool is_valid(const MpParams<Real>& m) {
  return m.lambda > 0 && m.phi > 0 && m.phi < pi<Real>();
}

template <class Real>
bool is_valid(const PjParams<Real>&) {
  return true;
}

template <class Real>
bool is_valid(const ChParams<Real>& c) {
  return c.p > 0 && c.r > 0;
}

template <class Real>
bool is_valid(const FamilyParams<Real>& params) {
  return std::visit([](const auto& v) { return is_valid(v); }, params);
}

/// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
template <class T>
T pochhammer(const T& a, int n) {
  if (n < 0) fail(ErrorKind::InvalidParams, "pochhammer: negative length");
  T result(1);
  for (int j = 0; j < n; ++j) result *= a + j;
  return result;
}

namespace detail {

/// Checks that every coefficient is real to within tol * (largest magnitude),
/// drops the imaginary parts and rescales so the leading coefficient is 1.
template <class Real>
Polynomial<Real> monic_real_part(const std::vector<Complex<Real>>& coeffs, const PrecisionConfig& config,
                                 const char* what) {
  Real scale(0);
  for (const auto& c : coeffs) scale = std::max(scale, abs(c));
  const Real lead = coeffs.back().re;
  if (scale == 0 || abs(coeffs.back()) == 0)
    fail(ErrorKind::RealnessViolation, std::string(what) + ": vanishing leading coefficient");
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    using std::abs;
    if (abs(coeffs[k].im) > config.realness_tol * scale)
      fail(ErrorKind::RealnessViolation,
           std::string(what) + ": imaginary part of coefficient " + std::to_string(k) + " exceeds tolerance");
  }
  std::vector<Real> out(coeffs.size());
  for (std::size_t k = 0; k + 1 < coeffs.size(); ++k) out[k] = coeffs[k].re / lead;
  out.back() = Real(1);
  return Polynomial<Real>(std::move(out));
}

/// coeffs <- coeffs * (c0 + c1 x)
template <class Real>
void multiply_linear(std::vector<Complex<Real>>& coeffs, const Complex<Real>& c0, const Complex<Real>& c1) {
  coeffs.push_back(Complex<Real>(0));
  for (std::size_t k = coeffs.size() - 1; k > 0; --k) coeffs[k] = coeffs[k] * c0 + coeffs[k - 1] * c1;
  coeffs[0] *= c0;
}

}  // namespace detail

/// Monic Meixner-Pollaczek polynomial from its terminating 2F1 expansion
///   i^n (2 lambda)_n (e^{2i phi} / (e^{2i phi} - 1))^n 2F1(-n, lambda + ix; 2 lambda; 1 - e^{-2i phi}).
template <class Real>
Polynomial<Real> mp_polynomial(int n, const MpParams<Real>& params, const PrecisionConfig& config) {
  using C = Complex<Real>;
  using std::cos;
  using std::sin;
  if (n < 0) fail(ErrorKind::InvalidParams, "mp_polynomial: negative degree");
  if (!is_valid(params)) fail(ErrorKind::InvalidParams, "Meixner-Pollaczek needs lambda > 0 and 0 < phi < pi");
  if (n == 0) return Polynomial<Real>::one();

  const Real& lambda = params.lambda;
  const Real two_phi = 2 * params.phi;
  const C z(1 - cos(two_phi), sin(two_phi));  // 1 - e^{-2i phi}

  std::vector<C> sum(n + 1, C(0));
  std::vector<C> rising{C(1)};  // (lambda + ix)_k
  C term(1);                    // (-n)_k / ((2 lambda)_k k!) z^k
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= k; ++j) sum[j] += term * rising[j];
    if (k == n) break;
    term *= z * (Real(k - n) / ((2 * lambda + k) * (k + 1)));
    detail::multiply_linear(rising, C(lambda + k), C::i());
  }

  const C prefactor = i_power<Real>(n) * pochhammer(Real(2 * lambda), n) / pow(z, n);
  for (auto& c : sum) c *= prefactor;
  return detail::monic_real_part(sum, config, "Meixner-Pollaczek");
}

/// Monic Pseudo-Jacobi polynomial
///   2^n (a+ib+1)_n / (i^n (2a+n+1)_n) 2F1(-n, 2a+n+1; a+ib+1; (1-ix)/2).
/// The ratio (a+ib+1)_n / (a+ib+1)_k is folded into (a+ib+1+k)_{n-k}, so only
/// the (2a+n+1)_n denominator can be singular.
template <class Real>
Polynomial<Real> pj_polynomial(int n, const PjParams<Real>& params, const PrecisionConfig& config) {
  using C = Complex<Real>;
  using std::abs;
  using std::ldexp;
  if (n < 0) fail(ErrorKind::InvalidParams, "pj_polynomial: negative degree");
  if (n == 0) return Polynomial<Real>::one();

  const Real& a = params.a;
  const Real upper = 2 * a + n + 1;
  const Real singular_tol = config.realness_tol * (1 + abs(2 * a) + n);
  for (int j = 0; j < n; ++j) {
    if (abs(upper + j) <= singular_tol)
      fail(ErrorKind::SingularParams, "Pseudo-Jacobi: (2a+n+1)_n vanishes for a = " + format_real(a));
  }

  const C shift(a + 1, params.b);
  std::vector<C> sum(n + 1, C(0));
  std::vector<C> power{C(1)};  // (1 - ix)^k
  Real coeff(1);               // (-n)_k (2a+n+1)_k / (k! 2^k)
  for (int k = 0; k <= n; ++k) {
    const C tail = coeff * pochhammer(shift + k, n - k);
    for (int j = 0; j <= k; ++j) sum[j] += tail * power[j];
    if (k == n) break;
    coeff *= Real(k - n) * (upper + k) / (2 * (k + 1));
    detail::multiply_linear(power, C(1), C(Real(0), Real(-1)));
  }

  const C prefactor = C(ldexp(Real(1), n)) / (i_power<Real>(n) * pochhammer(upper, n));
  for (auto& c : sum) c *= prefactor;
  return detail::monic_real_part(sum, config, "Pseudo-Jacobi");
}

/// Shift term of the monic continuous Hahn recurrence
///   p_{m+2} = (x + C_m) p_{m+1} - D_m p_m.
template <class Real>
Real ch_recurrence_shift(int m, const ChParams<Real>& c) {
  const Real qs = c.q + c.s;
  const Real pr = c.p + c.r;
  const Real num = (m + 1) * (2 * pr - 1) * qs + Real((m + 1) * (m + 1)) * qs + 2 * (pr - 1) * (c.p * c.s + c.q * c.r);
  return num / (2 * (m + pr) * (m + pr + 1));
}

/// Weight term D_m of the same recurrence. At m = 0 the factor
/// (m + 2p + 2r - 1) / (2m + 2p + 2r - 1) is cancelled to 1.
template <class Real>
Real ch_recurrence_weight(int m, const ChParams<Real>& c) {
  const Real pr = c.p + c.r;
  const Real qs = c.q - c.s;
  const Real common = (m + 1) * (m + 2 * c.p) * (m + 2 * c.r) * ((m + pr) * (m + pr) + qs * qs);
  const Real tail = 4 * (m + pr) * (m + pr) * (2 * m + 2 * pr + 1);
  if (m == 0) return common / tail;
  return common * (m + 2 * pr - 1) / (tail * (2 * m + 2 * pr - 1));
}

/// p_0 .. p_{max_degree} of the monic continuous Hahn family, built upward by
/// the real three-term recurrence.
template <class Real>
std::vector<Polynomial<Real>> ch_sequence(int max_degree, const ChParams<Real>& params, const PrecisionConfig&) {
  if (max_degree < 0) fail(ErrorKind::InvalidParams, "ch_sequence: negative degree");
  if (!is_valid(params)) fail(ErrorKind::InvalidParams, "continuous Hahn needs p > 0 and r > 0");
  std::vector<Polynomial<Real>> seq;
  seq.reserve(max_degree + 1);
  seq.push_back(Polynomial<Real>::one());
  if (max_degree == 0) return seq;
  const Real& p = params.p;
  seq.push_back(Polynomial<Real>{params.q - p * (params.q - params.s) / (p + params.r), Real(1)});
  for (int m = 0; m + 2 <= max_degree; ++m) {
    Polynomial<Real> next = Polynomial<Real>{ch_recurrence_shift(m, params), Real(1)} * seq[m + 1];
    next -= seq[m] * ch_recurrence_weight(m, params);
    seq.push_back(std::move(next));
  }
  return seq;
}

template <class Real>
Polynomial<Real> ch_polynomial(int n, const ChParams<Real>& params, const PrecisionConfig& config) {
  if (n < 0) fail(ErrorKind::InvalidParams, "ch_polynomial: negative degree");
  return ch_sequence(n, params, config)[n];
}

/// Direct expansion of
///   i^n (a+c)_n (a+d)_n / (a+b+c+d+n-1)_n 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1)
/// with a = p+iq, b = r+is, c = p-iq, d = r-is. Slower than the recurrence;
/// kept as an independent construction for cross-checks.
template <class Real>
Polynomial<Real> ch_polynomial_hypergeometric(int n, const ChParams<Real>& params, const PrecisionConfig& config) {
  using C = Complex<Real>;
  if (n < 0) fail(ErrorKind::InvalidParams, "ch_polynomial_hypergeometric: negative degree");
  if (!is_valid(params)) fail(ErrorKind::InvalidParams, "continuous Hahn needs p > 0 and r > 0");
  if (n == 0) return Polynomial<Real>::one();

  const C a(params.p, params.q);
  const Real a_plus_c = 2 * params.p;
  const C a_plus_d(params.p + params.r, params.q - params.s);
  const Real total = 2 * (params.p + params.r);

  std::vector<C> sum(n + 1, C(0));
  std::vector<C> rising{C(1)};  // (a + ix)_k
  Real coeff(1);                // (-n)_k (n+S-1)_k / k!
  for (int k = 0; k <= n; ++k) {
    const C tail = coeff * pochhammer(Real(a_plus_c + k), n - k) * pochhammer(a_plus_d + k, n - k);
    for (int j = 0; j <= k; ++j) sum[j] += tail * rising[j];
    if (k == n) break;
    coeff *= Real(k - n) * (n + total - 1 + k) / (k + 1);
    detail::multiply_linear(rising, a + k, C::i());
  }

  const C prefactor = i_power<Real>(n) / C(pochhammer(Real(total + n - 1), n));
  for (auto& c : sum) c *= prefactor;
  return detail::monic_real_part(sum, config, "continuous Hahn (3F2)");
}

template <class Real>
Polynomial<Real> family_polynomial(int n, const FamilyParams<Real>& params, const PrecisionConfig& config) {
  return std::visit(
      [&](const auto& v) -> Polynomial<Real> {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, MpParams<Real>>) return mp_polynomial(n, v, config);
        else if constexpr (std::is_same_v<V, PjParams<Real>>) return pj_polynomial(n, v, config);
        else return ch_polynomial(n, v, config);
      },
      params);
}

}  // namespace mixrec
