#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixrec/complex.hpp"
#include "mixrec/errors.hpp"
#include "mixrec/families.hpp"
#include "mixrec/polynomial.hpp"
#include "mixrec/precision.hpp"
#include "mixrec/roots.hpp"

namespace mixrec {

// Every identity is stored in the common shape
//   f(x) g(x) = D(x) p(x) + H(x) q(x)
// with p of degree n and q of degree n+1 (q of degree n+1 also for the
// recurrence identity, where g has degree n+2).

enum class IdentityId { MP_111, MP_LL, PJ_1, PJ_4, CH_TTRR2, CH_1, CH_22, CH_ch, CH_2 };

inline constexpr std::array<IdentityId, 9> kAllIdentities = {
    IdentityId::MP_111, IdentityId::MP_LL, IdentityId::PJ_1,  IdentityId::PJ_4, IdentityId::CH_TTRR2,
    IdentityId::CH_1,   IdentityId::CH_22, IdentityId::CH_ch, IdentityId::CH_2};

inline const char* to_string(IdentityId id) {
  switch (id) {
    case IdentityId::MP_111: return "MP_111";
    case IdentityId::MP_LL: return "MP_LL";
    case IdentityId::PJ_1: return "PJ_1";
    case IdentityId::PJ_4: return "PJ_4";
    case IdentityId::CH_TTRR2: return "CH_TTRR2";
    case IdentityId::CH_1: return "CH_1";
    case IdentityId::CH_22: return "CH_22";
    case IdentityId::CH_ch: return "CH_ch";
    case IdentityId::CH_2: return "CH_2";
  }
  return "?";
}

inline std::optional<IdentityId> identity_from_string(std::string_view name) {
  for (IdentityId id : kAllIdentities)
    if (name == to_string(id)) return id;
  return std::nullopt;
}

inline Family family_of(IdentityId id) {
  switch (id) {
    case IdentityId::MP_111:
    case IdentityId::MP_LL: return Family::MP;
    case IdentityId::PJ_1:
    case IdentityId::PJ_4: return Family::PJ;
    default: return Family::CH;
  }
}

/// Identities whose H(x) is a linear factor (x - A) up to sign, i.e. those
/// that feed the completed-interlacing argument.
inline bool has_completion_factor(IdentityId id) {
  return id != IdentityId::MP_LL && id != IdentityId::CH_TTRR2;
}

template <class Real>
struct IdentityInstance {
  IdentityId id{};
  int n = 0;
  FamilyParams<Real> params;
  Polynomial<Real> lhs;       // f * g
  Polynomial<Real> rhs;       // D * p + H * q
  Polynomial<Real> f_factor;
  Polynomial<Real> d_coeff;
  Polynomial<Real> h_coeff;   // as it appears in the identity (sign included)
  std::optional<Polynomial<Real>> h_linear;  // monic x - A when the identity has one
  Polynomial<Real> g;
  Polynomial<Real> p;
  Polynomial<Real> q;
};

enum class ShiftVariant { AShift, BShift };

inline const char* to_string(ShiftVariant v) { return v == ShiftVariant::AShift ? "a-shift" : "b-shift"; }

/// Values of p_n, p_{n+1}, p_{n+2} at the conjugate pair -q -+ ip (a-shift)
/// or -s -+ ir (b-shift): the two numeric rows of the Christoffel determinant.
template <class Real>
struct ChristoffelEntries {
  ShiftVariant variant{};
  Complex<Real> lower_point;  // imaginary part negative
  Complex<Real> upper_point;
  std::array<Complex<Real>, 3> lower;
  std::array<Complex<Real>, 3> upper;
};

template <class Real>
struct ChUVW {
  ShiftVariant variant{};
  Complex<Real> U, V, W;
  Complex<Real> v_over_u, w_over_u;
  Real completion_point{0};  // real zero of H(x) (a-shift) or G(x) (b-shift)
  bool conjugate_ok = false;  // both ratios real to realness_tol
};

template <class Real>
struct IdentityResidualReport {
  IdentityId id{};
  std::string check = "identity";  // or "christoffel"
  int n = 0;
  FamilyParams<Real> params;
  double max_point_residual = 0;
  double coeff_residual = 0;
  bool passed = false;
};

namespace detail {

template <class P, class Real>
const P& expect_params(const FamilyParams<Real>& params, const char* who) {
  if (const P* v = std::get_if<P>(&params)) return *v;
  fail(ErrorKind::InvalidParams, std::string(who) + ": wrong parameter family");
}

template <class Real>
Polynomial<Real> quadratic(const Real& c0, const Real& c1) {
  return Polynomial<Real>{c0, c1, Real(1)};
}

template <class Real>
void require_nonzero(const Real& value, const char* what, const PrecisionConfig& config) {
  using std::abs;
  if (abs(value) <= config.realness_tol) fail(ErrorKind::SingularParams, what);
}

template <class Real>
void finish(IdentityInstance<Real>& inst) {
  inst.lhs = inst.f_factor * inst.g;
  inst.rhs = inst.d_coeff * inst.p + inst.h_coeff * inst.q;
  if (has_completion_factor(inst.id)) {
    const Real lead = inst.h_coeff[1];
    inst.h_linear = Polynomial<Real>{inst.h_coeff[0] / lead, Real(1)};
  }
}

template <class Real>
Complex<Real> sigma_zero(const ChParams<Real>& c, ShiftVariant variant) {
  // lower zero of p^2 + (q+x)^2 or r^2 + (s+x)^2
  return variant == ShiftVariant::AShift ? Complex<Real>(-c.q, -c.p) : Complex<Real>(-c.s, -c.r);
}

template <class Real>
ChParams<Real> shifted(const ChParams<Real>& c, ShiftVariant variant) {
  ChParams<Real> out = c;
  if (variant == ShiftVariant::AShift) out.p += 1;
  else out.r += 1;
  return out;
}

template <class Real>
Polynomial<Real> sigma_factor(const ChParams<Real>& c, ShiftVariant variant) {
  const Real& shift = variant == ShiftVariant::AShift ? c.q : c.s;
  const Real& width = variant == ShiftVariant::AShift ? c.p : c.r;
  return quadratic<Real>(width * width + shift * shift, 2 * shift);
}

}  // namespace detail

template <class Real>
ChristoffelEntries<Real> christoffel_entries(int n, const ChParams<Real>& params, ShiftVariant variant,
                                             const PrecisionConfig& config) {
  const auto seq = ch_sequence(n + 2, params, config);
  ChristoffelEntries<Real> e;
  e.variant = variant;
  e.lower_point = detail::sigma_zero(params, variant);
  e.upper_point = conj(e.lower_point);
  for (int k = 0; k < 3; ++k) {
    e.lower[k] = seq[n + k](e.lower_point);
    e.upper[k] = seq[n + k](e.upper_point);
  }
  return e;
}

/// 2x2 minors of the Christoffel rows. U vanishing (relative to the size of
/// its two products) means the construction breaks down.
template <class Real>
ChUVW<Real> ch_uvw(const ChristoffelEntries<Real>& e, int n, const ChParams<Real>& params,
                   const PrecisionConfig& config) {
  using std::abs;
  const auto& lo = e.lower;
  const auto& up = e.upper;
  ChUVW<Real> out;
  out.variant = e.variant;
  out.U = lo[0] * up[1] - lo[1] * up[0];
  out.V = lo[0] * up[2] - lo[2] * up[0];
  out.W = lo[1] * up[2] - lo[2] * up[1];
  const Real u_scale = abs(lo[0]) * abs(up[1]) + abs(lo[1]) * abs(up[0]);
  if (u_scale == 0 || abs(out.U) <= config.realness_tol * u_scale)
    fail(ErrorKind::DegenerateU, "U vanishes; Christoffel construction breaks down");
  out.v_over_u = out.V / out.U;
  out.w_over_u = out.W / out.U;
  auto real_enough = [&](const Complex<Real>& z) {
    return abs(z.im) <= config.realness_tol * std::max(Real(1), abs(z));
  };
  out.conjugate_ok = real_enough(out.v_over_u) && real_enough(out.w_over_u);
  out.completion_point = out.v_over_u.re - ch_recurrence_shift(n, params);
  return out;
}

template <class Real>
ChUVW<Real> ch_uvw(int n, const ChParams<Real>& params, ShiftVariant variant, const PrecisionConfig& config) {
  return ch_uvw(christoffel_entries(n, params, variant, config), n, params, config);
}

/// The shifted-parameter identity obtained from the Christoffel determinant,
/// assembled from already evaluated determinant rows.
template <class Real>
IdentityInstance<Real> build_ch_shift_identity(int n, const ChParams<Real>& params,
                                               const ChristoffelEntries<Real>& entries,
                                               const PrecisionConfig& config) {
  const ChUVW<Real> uvw = ch_uvw(entries, n, params, config);
  if (!uvw.conjugate_ok) fail(ErrorKind::RealnessViolation, "V/U or W/U is not real");
  const auto seq = ch_sequence(n + 1, params, config);
  IdentityInstance<Real> inst;
  inst.id = entries.variant == ShiftVariant::AShift ? IdentityId::CH_1 : IdentityId::CH_22;
  inst.n = n;
  inst.params = params;
  inst.f_factor = detail::sigma_factor(params, entries.variant);
  inst.g = ch_polynomial(n, detail::shifted(params, entries.variant), config);
  inst.p = seq[n];
  inst.q = seq[n + 1];
  inst.h_coeff = Polynomial<Real>::linear(uvw.completion_point);
  inst.d_coeff = Polynomial<Real>::constant(-(ch_recurrence_weight(n, params) - uvw.w_over_u.re));
  detail::finish(inst);
  return inst;
}

/// A_n of the real-parameter a-shift identity, in its closed Pochhammer form.
template <class Real>
Real ch_symmetric_a_coefficient(int n, const Real& p, const Real& r) {
  const Real base = (n + 1) * (n + 2 * r) * (n + 2 * p) * (n + 2 * p + 2 * r - 1) /
                    (4 * (2 * n + 2 * p + 2 * r + 1) * (2 * n + 2 * p + 2 * r - 1));
  const Real ratio = pochhammer(Real(n + 2 * p), 2) * pochhammer(Real(n + p + r), 2) *
                     pochhammer(Real(n + 2 * p + 2 * r - 1), n) / pochhammer(Real(n + 2 * p + 2 * r + 1), n + 2);
  return base - ratio;
}

/// B_n of the real-parameter b-shift identity, with the ratio
/// p_{n+2}(ir) / p_n(ir) evaluated directly.
template <class Real>
Real ch_symmetric_b_coefficient(int n, const Real& p, const Real& r, const PrecisionConfig& config) {
  using std::abs;
  const ChParams<Real> params{p, Real(0), r, Real(0)};
  const auto seq = ch_sequence(n + 2, params, config);
  const Complex<Real> at(Real(0), r);
  const Complex<Real> ratio = seq[n + 2](at) / seq[n](at);
  if (abs(ratio.im) > config.realness_tol * std::max(Real(1), abs(ratio)))
    fail(ErrorKind::RealnessViolation, "p_{n+2}(ir)/p_n(ir) is not real");
  const Real base = (n + 1) * (n + 2 * r) * (n + 2 * p) * (n + 2 * p + 2 * r - 1) /
                    (4 * (2 * n + 2 * p + 2 * r + 1) * (2 * n + 2 * p + 2 * r - 1));
  return base + ratio.re;
}

template <class Real>
IdentityInstance<Real> build_identity(IdentityId id, int n, const FamilyParams<Real>& params,
                                      const PrecisionConfig& config) {
  using std::cos;
  using std::sin;
  if (n < 0) fail(ErrorKind::InvalidParams, "build_identity: negative degree");
  if (!is_valid(params)) fail(ErrorKind::InvalidParams, "build_identity: invalid parameters");
  IdentityInstance<Real> inst;
  inst.id = id;
  inst.n = n;
  inst.params = params;
  const Polynomial<Real> x = Polynomial<Real>::x();

  switch (id) {
    case IdentityId::MP_111: {
      const auto& m = detail::expect_params<MpParams<Real>>(params, to_string(id));
      const Real& lam = m.lambda;
      const Real s = sin(m.phi);
      const MpParams<Real> up{lam + 1, m.phi};
      inst.f_factor = detail::quadratic<Real>(lam * lam, Real(0));
      inst.g = mp_polynomial(n, up, config);
      inst.p = mp_polynomial(n, m, config);
      inst.q = mp_polynomial(n + 1, m, config);
      inst.d_coeff = Polynomial<Real>::constant(lam * (2 * lam + n) / (2 * s * s));
      inst.h_coeff = Polynomial<Real>::linear(lam * cos(m.phi) / s);
      break;
    }
    case IdentityId::MP_LL: {
      // P_n^(l) = B(x) P_n^(l+1) + A(x) P_{n+1}^(l+1). A(x) carries the sign
      // that makes the x^{n+2} terms cancel.
      const auto& m = detail::expect_params<MpParams<Real>>(params, to_string(id));
      const Real& lam = m.lambda;
      const Real s = sin(m.phi);
      const Real c = cos(m.phi);
      const Real c2 = cos(2 * m.phi);
      const Real s2 = sin(2 * m.phi);
      const Real den = (2 * lam + n) * (2 * lam + n + 1);
      const MpParams<Real> up{lam + 1, m.phi};
      inst.f_factor = Polynomial<Real>::one();
      inst.g = mp_polynomial(n, m, config);
      inst.p = mp_polynomial(n, up, config);
      inst.q = mp_polynomial(n + 1, up, config);
      inst.d_coeff = Polynomial<Real>{2 * (lam * lam - c2 * (lam * lam + n * lam + lam)) / den,
                                      2 * (n + 1) * s2 / den, 2 * (1 - c2) / den};
      inst.h_coeff = Polynomial<Real>{4 * s * lam * c / den, -4 * s * s / den};
      break;
    }
    case IdentityId::PJ_1: {
      const auto& pj = detail::expect_params<PjParams<Real>>(params, to_string(id));
      const Real& a = pj.a;
      const Real& b = pj.b;
      const Real an = a + n;
      detail::require_nonzero(an, "PJ_1: a + n vanishes", config);
      detail::require_nonzero(Real(an + 1), "PJ_1: a + n + 1 vanishes", config);
      detail::require_nonzero(Real(4 * an * an - 1), "PJ_1: 4(a+n)^2 - 1 vanishes", config);
      const Real big_b = (2 * a + n - 1) * (2 * a + n) * (an * an + b * b) / (an * an * (4 * an * an - 1));
      detail::require_nonzero(big_b, "PJ_1: B vanishes", config);
      const Real d0 = (2 * a * a * a + a * a * (5 * n + 2) + a * n * (4 * n + 3) + (n + 1) * (b * b + n * n)) /
                      (an * (an + 1) * (2 * a + 2 * n + 1));
      const Real d1 = -b * (n + 1) / ((an + 1) * an);
      inst.f_factor = Polynomial<Real>::constant(big_b);
      inst.g = pj_polynomial(n, PjParams<Real>{a - 1, b}, config);
      inst.p = pj_polynomial(n, pj, config);
      inst.q = pj_polynomial(n + 1, pj, config);
      inst.d_coeff = detail::quadratic<Real>(d0, d1);
      inst.h_coeff = -Polynomial<Real>::linear(b / an);
      break;
    }
    case IdentityId::PJ_4: {
      const auto& pj = detail::expect_params<PjParams<Real>>(params, to_string(id));
      const Real& a = pj.a;
      const Real& b = pj.b;
      const Real an1 = a + n + 1;
      detail::require_nonzero(an1, "PJ_4: a + n + 1 vanishes", config);
      detail::require_nonzero(Real(2 * a + 2 * n + 1), "PJ_4: 2a + 2n + 1 vanishes", config);
      inst.f_factor = detail::quadratic<Real>(Real(1), Real(0));
      inst.g = pj_polynomial(n, PjParams<Real>{a + 1, b}, config);
      inst.p = pj_polynomial(n, pj, config);
      inst.q = pj_polynomial(n + 1, pj, config);
      inst.d_coeff = Polynomial<Real>::constant((2 * a + n + 1) * (an1 * an1 + b * b) /
                                                (an1 * an1 * (2 * a + 2 * n + 1)));
      inst.h_coeff = Polynomial<Real>::linear(b / an1);
      break;
    }
    case IdentityId::CH_TTRR2: {
      // p_{n+2} from the hypergeometric sum against the recurrence applied to
      // recurrence-built p_n, p_{n+1}.
      const auto& c = detail::expect_params<ChParams<Real>>(params, to_string(id));
      const auto seq = ch_sequence(n + 1, c, config);
      inst.f_factor = Polynomial<Real>::one();
      inst.g = ch_polynomial_hypergeometric(n + 2, c, config);
      inst.p = seq[n];
      inst.q = seq[n + 1];
      inst.d_coeff = Polynomial<Real>::constant(-ch_recurrence_weight(n, c));
      inst.h_coeff = Polynomial<Real>{ch_recurrence_shift(n, c), Real(1)};
      break;
    }
    case IdentityId::CH_1:
    case IdentityId::CH_22: {
      const auto& c = detail::expect_params<ChParams<Real>>(params, to_string(id));
      const ShiftVariant v = id == IdentityId::CH_1 ? ShiftVariant::AShift : ShiftVariant::BShift;
      return build_ch_shift_identity(n, c, christoffel_entries(n, c, v, config), config);
    }
    case IdentityId::CH_ch:
    case IdentityId::CH_2: {
      const auto& c = detail::expect_params<ChParams<Real>>(params, to_string(id));
      if (c.q != 0 || c.s != 0) fail(ErrorKind::ConstraintViolation, std::string(to_string(id)) + " needs q = s = 0");
      const auto seq = ch_sequence(n + 1, c, config);
      const bool a_shift = id == IdentityId::CH_ch;
      const Real& width = a_shift ? c.p : c.r;
      inst.f_factor = detail::quadratic<Real>(width * width, Real(0));
      inst.g = ch_polynomial(n, detail::shifted(c, a_shift ? ShiftVariant::AShift : ShiftVariant::BShift), config);
      inst.p = seq[n];
      inst.q = seq[n + 1];
      const Real coefficient =
          a_shift ? ch_symmetric_a_coefficient(n, c.p, c.r) : ch_symmetric_b_coefficient(n, c.p, c.r, config);
      inst.d_coeff = Polynomial<Real>::constant(-coefficient);
      inst.h_coeff = x;
      break;
    }
  }
  detail::finish(inst);
  return inst;
}

/// Deterministic van der Corput points mapped onto [-10, 10].
template <class Real>
std::vector<Real> sample_points(int count) {
  std::vector<Real> pts;
  pts.reserve(count);
  for (int k = 1; k <= count; ++k) {
    double v = 0;
    double base = 0.5;
    for (int m = k; m > 0; m >>= 1, base *= 0.5)
      if (m & 1) v += base;
    pts.push_back(Real(-10 + 20 * v));
  }
  return pts;
}

namespace detail {

/// |lhs(x) - rhs(x)| / (scale * sum |x|^k): a residual relative to the
/// largest coefficient and to the size of the evaluation point.
template <class Real>
Real point_residual(const Polynomial<Real>& lhs, const Polynomial<Real>& rhs, const Real& scale, const Real& x) {
  using std::abs;
  const int top = std::max(lhs.degree(), rhs.degree());
  Real weight(0);
  Real power(1);
  for (int k = 0; k <= top; ++k) {
    weight += power;
    power *= abs(x);
  }
  return abs(lhs(x) - rhs(x)) / (scale * weight);
}

template <class Real>
void append_zeros(std::vector<Real>& pts, const Polynomial<Real>& poly, const PrecisionConfig& config) {
  if (poly.degree() < 1) return;
  try {
    const auto zs = find_real_zeros(poly, config);
    pts.insert(pts.end(), zs.zeros.begin(), zs.zeros.end());
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ConvergenceFailure) throw;
  }
}

}  // namespace detail

template <class Real>
IdentityResidualReport<Real> residual_report(const IdentityInstance<Real>& inst, int sample_count,
                                             const PrecisionConfig& config) {
  if (sample_count < 1) fail(ErrorKind::InvalidParams, "residual_report: sample_count must be >= 1");
  IdentityResidualReport<Real> report;
  report.id = inst.id;
  report.n = inst.n;
  report.params = inst.params;

  Real scale = std::max(inst.lhs.max_abs_coeff(), inst.rhs.max_abs_coeff());
  if (scale == 0) scale = 1;

  std::vector<Real> pts = sample_points<Real>(sample_count);
  detail::append_zeros(pts, inst.g, config);
  detail::append_zeros(pts, inst.p, config);
  detail::append_zeros(pts, inst.q, config);

  Real worst(0);
  for (const auto& x : pts) worst = std::max(worst, detail::point_residual(inst.lhs, inst.rhs, scale, x));
  report.max_point_residual = to_double(worst);
  report.coeff_residual = to_double(Real(max_coeff_difference(inst.lhs, inst.rhs) / scale));
  report.passed = report.max_point_residual <= config.residual_tol && report.coeff_residual <= config.residual_tol;
  return report;
}

enum class ShiftKind { MpLambdaUp, PjAMinus, PjAPlus, ChAShift, ChBShift };

/// The point A whose linear factor (x - A) completes the interlacing.
template <class Real>
Real completion_point(ShiftKind kind, int n, const FamilyParams<Real>& params, const PrecisionConfig& config) {
  using std::cos;
  using std::sin;
  switch (kind) {
    case ShiftKind::MpLambdaUp: {
      const auto& m = detail::expect_params<MpParams<Real>>(params, "completion_point");
      if (!is_valid(m)) fail(ErrorKind::InvalidParams, "Meixner-Pollaczek needs lambda > 0 and 0 < phi < pi");
      return m.lambda * cos(m.phi) / sin(m.phi);
    }
    case ShiftKind::PjAMinus: {
      const auto& pj = detail::expect_params<PjParams<Real>>(params, "completion_point");
      detail::require_nonzero(Real(pj.a + n), "a + n vanishes", config);
      return pj.b / (pj.a + n);
    }
    case ShiftKind::PjAPlus: {
      const auto& pj = detail::expect_params<PjParams<Real>>(params, "completion_point");
      detail::require_nonzero(Real(pj.a + n + 1), "a + n + 1 vanishes", config);
      return pj.b / (pj.a + n + 1);
    }
    case ShiftKind::ChAShift:
    case ShiftKind::ChBShift: {
      const auto& c = detail::expect_params<ChParams<Real>>(params, "completion_point");
      const ShiftVariant v = kind == ShiftKind::ChAShift ? ShiftVariant::AShift : ShiftVariant::BShift;
      return ch_uvw(n, c, v, config).completion_point;
    }
  }
  fail(ErrorKind::InvalidParams, "completion_point: unknown shift");
}

/// Expands the Christoffel determinant along its polynomial row,
///   det = W p_n(x) - V p_{n+1}(x) + U p_{n+2}(x),
/// and divides by U. Coefficients stay complex so a broken conjugate
/// structure shows up instead of being discarded.
template <class Real>
Polynomial<Complex<Real>> christoffel_expansion(const ChristoffelEntries<Real>& entries, int n,
                                                const ChParams<Real>& params, const PrecisionConfig& config) {
  using C = Complex<Real>;
  const ChUVW<Real> uvw = ch_uvw(entries, n, params, config);
  const auto seq = ch_sequence(n + 2, params, config);
  std::vector<C> det(n + 3, C(0));
  const std::array<C, 3> weights = {uvw.W / uvw.U, -(uvw.V / uvw.U), C(1)};
  for (int k = 0; k < 3; ++k)
    for (int j = 0; j <= seq[n + k].degree(); ++j) det[j] += weights[k] * seq[n + k][j];
  return Polynomial<C>(std::move(det));
}

/// Compares the determinant route with sigma(x) times the shifted polynomial
/// built independently by the recurrence. Imaginary parts left after the
/// division count against the residual.
template <class Real>
IdentityResidualReport<Real> christoffel_check(const ChristoffelEntries<Real>& entries, int n,
                                               const ChParams<Real>& params, const PrecisionConfig& config) {
  using C = Complex<Real>;
  const Polynomial<C> from_det = christoffel_expansion(entries, n, params, config);

  const Polynomial<Real> direct = detail::sigma_factor(params, entries.variant) *
                                  ch_polynomial(n, detail::shifted(params, entries.variant), config);
  std::vector<C> direct_c;
  for (const auto& c : direct.coeffs()) direct_c.emplace_back(c);
  const Polynomial<C> direct_poly{std::move(direct_c)};

  Real scale = std::max(from_det.max_abs_coeff(), direct.max_abs_coeff());
  if (scale == 0) scale = 1;

  IdentityResidualReport<Real> report;
  report.id = entries.variant == ShiftVariant::AShift ? IdentityId::CH_1 : IdentityId::CH_22;
  report.check = "christoffel";
  report.n = n;
  report.params = params;
  report.coeff_residual = to_double(Real(max_coeff_difference(from_det, direct_poly) / scale));

  Real worst(0);
  for (const auto& x : sample_points<Real>(16)) {
    using std::abs;
    Real weight(0), power(1);
    for (int k = 0; k <= n + 2; ++k) {
      weight += power;
      power *= abs(x);
    }
    const C diff = from_det(C(x)) - C(direct(x));
    worst = std::max(worst, Real(abs(diff) / (scale * weight)));
  }
  report.max_point_residual = to_double(worst);
  report.passed = report.max_point_residual <= config.residual_tol && report.coeff_residual <= config.residual_tol;
  return report;
}

template <class Real>
IdentityResidualReport<Real> christoffel_check(int n, const ChParams<Real>& params, ShiftVariant variant,
                                               const PrecisionConfig& config) {
  return christoffel_check(christoffel_entries(n, params, variant, config), n, params, config);
}

}  // namespace mixrec
