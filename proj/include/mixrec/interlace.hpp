#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mixrec/errors.hpp"
#include "mixrec/families.hpp"
#include "mixrec/identities.hpp"
#include "mixrec/precision.hpp"
#include "mixrec/roots.hpp"

namespace mixrec {

enum class InterlaceKind { Adjacent, SameDegree, Completed };

/// Where the completion point sits relative to the zeros of p_n:
/// below all of them (I1), strictly between two (I2) or above all (I3).
enum class CompletionCase { I1, I2, I3 };

inline const char* to_string(InterlaceKind k) {
  switch (k) {
    case InterlaceKind::Adjacent: return "adjacent";
    case InterlaceKind::SameDegree: return "same_degree";
    case InterlaceKind::Completed: return "completed";
  }
  return "?";
}

inline const char* to_string(CompletionCase c) {
  switch (c) {
    case CompletionCase::I1: return "i1";
    case CompletionCase::I2: return "i2";
    case CompletionCase::I3: return "i3";
  }
  return "?";
}

struct Violation {
  int index = 0;
  std::string description;
};

template <class Real>
struct InterlacingCertificate {
  InterlaceKind kind = InterlaceKind::Adjacent;
  std::optional<CompletionCase> completion_case;
  std::optional<int> i_star;  // for I2: first[i*-1] < A < first[i*]
  bool ok = false;
  std::vector<Violation> violations;
  std::optional<Real> A;
  Real gap_margin{0};  // smallest slack over the strict inequalities
  Real sep_tol{0};
  // Witnesses: for adjacent the n-point and (n+1)-point sets; for completed
  // the zeros of p_n and of g_n (A not merged in).
  std::vector<Real> first;
  std::vector<Real> second;
};

namespace detail {

/// Checks chain[0] < chain[1] < ... with slack > tol; records each failure.
template <class Real>
void check_chain(const std::vector<std::pair<Real, std::string>>& chain, const Real& tol,
                 InterlacingCertificate<Real>& cert) {
  bool first = true;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const Real slack = chain[i + 1].first - chain[i].first;
    if (first || slack < cert.gap_margin) cert.gap_margin = slack;
    first = false;
    if (!(slack > tol))
      cert.violations.push_back({static_cast<int>(i), chain[i].second + " < " + chain[i + 1].second + " fails"});
  }
  cert.ok = cert.violations.empty();
}

inline std::string label(std::string_view name, std::size_t i) {
  return std::string(name) + "[" + std::to_string(i) + "]";
}

}  // namespace detail

/// big[0] < small[0] < big[1] < ... < small[n-1] < big[n].
template <class Real>
InterlacingCertificate<Real> interlaces_adjacent(const std::vector<Real>& small, const std::vector<Real>& big,
                                                 const Real& sep_tol) {
  if (big.size() != small.size() + 1) fail(ErrorKind::SizeMismatch, "interlaces_adjacent: sizes must differ by one");
  InterlacingCertificate<Real> cert;
  cert.kind = InterlaceKind::Adjacent;
  cert.sep_tol = sep_tol;
  cert.first = small;
  cert.second = big;
  std::vector<std::pair<Real, std::string>> chain;
  for (std::size_t i = 0; i < small.size(); ++i) {
    chain.emplace_back(big[i], detail::label("big", i));
    chain.emplace_back(small[i], detail::label("small", i));
  }
  chain.emplace_back(big.back(), detail::label("big", small.size()));
  detail::check_chain(chain, sep_tol, cert);
  return cert;
}

template <class Real>
InterlacingCertificate<Real> interlaces_adjacent(const ZeroSet<Real>& small, const ZeroSet<Real>& big) {
  return interlaces_adjacent(small.zeros, big.zeros, std::max(small.sep_tol, big.sep_tol));
}

/// Same-degree interlacing in either order.
template <class Real>
InterlacingCertificate<Real> interlaces_same_degree(const std::vector<Real>& a, const std::vector<Real>& b,
                                                    const Real& sep_tol) {
  if (a.size() != b.size() || a.empty()) fail(ErrorKind::SizeMismatch, "interlaces_same_degree: sizes must match");
  auto attempt = [&](const std::vector<Real>& lead, const std::vector<Real>& follow, std::string_view ln,
                     std::string_view fn) {
    InterlacingCertificate<Real> cert;
    cert.kind = InterlaceKind::SameDegree;
    cert.sep_tol = sep_tol;
    cert.first = a;
    cert.second = b;
    std::vector<std::pair<Real, std::string>> chain;
    for (std::size_t i = 0; i < lead.size(); ++i) {
      chain.emplace_back(lead[i], detail::label(ln, i));
      chain.emplace_back(follow[i], detail::label(fn, i));
    }
    detail::check_chain(chain, sep_tol, cert);
    return cert;
  };
  auto ab = attempt(a, b, "a", "b");
  if (ab.ok) return ab;
  auto ba = attempt(b, a, "b", "a");
  return ba.ok || ba.violations.size() < ab.violations.size() ? ba : ab;
}

/// Adjoins A to the zeros of g_n and checks that the n+1 points interlace
/// the zeros of p_n, then records which of the three arrangements occurs.
template <class Real>
InterlacingCertificate<Real> completed_interlacing_classify(const std::vector<Real>& p_zeros,
                                                            const std::vector<Real>& g_zeros, const Real& A,
                                                            const Real& sep_tol) {
  using std::abs;
  if (p_zeros.size() != g_zeros.size() || p_zeros.empty())
    fail(ErrorKind::SizeMismatch, "completed_interlacing_classify: sizes must match");
  for (const auto& x : p_zeros)
    if (abs(x - A) <= sep_tol) fail(ErrorKind::SharedZeroSuspected, "A coincides with a zero of p_n");
  for (const auto& y : g_zeros)
    if (abs(y - A) <= sep_tol) fail(ErrorKind::MergeCollision, "A coincides with a zero of g_n");

  std::vector<Real> merged = g_zeros;
  merged.push_back(A);
  std::sort(merged.begin(), merged.end());

  InterlacingCertificate<Real> cert = interlaces_adjacent(p_zeros, merged, sep_tol);
  cert.kind = InterlaceKind::Completed;
  cert.A = A;
  cert.first = p_zeros;
  cert.second = g_zeros;
  if (!cert.ok) return cert;

  const std::size_t n = p_zeros.size();
  if (A < p_zeros.front()) {
    cert.completion_case = CompletionCase::I1;
  } else if (A > p_zeros.back()) {
    cert.completion_case = CompletionCase::I3;
  } else {
    cert.completion_case = CompletionCase::I2;
    for (std::size_t i = 1; i < n; ++i)
      if (p_zeros[i - 1] < A && A < p_zeros[i]) cert.i_star = static_cast<int>(i);
  }
  return cert;
}

template <class Real>
InterlacingCertificate<Real> completed_interlacing_classify(const ZeroSet<Real>& p_zeros, const ZeroSet<Real>& g_zeros,
                                                            const Real& A) {
  return completed_interlacing_classify(p_zeros.zeros, g_zeros.zeros, A, std::max(p_zeros.sep_tol, g_zeros.sep_tol));
}

// ---------------------------------------------------------------------------
// Proposition-level drivers

enum class PropositionId {
  MpCompleted,    // P_n^(l) vs (x - l cot phi) P_n^(l+1)
  MpAdjacent,     // P_n^(l+1) vs P_{n+1}^(l)
  MpSymmetric,    // P_n^(l)(x; pi/2) vs P_{n+1}^(l+1)(x; pi/2)
  PjLower,        // P_n(a) vs (x - b/(a+n)) P_n(a-1), a < -n
  PjUpper,        // P_n(a) vs (x - b/(a+n+1)) P_n(a+1), a+1 < -n
  PjAdjacent,     // P_n(a+1) vs P_{n+1}(a), a+1 < -n
  ChAShift,       // p_n vs H(x) p_n(p+1)
  ChBShift,       // p_n vs G(x) p_n(r+1)
  ChSymmetricA,   // q = s = 0, n even: p_n vs x p_n(p+1)
  ChSymmetricB,   // q = s = 0, n even: p_n vs x p_n(r+1)
};

inline constexpr std::array<PropositionId, 10> kAllPropositions = {
    PropositionId::MpCompleted, PropositionId::MpAdjacent, PropositionId::MpSymmetric, PropositionId::PjLower,
    PropositionId::PjUpper,     PropositionId::PjAdjacent, PropositionId::ChAShift,    PropositionId::ChBShift,
    PropositionId::ChSymmetricA, PropositionId::ChSymmetricB};

inline const char* to_string(PropositionId id) {
  switch (id) {
    case PropositionId::MpCompleted: return "mp-i";
    case PropositionId::MpAdjacent: return "mp-ii";
    case PropositionId::MpSymmetric: return "mp-sym";
    case PropositionId::PjLower: return "pj-i";
    case PropositionId::PjUpper: return "pj-ii";
    case PropositionId::PjAdjacent: return "pj-iii";
    case PropositionId::ChAShift: return "conthahn1-i";
    case PropositionId::ChBShift: return "conthahn1-ii";
    case PropositionId::ChSymmetricA: return "conthahn-i";
    case PropositionId::ChSymmetricB: return "conthahn-ii";
  }
  return "?";
}

inline std::optional<PropositionId> proposition_from_string(std::string_view name) {
  for (PropositionId id : kAllPropositions)
    if (name == to_string(id)) return id;
  if (name == "ch-i") return PropositionId::ChAShift;
  if (name == "ch-ii") return PropositionId::ChBShift;
  if (name == "ch-sym-i") return PropositionId::ChSymmetricA;
  if (name == "ch-sym-ii") return PropositionId::ChSymmetricB;
  return std::nullopt;
}

inline Family family_of(PropositionId id) {
  switch (id) {
    case PropositionId::MpCompleted:
    case PropositionId::MpAdjacent:
    case PropositionId::MpSymmetric: return Family::MP;
    case PropositionId::PjLower:
    case PropositionId::PjUpper:
    case PropositionId::PjAdjacent: return Family::PJ;
    default: return Family::CH;
  }
}

inline bool is_completed(PropositionId id) {
  return id != PropositionId::MpAdjacent && id != PropositionId::MpSymmetric && id != PropositionId::PjAdjacent;
}

namespace detail {

template <class Real>
InterlacingCertificate<Real> non_real_certificate(InterlaceKind kind, const char* which) {
  InterlacingCertificate<Real> cert;
  cert.kind = kind;
  cert.ok = false;
  cert.violations.push_back({-1, std::string(which) + " has non-real zeros"});
  return cert;
}

template <class Real>
InterlacingCertificate<Real> certify_completed(const Polynomial<Real>& p, const Polynomial<Real>& g, const Real& A,
                                               const PrecisionConfig& config) {
  using std::abs;
  const ZeroSet<Real> pz = find_real_zeros(p, config);
  const ZeroSet<Real> gz = find_real_zeros(g, config);
  if (!pz.all_real) return non_real_certificate<Real>(InterlaceKind::Completed, "p_n");
  if (!gz.all_real) return non_real_certificate<Real>(InterlaceKind::Completed, "g_n");
  const Real tol = std::max(pz.sep_tol, gz.sep_tol);
  if (min_zero_gap(pz, gz) <= tol) fail(ErrorKind::SharedZeroSuspected, "p_n and g_n share a zero");

  Real weight(0), power(1);
  for (int k = 0; k <= p.degree(); ++k) {
    weight += abs(p[k]) * power;
    power *= abs(A);
  }
  if (abs(p(A)) <= config.residual_tol * weight) fail(ErrorKind::SharedZeroSuspected, "p_n(A) vanishes");
  return completed_interlacing_classify(pz, gz, A);
}

template <class Real>
InterlacingCertificate<Real> certify_adjacent(const Polynomial<Real>& small, const Polynomial<Real>& big,
                                              const PrecisionConfig& config) {
  const ZeroSet<Real> sz = find_real_zeros(small, config);
  const ZeroSet<Real> bz = find_real_zeros(big, config);
  if (!sz.all_real) return non_real_certificate<Real>(InterlaceKind::Adjacent, "degree-n polynomial");
  if (!bz.all_real) return non_real_certificate<Real>(InterlaceKind::Adjacent, "degree-(n+1) polynomial");
  if (min_zero_gap(sz, bz) <= std::max(sz.sep_tol, bz.sep_tol))
    fail(ErrorKind::SharedZeroSuspected, "the two polynomials share a zero");
  return interlaces_adjacent(sz, bz);
}

}  // namespace detail

/// Builds the two polynomials a proposition talks about, computes their
/// zeros (and the completion point where there is one) and certifies the
/// claimed arrangement. Parameter conditions are checked exactly.
template <class Real>
InterlacingCertificate<Real> verify_proposition(PropositionId id, int n, const FamilyParams<Real>& params,
                                                const PrecisionConfig& config) {
  if (n < 1) fail(ErrorKind::ConstraintViolation, "propositions need n >= 1");
  if (!is_valid(params)) fail(ErrorKind::InvalidParams, "verify_proposition: invalid parameters");
  switch (id) {
    case PropositionId::MpCompleted: {
      const auto& m = detail::expect_params<MpParams<Real>>(params, to_string(id));
      const Real A = completion_point(ShiftKind::MpLambdaUp, n, params, config);
      return detail::certify_completed(mp_polynomial(n, m, config),
                                       mp_polynomial(n, MpParams<Real>{m.lambda + 1, m.phi}, config), A, config);
    }
    case PropositionId::MpAdjacent: {
      const auto& m = detail::expect_params<MpParams<Real>>(params, to_string(id));
      return detail::certify_adjacent(mp_polynomial(n, MpParams<Real>{m.lambda + 1, m.phi}, config),
                                      mp_polynomial(n + 1, m, config), config);
    }
    case PropositionId::MpSymmetric: {
      using std::abs;
      const auto& m = detail::expect_params<MpParams<Real>>(params, to_string(id));
      const Real half_pi = pi<Real>() / 2;
      if (abs(m.phi - half_pi) > config.realness_tol) fail(ErrorKind::ConstraintViolation, "mp-sym needs phi = pi/2");
      return detail::certify_adjacent(mp_polynomial(n, MpParams<Real>{m.lambda, half_pi}, config),
                                      mp_polynomial(n + 1, MpParams<Real>{m.lambda + 1, half_pi}, config), config);
    }
    case PropositionId::PjLower: {
      const auto& pj = detail::expect_params<PjParams<Real>>(params, to_string(id));
      if (!(pj.a < -n)) fail(ErrorKind::ConstraintViolation, "pj-i needs a < -n");
      const Real A = completion_point(ShiftKind::PjAMinus, n, params, config);
      return detail::certify_completed(pj_polynomial(n, pj, config),
                                       pj_polynomial(n, PjParams<Real>{pj.a - 1, pj.b}, config), A, config);
    }
    case PropositionId::PjUpper: {
      const auto& pj = detail::expect_params<PjParams<Real>>(params, to_string(id));
      if (!(pj.a + 1 < -n)) fail(ErrorKind::ConstraintViolation, "pj-ii needs a + 1 < -n");
      const Real A = completion_point(ShiftKind::PjAPlus, n, params, config);
      return detail::certify_completed(pj_polynomial(n, pj, config),
                                       pj_polynomial(n, PjParams<Real>{pj.a + 1, pj.b}, config), A, config);
    }
    case PropositionId::PjAdjacent: {
      const auto& pj = detail::expect_params<PjParams<Real>>(params, to_string(id));
      if (!(pj.a + 1 < -n)) fail(ErrorKind::ConstraintViolation, "pj-iii needs a + 1 < -n");
      return detail::certify_adjacent(pj_polynomial(n, PjParams<Real>{pj.a + 1, pj.b}, config),
                                      pj_polynomial(n + 1, pj, config), config);
    }
    case PropositionId::ChAShift:
    case PropositionId::ChBShift: {
      const auto& c = detail::expect_params<ChParams<Real>>(params, to_string(id));
      const bool a_shift = id == PropositionId::ChAShift;
      const Real A = completion_point(a_shift ? ShiftKind::ChAShift : ShiftKind::ChBShift, n, params, config);
      return detail::certify_completed(
          ch_polynomial(n, c, config),
          ch_polynomial(n, detail::shifted(c, a_shift ? ShiftVariant::AShift : ShiftVariant::BShift), config), A,
          config);
    }
    case PropositionId::ChSymmetricA:
    case PropositionId::ChSymmetricB: {
      const auto& c = detail::expect_params<ChParams<Real>>(params, to_string(id));
      if (c.q != 0 || c.s != 0) fail(ErrorKind::ConstraintViolation, "needs q = s = 0");
      if (n % 2 != 0) fail(ErrorKind::ConstraintViolation, "needs even n");
      const bool a_shift = id == PropositionId::ChSymmetricA;
      return detail::certify_completed(
          ch_polynomial(n, c, config),
          ch_polynomial(n, detail::shifted(c, a_shift ? ShiftVariant::AShift : ShiftVariant::BShift), config),
          Real(0), config);
    }
  }
  fail(ErrorKind::InvalidParams, "verify_proposition: unknown proposition");
}

}  // namespace mixrec
