#pragma once

#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include <boost/multiprecision/mpfr.hpp>

#include "mixrec/errors.hpp"

namespace mixrec {

/// Default working type: MPFR-backed float whose precision is chosen at run
/// time. Expression templates are off so `auto` is always a value.
using real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

struct PrecisionConfig {
  int working_digits = 50;      // significant decimal digits
  double realness_tol = 1e-25;  // relative bound on discarded imaginary parts
  double residual_tol = 1e-9;   // relative bound for identity and zero residuals
  double sep_tol = 1e-8;        // zero separation, scaled by (1 + span) per zero set
  int max_iterations = 100;     // root polishing sweeps

  void validate() const {
    if (working_digits < 30) fail(ErrorKind::InvalidParams, "working_digits must be >= 30");
    auto in_range = [](double t) { return t > 0.0 && t <= 1e-6; };
    if (!in_range(realness_tol)) fail(ErrorKind::InvalidParams, "realness_tol must lie in (0, 1e-6]");
    if (!in_range(residual_tol)) fail(ErrorKind::InvalidParams, "residual_tol must lie in (0, 1e-6]");
    if (!(sep_tol > 0.0) || !std::isfinite(sep_tol)) fail(ErrorKind::InvalidParams, "sep_tol must be positive");
    if (max_iterations < 1) fail(ErrorKind::InvalidParams, "max_iterations must be positive");
  }
};

/// Sets the MPFR default precision for the lifetime of the object. MPFR's
/// default is process-wide in this Boost version, so install it once before
/// spawning workers.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionConfig& config) : previous_(real::default_precision()) {
    config.validate();
    real::default_precision(static_cast<unsigned>(config.working_digits));
  }
  ~ScopedPrecision() { real::default_precision(previous_); }

  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  unsigned previous_;
};

template <class Real>
Real pi() {
  using std::atan;
  return 4 * atan(Real(1));
}

template <class Real>
Real machine_epsilon() {
  return std::numeric_limits<Real>::epsilon();
}

template <class Real>
std::string format_real(const Real& value, int digits = 17) {
  std::ostringstream os;
  os.precision(digits);
  os << value;
  return os.str();
}

template <class Real>
double to_double(const Real& value) {
  return static_cast<double>(value);
}

}  // namespace mixrec
