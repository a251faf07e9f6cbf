#pragma once

#include <catch_amalgamated.hpp>

#include "mixrec/precision.hpp"

namespace test_support {

inline const mixrec::PrecisionConfig& config() {
  static const mixrec::PrecisionConfig c;
  return c;
}

// Working precision for every test binary.
inline const mixrec::ScopedPrecision precision_guard{config()};

inline double rel_diff(const mixrec::real& a, const mixrec::real& b) {
  using std::abs;
  const mixrec::real scale = std::max(mixrec::real(1), std::max(abs(a), abs(b)));
  return mixrec::to_double(mixrec::real(abs(a - b) / scale));
}

}  // namespace test_support
