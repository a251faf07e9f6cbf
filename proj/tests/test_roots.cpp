#include "support.hpp"

#include "mixrec/families.hpp"
#include "mixrec/roots.hpp"

using namespace mixrec;
using test_support::config;
using test_support::rel_diff;
using P = Polynomial<real>;

TEST_CASE("integer roots", "[roots]") {
  const P p = P::linear(real(1)) * P::linear(real(-2)) * P::linear(real(3)) * P::linear(real(10));
  const auto z = find_real_zeros(p, config());
  REQUIRE(z.all_real);
  REQUIRE(z.size() == 4);
  CHECK(rel_diff(z[0], real(-2)) < 1e-40);
  CHECK(rel_diff(z[1], real(1)) < 1e-40);
  CHECK(rel_diff(z[2], real(3)) < 1e-40);
  CHECK(rel_diff(z[3], real(10)) < 1e-40);
  for (const auto& r : z.residuals) CHECK(r < 1e-35);
}

TEST_CASE("degree one", "[roots]") {
  const auto z = find_real_zeros(P{real(3), real(2)}, config());
  REQUIRE(z.size() == 1);
  CHECK(rel_diff(z[0], real("-1.5")) < 1e-45);
}

TEST_CASE("non-real roots are reported as leakage", "[roots]") {
  const P p = P{real(1), real(0), real(1)} * P::linear(real(2));
  const auto z = find_real_zeros(p, config());
  CHECK_FALSE(z.all_real);
  CHECK(z.complex_leakage == 2);
  REQUIRE(z.size() == 1);
  CHECK(rel_diff(z[0], real(2)) < 1e-40);
}

TEST_CASE("a double root cannot be certified", "[roots][errors]") {
  const P p = P::linear(real(1)) * P::linear(real(1)) * P::linear(real(4));
  try {
    find_real_zeros(p, config());
    FAIL("expected ConvergenceFailure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConvergenceFailure);
  }
}

TEST_CASE("degree zero is rejected", "[roots][errors]") {
  CHECK_THROWS_AS(find_real_zeros(P::one(), config()), Error);
}

TEST_CASE("high degree orthogonal polynomial zeros", "[roots]") {
  // Zeros of the degree-15 member are real and simple; p(z) is small relative
  // to the coefficients.
  const auto p = ch_polynomial(15, ChParams<real>{real("0.7"), real("1.9"), real("4.2"), real("-3.1")}, config());
  const auto z = find_real_zeros(p, config());
  CHECK(z.all_real);
  CHECK(z.size() == 15);
  for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i - 1] < z[i]);
  for (const auto& r : z.residuals) CHECK(r < 1e-30 * p.max_abs_coeff());
}

TEST_CASE("worked example zeros to three decimals", "[roots]") {
  const auto p = ch_polynomial(5, ChParams<real>{real(2), real(1), real(4), real(3)}, config());
  const auto z = find_real_zeros(p, config());
  REQUIRE(z.size() == 5);
  const std::vector<long long> printed = {-4445, -2957, -1746, -601, 750};
  for (std::size_t i = 0; i < 5; ++i) CHECK(std::llround(to_double(z[i]) * 1000) == printed[i]);
}

TEST_CASE("minimum zero gap", "[roots]") {
  const std::vector<real> a = {real(0), real(3)};
  const std::vector<real> b = {real("1.25"), real("2.5")};
  CHECK(min_zero_gap(a, b) == real("0.5"));
  CHECK_THROWS_AS(min_zero_gap(a, std::vector<real>{}), Error);
}

TEST_CASE("odd cubic", "[roots]") {
  // x^3 - 3x: zeros at 0 and +-sqrt(3)
  const P p{real(0), real(-3), real(0), real(1)};
  const auto z = find_real_zeros(p, config());
  REQUIRE(z.all_real);
  CHECK(rel_diff(z[2], sqrt(real(3))) < 1e-40);
}
