#include "support.hpp"

#include "mixrec/complex.hpp"
#include "mixrec/families.hpp"
#include "mixrec/polynomial.hpp"

using namespace mixrec;
using test_support::rel_diff;
using P = Polynomial<real>;
using C = Complex<real>;

TEST_CASE("polynomial products and sums", "[polynomial]") {
  const P a = P::linear(real(1));   // x - 1
  const P b = P::linear(real(-2));  // x + 2
  const P prod = a * b;
  REQUIRE(prod.degree() == 2);
  CHECK(prod[0] == -2);
  CHECK(prod[1] == 1);
  CHECK(prod[2] == 1);
  CHECK(prod[7] == 0);

  const P diff = prod - prod;
  CHECK(diff.is_zero());
  CHECK((prod + P::constant(real(2))).degree() == 2);
  CHECK((-a)[0] == 1);
  CHECK((a * real(3))[1] == 3);
}

TEST_CASE("trailing zeros are trimmed", "[polynomial]") {
  const P p{real(1), real(2), real(0), real(0)};
  CHECK(p.degree() == 1);
  const P q = P{real(0), real(1), real(1)} - P{real(0), real(0), real(1)};
  CHECK(q.degree() == 1);
}

TEST_CASE("evaluation and derivative", "[polynomial]") {
  const P p{real(-6), real(11), real(-6), real(1)};  // (x-1)(x-2)(x-3)
  CHECK(p(real(2)) == 0);
  CHECK(p(real(4)) == 6);
  auto [v, d] = p.eval_with_derivative(real(4));
  CHECK(v == 6);
  CHECK(d == 11);  // 3x^2 - 12x + 11 at 4
  CHECK(p.derivative()(real(4)) == 11);
  CHECK(p.max_abs_coeff() == 11);

  const C z = poly_eval(p, C(real(1), real(1)));
  // (i)(i-1)(i-2) = (-1 - i)(i - 2) = 3 + i
  CHECK(z.re == 3);
  CHECK(z.im == 1);
}

TEST_CASE("linear combinations", "[polynomial]") {
  const P x = P::x();
  const P one = P::one();
  const P combo = poly_linear_combine<real>({{P::constant(real(2)), x * x}, {P::constant(real(-3)), one}});
  CHECK(combo[2] == 2);
  CHECK(combo[0] == -3);
  CHECK(max_coeff_difference(combo, P{real(-3), real(0), real(2)}) == 0);
}

TEST_CASE("complex arithmetic", "[complex]") {
  const C i = C::i();
  CHECK(i * i == C(real(-1)));
  CHECK(i_power<real>(0) == C(real(1)));
  CHECK(i_power<real>(5) == i);
  CHECK(i_power<real>(6) == C(real(-1)));
  CHECK(i_power<real>(-1) == -i);
  const C z(real(3), real(4));
  CHECK(abs(z) == 5);
  CHECK(norm(z) == 25);
  CHECK(conj(z).im == -4);
  const C w = z / z;
  CHECK(rel_diff(w.re, real(1)) < 1e-45);
  CHECK(abs(w.im) < 1e-45);
  const C cube = pow(z, 3);  // (3+4i)^3 = -117 + 44i
  CHECK(cube.re == -117);
  CHECK(cube.im == 44);
}

TEST_CASE("pochhammer symbol", "[pochhammer]") {
  CHECK(pochhammer(real(5), 0) == 1);
  CHECK(pochhammer(real(3), 4) == 360);
  CHECK(pochhammer(real(-2), 3) == 0);
  CHECK(pochhammer(real(-3), 2) == 6);
  CHECK_THROWS_AS(pochhammer(real(1), -1), Error);

  // (a)_{m+k} = (a)_m (a+m)_k
  for (const real a : {real("0.37"), real("-4.25"), real("2.5")}) {
    for (int m = 0; m < 5; ++m)
      for (int k = 0; k < 5; ++k)
        CHECK(rel_diff(pochhammer(a, m + k), pochhammer(a, m) * pochhammer(real(a + m), k)) < 1e-45);
  }

  const C z = pochhammer(C(real(1), real(1)), 2);  // (1+i)(2+i) = 1 + 3i
  CHECK(z.re == 1);
  CHECK(z.im == 3);
}
