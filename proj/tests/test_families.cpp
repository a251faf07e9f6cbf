#include "support.hpp"

#include "mixrec/cli.hpp"
#include "mixrec/families.hpp"

using namespace mixrec;
using test_support::config;
using test_support::rel_diff;

namespace {

// Monic coefficients, constant first, from Gram-Schmidt on moments of each
// weight function computed by quadrature at 40 digits.
void check_coeffs(const Polynomial<real>& p, const std::vector<const char*>& expected) {
  REQUIRE(p.degree() + 1 == static_cast<int>(expected.size()));
  for (std::size_t k = 0; k < expected.size(); ++k) {
    INFO("coefficient " << k);
    CHECK(rel_diff(p[static_cast<int>(k)], real(expected[k])) < 1e-20);
  }
}

}  // namespace

TEST_CASE("coefficients agree with moment-based construction", "[families][oracle]") {
  check_coeffs(mp_polynomial(3, MpParams<real>{real("1.5"), real(1)}, config()),
               {"-1.62634228925556904945", "3.43424391156087871914", "4.815694619507480272548", "1"});
  check_coeffs(pj_polynomial(3, PjParams<real>{real("-6.5"), real("1.5")}, config()),
               {"0.08333333333333333333333", "0.1071428571428571428571", "-1.285714285714285714286", "1"});
  check_coeffs(ch_polynomial(3, ChParams<real>{real(2), real(1), real(4), real(3)}, config()),
               {"1.607142857142857142857", "7", "5.25", "1"});
  check_coeffs(ch_polynomial(4, ChParams<real>{real("1.5"), real(0), real(2), real(0)}, config()),
               {"0.5625", "0", "-2.75", "0", "1"});
}

TEST_CASE("degree one closed forms", "[families]") {
  using std::cos;
  using std::sin;
  const real lam("0.8"), phi("2.1");
  const auto mp1 = mp_polynomial(1, MpParams<real>{lam, phi}, config());
  CHECK(rel_diff(mp1[0], lam * cos(phi) / sin(phi)) < 1e-40);
  CHECK(mp1[1] == 1);

  const real a("-3.7"), b("2.2");
  const auto pj1 = pj_polynomial(1, PjParams<real>{a, b}, config());
  CHECK(rel_diff(pj1[0], b / (a + 1)) < 1e-40);

  const ChParams<real> c{real("1.1"), real("-0.4"), real("2.9"), real("1.3")};
  const auto ch1 = ch_polynomial(1, c, config());
  CHECK(rel_diff(ch1[0], c.q - c.p * (c.q - c.s) / (c.p + c.r)) < 1e-40);
}

TEST_CASE("degree zero is the constant one", "[families]") {
  const auto one = Polynomial<real>::one();
  CHECK(max_coeff_difference(mp_polynomial(0, MpParams<real>{real(1), real(1)}, config()), one) == 0);
  CHECK(max_coeff_difference(pj_polynomial(0, PjParams<real>{real(-3), real(1)}, config()), one) == 0);
  CHECK(max_coeff_difference(ch_polynomial(0, ChParams<real>{real(1), real(1), real(1), real(1)}, config()), one) == 0);
}

TEST_CASE("hypergeometric and recurrence constructions agree", "[families]") {
  cli::CellRng rng(11, "3f2");
  for (int draw = 0; draw < 20; ++draw) {
    const ChParams<real> c = cli::draw_ch(rng, draw % 4 == 0);
    for (int n = 0; n <= 8; ++n) {
      const auto rec = ch_polynomial(n, c, config());
      const auto hyp = ch_polynomial_hypergeometric(n, c, config());
      INFO("n=" << n << " p=" << c.p << " q=" << c.q << " r=" << c.r << " s=" << c.s);
      CHECK(to_double(real(max_coeff_difference(rec, hyp) / std::max(real(1), rec.max_abs_coeff()))) < 1e-35);
    }
  }
}

TEST_CASE("sequence matches single-degree construction", "[families]") {
  const ChParams<real> c{real("0.9"), real("0.3"), real("1.7"), real("-2.1")};
  const auto seq = ch_sequence(6, c, config());
  REQUIRE(seq.size() == 7);
  for (int n = 0; n <= 6; ++n) CHECK(max_coeff_difference(seq[n], ch_polynomial(n, c, config())) == 0);
}

TEST_CASE("parity of symmetric cases", "[families]") {
  for (int n = 1; n <= 9; ++n) {
    const auto mp = mp_polynomial(n, MpParams<real>{real("1.3"), pi<real>() / 2}, config());
    const auto ch = ch_polynomial(n, ChParams<real>{real("1.3"), real(0), real("2.6"), real(0)}, config());
    for (int k = n - 1; k >= 0; k -= 2) {
      using std::abs;
      CHECK(abs(mp[k]) < 1e-40 * mp.max_abs_coeff());
      CHECK(abs(ch[k]) < 1e-40 * ch.max_abs_coeff());
    }
  }
}

TEST_CASE("reversing q and s mirrors the zeros", "[families]") {
  // p_n(-x; p, q, r, s) = (-1)^n p_n(x; p, -q, r, -s)
  const ChParams<real> c{real("1.4"), real("0.6"), real("2.2"), real("-1.5")};
  const ChParams<real> m{c.p, -c.q, c.r, -c.s};
  for (int n = 1; n <= 7; ++n) {
    const auto a = ch_polynomial(n, c, config());
    const auto b = ch_polynomial(n, m, config());
    for (int k = 0; k <= n; ++k) {
      const real sign = (n - k) % 2 == 0 ? real(1) : real(-1);
      CHECK(rel_diff(a[k], sign * b[k]) < 1e-40);
    }
  }
}

TEST_CASE("invalid parameters are rejected", "[families][errors]") {
  auto kind_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::ConstraintViolation;  // sentinel: no throw
  };
  CHECK(kind_of([] { mp_polynomial(2, MpParams<real>{real(0), real(1)}, config()); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { mp_polynomial(2, MpParams<real>{real(1), pi<real>()}, config()); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { mp_polynomial(-1, MpParams<real>{real(1), real(1)}, config()); }) == ErrorKind::InvalidParams);
  CHECK(kind_of([] { ch_polynomial(2, ChParams<real>{real(0), real(0), real(1), real(0)}, config()); }) ==
        ErrorKind::InvalidParams);
  // 2a + n + 1 = 0 makes the leading coefficient vanish.
  CHECK(kind_of([] { pj_polynomial(3, PjParams<real>{real(-2), real(1)}, config()); }) == ErrorKind::SingularParams);
}

TEST_CASE("family dispatch", "[families]") {
  const FamilyParams<real> params = PjParams<real>{real("-5.5"), real("0.5")};
  CHECK(family_of(params) == Family::PJ);
  CHECK(max_coeff_difference(family_polynomial(4, params, config()),
                             pj_polynomial(4, std::get<PjParams<real>>(params), config())) == 0);
}
