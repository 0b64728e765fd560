#include "li2lab/constants.hpp"
#include "li2lab/gamma.hpp"
#include "oracles.hpp"
#include "test_common.hpp"

using namespace li2lab;
using namespace li2lab::testutil;

TEST_CASE("constants against independent oracles") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  // pi: Machin-like/AGM cross check (30-digit reference from the oracle)
  check_close(const_value(ConstantTag::pi, ctx), oracle::pi_agm(), -60);
  CHECK(const_value(ConstantTag::pi, PrecisionContext(30)).to_decimal(29).substr(0, 31) ==
        "3.14159265358979323846264338328");

  // zeta2 = pi^2/6 definitional consistency
  Real p = const_value(ConstantTag::pi, ctx);
  check_close(const_value(ConstantTag::zeta2, ctx), p * p / 6L, -60);

  // catalan via the alternating-series oracle with Hurwitz acceleration
  check_close(const_value(ConstantTag::catalan, ctx), oracle::catalan_series(), -60);
  CHECK(const_value(ConstantTag::catalan, PrecisionContext(30)).to_decimal(30).substr(0, 32) ==
        "0.915965594177219015054603514932");

  // zeta3 via the Apery central-binomial series
  check_close(const_value(ConstantTag::zeta3, ctx), oracle::zeta3_apery(), -60);

  check_close(const_value(ConstantTag::ln2, ctx), ln(Real(2)), -60);
  check_close(const_value(ConstantTag::euler_e, ctx), exp(Real(1)), -60);
}

TEST_CASE("doubling digits tightens the constant table") {
  // |computed - oracle| drops by >= 10^digits when digits double
  for (int digits : {20, 40}) {
    PrecisionContext lo(digits), hi(2 * digits);
    Real v_lo, v_hi, ref;
    {
      ScopedPrecision scope(PrecisionContext(4 * digits));
      ref = oracle::pi_agm();
    }
    v_lo = const_value(ConstantTag::pi, lo);
    v_hi = const_value(ConstantTag::pi, hi);
    ScopedPrecision scope(PrecisionContext(4 * digits));
    Real err_lo = abs(v_lo - ref);
    Real err_hi = abs(v_hi - ref);
    CHECK(err_hi < err_lo * pow10(-digits));
  }
}

TEST_CASE("complex elementary branch conventions") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  // ln(-1) = i pi (cut approached from above)
  check_close(ln(Complex(-1L)), Complex(Real(0), pi_value()), -60);
  // sqrt(-4) = 2i
  check_close(sqrt(Complex(-4L)), Complex(Real(0), Real(2)), -60);
  // arctan(1) = pi/4
  check_close(arctan(Complex(1L)), Complex(pi_value() / 4L), -60);
  // arg of the negative real axis is +pi
  check_close(arg(Complex(Real(-3), Real(0))), pi_value(), -60);

  CHECK_THROWS_AS(ln(Complex(0L)), DomainError);
  CHECK_THROWS_AS(arg(Complex(0L)), DomainError);
}

TEST_CASE("exp/ln/sqrt/conj round trips at random points") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  Rng rng(0xabcdef12);
  for (int k = 0; k < 200; ++k) {
    Complex z = rng.in_disk(3.0);
    if (abs(z) < Real(mpq_class(1, 100))) continue;
    // stay off the cuts for the conjugation identity
    if (abs(z.im()) < Real(mpq_class(1, 50))) continue;
    check_close(exp(ln(z)), z, -55);
    Complex s = sqrt(z);
    check_close(s * s, z, -55);
    check_close(conj(ln(z)), ln(conj(z)), -55);
  }
}

TEST_CASE("gamma and beta") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  check_close(gamma(Complex(5L), ctx), Complex(24L), -58);
  check_close(beta(Complex(1L), Complex(1L), ctx), Complex(1L), -58);
  check_close(beta(Complex(mpq_class(1, 2)), Complex(mpq_class(1, 2)), ctx),
              Complex(pi_value()), -58);

  CHECK_THROWS_AS(gamma(Complex(0L), ctx), PoleError);
  CHECK_THROWS_AS(gamma(Complex(-3L), ctx), PoleError);
  CHECK_THROWS_AS(beta(Complex(-1L), Complex(1L), ctx), DomainError);

  SUBCASE("recurrence Gamma(z+1) = z Gamma(z)") {
    Rng rng(0x5151);
    for (int k = 0; k < 30; ++k) {
      Complex z(rng.uniform(0.1, 10.0), rng.uniform(-3.0, 3.0));
      Complex lhs = gamma(z + Complex(1L), ctx);
      Complex rhs = z * gamma(z, ctx);
      check_small(lhs - rhs, -52);
    }
  }

  SUBCASE("beta symmetry") {
    Rng rng(0x7272);
    for (int k = 0; k < 30; ++k) {
      Complex p(rng.uniform(0.2, 5.0), rng.uniform(-2.0, 2.0));
      Complex q(rng.uniform(0.2, 5.0), rng.uniform(-2.0, 2.0));
      check_small(beta(p, q, ctx) - beta(q, p, ctx), -52);
    }
  }

  SUBCASE("reflection region") {
    // Gamma(-1/2) = -2 sqrt(pi)
    check_close(gamma(Complex(mpq_class(-1, 2)), ctx),
                Complex(sqrt(pi_value()) * -2L), -56);
  }
}

TEST_CASE("decimal rendering is reproducible") {
  PrecisionContext ctx(50);
  Real a = const_value(ConstantTag::pi, ctx);
  Real b = const_value(ConstantTag::pi, ctx);
  CHECK(a.to_decimal(50) == b.to_decimal(50));
}
