#include "li2lab/polylog.hpp"
#include "oracles.hpp"
#include "test_common.hpp"

using namespace li2lab;
using namespace li2lab::testutil;

TEST_CASE("li2 special values") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  check_close(li2(Complex(0L), ctx), Complex(0L), -60);
  check_close(li2(Complex(1L), ctx), Complex(zeta2_value()), -60);

  // li2(1/2) against the plain series oracle and the closed form
  Complex v = li2(Complex(mpq_class(1, 2)), ctx);
  check_close(v, oracle::li2_direct_series(Complex(mpq_class(1, 2))), -58);
  check_close(v.re(), zeta2_value() / 2L - ln2_value() * ln2_value() / 2L, -58);
  CHECK(v.re().to_decimal(40).substr(0, 32) == "0.5822405264650125059026563201");

  check_close(li2(Complex(-1L), ctx), Complex(-zeta2_value() / 2L), -58);
}

TEST_CASE("li2 agrees with the direct series across the transformation regions") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  Rng rng(0x11223344);
  for (int k = 0; k < 60; ++k) {
    Complex z = rng.in_disk(0.78);
    check_close(li2(z, ctx), oracle::li2_direct_series(z), -55);
  }
}

TEST_CASE("li2 cut convention: limit from above") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  Real x(mpq_class(5, 2));
  Complex on_cut = li2(Complex(x), ctx);
  // Im Li2(x + i0) = +pi ln x
  check_close(on_cut.im(), pi_value() * ln(x), -55);
  Complex above = li2(Complex(x, pow10(-30)), ctx);
  check_small(abs(on_cut - above), -25);
}

TEST_CASE("li2 functional equations at random points") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  Rng rng(0x99887766);

  SUBCASE("duplication") {
    for (int k = 0; k < 100; ++k) {
      Complex z = rng.in_disk(0.9);
      Complex lhs = li2(z, ctx) * 2L + li2(-z, ctx) * 2L;
      check_small(lhs - li2(z * z, ctx), -52);
    }
  }
  SUBCASE("euler reflection") {
    for (int k = 0; k < 100; ++k) {
      Real x = rng.uniform(0.01, 0.99);
      Complex z{x};
      Complex lhs = li2(z, ctx) + li2(Complex(1L) - z, ctx);
      Complex rhs = Complex(zeta2_value()) - Complex(ln(x) * ln(Real(1) - x));
      check_small(lhs - rhs, -52);
    }
  }
  SUBCASE("landen") {
    for (int k = 0; k < 100; ++k) {
      Real x = rng.uniform(0.01, 0.99);
      Complex lhs = li2(Complex(-x), ctx) + li2(Complex(x / (Real(1) + x)), ctx);
      Real l = ln(Real(1) + x);
      check_small(lhs + Complex(l * l / 2L), -52);
    }
  }
  SUBCASE("multiplication p = 2, 3") {
    Real two_pi = pi_value() * 2L;
    for (long p : {2L, 3L}) {
      for (int k = 0; k < 50; ++k) {
        Complex z = rng.in_disk(0.95);
        Complex sum(0L);
        for (long m = 0; m < p; ++m) {
          Real t = two_pi * Real(m) / Real(p);
          sum += li2(z * Complex(cos(t), sin(t)), ctx);
        }
        check_small(sum - li2(pow_int(z, p), ctx) / p, -52);
      }
    }
  }
  SUBCASE("conjugation off the cut") {
    for (int k = 0; k < 60; ++k) {
      Complex z = rng.in_disk(2.5);
      if (abs(z.im()) < Real(mpq_class(1, 20))) continue;
      check_small(li2(conj(z), ctx) - conj(li2(z, ctx)), -54);
    }
  }
}

TEST_CASE("cl2 basics and the pi/3 value") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  check_close(cl2(Real(0), ctx), Real(0), -60);
  check_close(cl2(pi_value(), ctx), Real(0), -55);

  Real v = cl2(pi_value() / 3L, ctx);
  check_close(v, oracle::cl2_rational_angle(1, 3), -55);
  CHECK(v.to_decimal(30).substr(0, 31) == "1.014941606409653625021202554");

  // Im Li2(e^{i theta}) consistency
  Real th = pi_value() / 5L;
  check_close(v, li2(Complex(cos(pi_value() / 3L), sin(pi_value() / 3L)), ctx).im(), -55);
  check_close(cl2(th, ctx), li2(Complex(cos(th), sin(th)), ctx).im(), -55);

  SUBCASE("periodicity and oddness") {
    Rng rng(0x31415);
    Real two_pi = pi_value() * 2L;
    for (int k = 0; k < 40; ++k) {
      Real t = rng.uniform(-8.0, 8.0);
      check_close(cl2(t + two_pi, ctx), cl2(t, ctx), -54);
      check_close(cl2(-t, ctx), -cl2(t, ctx), -54);
    }
  }
}

TEST_CASE("ti2 and chi2") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  check_close(ti2(Real(0), ctx), Real(0), -60);
  check_close(chi2(Complex(0L), ctx), Complex(0L), -60);
  check_close(ti2(Real(1), ctx), catalan_value(), -56);

  // chi2 from the Li2 difference vs the half-sum identity at 1/sqrt(3)
  Real x = Real(1) / sqrt(Real(3));
  Complex c = chi2(Complex(x), ctx);
  Complex direct = (li2(Complex(x), ctx) - li2(Complex(-x), ctx)) / 2L;
  check_small(c - direct, -58);

  // Ti2(x) = Im Li2(ix) for real x, also for |x| > 1 via the continuation
  for (double xv : {0.3, 0.99, 2.5}) {
    Real ti = ti2(Real(xv), ctx);
    check_close(ti, li2(Complex(Real(0), Real(xv)), ctx).im(), -56);
  }
}

TEST_CASE("rogers L") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  check_close(rogers_l(Real(0), ctx), Real(0), -60);
  check_close(rogers_l(Real(1), ctx), Real(1), -60);
  check_close(rogers_l(Real(mpq_class(1, 2)), ctx), Real(mpq_class(1, 2)), -55);
  CHECK_THROWS_AS(rogers_l(Real(-1), ctx), DomainError);
  CHECK_THROWS_AS(rogers_l(Real(2), ctx), DomainError);

  SUBCASE("L(x) + L(1-x) = 1") {
    Rng rng(0x777);
    for (int k = 0; k < 40; ++k) {
      Real x = rng.uniform(0.02, 0.98);
      check_close(rogers_l(x, ctx) + rogers_l(Real(1) - x, ctx), Real(1), -52);
    }
  }
  SUBCASE("five-term relation") {
    Rng rng(0x888);
    for (int k = 0; k < 100; ++k) {
      Real x = rng.uniform(0.02, 0.95);
      Real y = rng.uniform(0.02, 0.95);
      Real lhs = rogers_l(x, ctx) + rogers_l(y, ctx);
      Real rhs = rogers_l(x * y, ctx) +
                 rogers_l(x * (Real(1) - y) / (Real(1) - x * y), ctx) +
                 rogers_l(y * (Real(1) - x) / (Real(1) - x * y), ctx);
      check_small(lhs - rhs, -52);
    }
  }
  SUBCASE("cross-check against an independent formula path") {
    Real x(mpq_class(3, 10));
    Real via_li2 = (oracle::li2_direct_series(Complex(x)).re() +
                    ln(x) * ln(Real(1) - x) / 2L) /
                   zeta2_value();
    check_close(rogers_l(x, ctx), via_li2, -55);
  }
}

TEST_CASE("bloch-wigner") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  CHECK_THROWS_AS(bloch_wigner(Complex(0L), ctx), DomainError);
  CHECK_THROWS_AS(bloch_wigner(Complex(1L), ctx), DomainError);

  // vanishes on the reals
  check_close(bloch_wigner(Complex(Real(mpq_class(3, 10))), ctx), Real(0), -60);
  check_close(bloch_wigner(Complex(Real(7)), ctx), Real(0), -60);

  // antisymmetry under conjugation
  Complex z(Real(mpq_class(3, 10)), Real(mpq_class(2, 5)));
  check_close(bloch_wigner(conj(z), ctx), -bloch_wigner(z, ctx), -56);

  // |z| = 1 reduces to the Clausen function
  Real th = pi_value() / 3L;
  check_close(bloch_wigner(Complex(cos(th), sin(th)), ctx), cl2(th, ctx), -50);
}
