#include "li2lab/hyper.hpp"

#include "li2lab/bernoulli.hpp"
#include "li2lab/polylog.hpp"
#include "test_common.hpp"

using namespace li2lab;
using namespace li2lab::testutil;

namespace {
mpq_class Q(long n, long d = 1) { return mpq_class(n, d); }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Q(7), 0) == 1);
  CHECK(pochhammer(Q(1), 5) == 120);
  CHECK(pochhammer(Q(1, 2), 3) == Q(15, 8));
  CHECK(pochhammer(Q(-3), 5) == 0);  // terminating
}

TEST_CASE("term recurrence matches direct pochhammer evaluation exactly") {
  // rational argument: both routes are exact rationals
  std::vector<mpq_class> up = {Q(1, 2), Q(1, 2), Q(1)};
  std::vector<mpq_class> lo = {Q(5, 6), Q(7, 6), Q(3, 2)};
  mpq_class q(-4, 27);
  mpq_class term(1);
  for (unsigned long n = 0; n <= 50; ++n) {
    mpq_class direct(1);
    for (const auto& a : up) direct *= pochhammer(a, n);
    for (const auto& b : lo) direct /= pochhammer(b, n);
    mpq_class qq(1);
    for (unsigned long k = 0; k < n; ++k) qq *= q;
    direct *= qq;
    direct.canonicalize();
    term.canonicalize();
    CHECK(direct == term);
    mpq_class step = q;
    for (const auto& a : up) step *= (a + static_cast<long>(n));
    for (const auto& b : lo) step /= (b + static_cast<long>(n));
    term *= step;
  }
}

TEST_CASE("pfq basics") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  SeriesSpec s;
  s.upper = {Q(1, 2), Q(1, 3)};
  s.lower = {Q(5, 4)};
  s.argument = Complex(0L);
  check_close(eval_pfq(s, ctx), Complex(1L), -60);

  // 2F1(1, 1; 2; z) = -ln(1-z)/z
  s.upper = {Q(1), Q(1)};
  s.lower = {Q(2)};
  s.argument = Complex(Real(mpq_class(1, 3)));
  Complex f = eval_pfq(s, ctx);
  Real want = -ln(Real(mpq_class(2, 3))) * 3L;
  check_close(f.re(), want, -54);

  CHECK_THROWS_AS(([&] {
                    SeriesSpec bad;
                    bad.upper = {Q(1)};
                    bad.lower = {Q(-2)};
                    bad.argument = Complex(Real(mpq_class(1, 2)));
                    return eval_pfq(bad, ctx);
                  }()),
                  DomainError);
  CHECK_THROWS_AS(([&] {
                    SeriesSpec bad;
                    bad.upper = {Q(1), Q(1)};
                    bad.lower = {Q(2)};
                    bad.argument = Complex(Real(mpq_class(3, 2)));
                    return eval_pfq(bad, ctx);
                  }()),
                  ConvergenceError);
}

TEST_CASE("bracket series") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  BracketSpec b;
  b.upper = {Q(1, 2), Q(1, 2), Q(1)};
  b.lower = {Q(5, 6), Q(7, 6), Q(3, 2)};
  b.ratio_argument = Complex(0L);
  check_close(eval_bracket(b, std::nullopt, ctx), Complex(1L), -60);

  // s1 at h = 1: direct summation cross-check in plain Real arithmetic
  b.ratio_argument = Complex(Real(Q(-4, 27)));
  Complex via_engine = eval_bracket(b, std::nullopt, ctx);
  Real acc(0), term(1);
  for (long n = 0; n < 400; ++n) {
    acc += term;
    mpq_class step = Q(-4, 27);
    for (const auto& a : b.upper) step *= (a + n);
    for (const auto& l : b.lower) step /= (l + n);
    term *= Real(step);
    if (abs(term) < pow10(-70)) break;
  }
  check_close(via_engine.re(), acc, -58);

  // extra factor 1/(n+1): equals the 5F4 folding
  TermFactor extra;
  extra.num = {Q(1)};
  extra.den = {Q(1), Q(1)};  // 1 + n
  b.upper = {Q(1), Q(1, 2), Q(1, 2)};
  b.lower = {Q(5, 6), Q(7, 6), Q(3, 2)};
  b.ratio_argument = Complex(Real(Q(-4, 27)));
  Complex with_extra = eval_bracket(b, extra, ctx);
  SeriesSpec folded;
  folded.upper = {Q(1), Q(1), Q(1), Q(1, 2), Q(1, 2)};
  folded.lower = {Q(5, 6), Q(7, 6), Q(3, 2), Q(2)};
  folded.argument = b.ratio_argument;
  check_small(with_extra - eval_pfq(folded, ctx), -55);
}

TEST_CASE("third-integer inverse binomial series") {
  // 4F3(1,1,1,3/2; 4/3,5/3,2; z) = 4/(9z) sum_{n>=1} (27z/4)^n / (n^2 C(3n,n))
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  SeriesSpec s;
  s.upper = {Q(1), Q(1), Q(1), Q(3, 2)};
  s.lower = {Q(4, 3), Q(5, 3), Q(2)};
  s.argument = Complex(Real(Q(1, 10)));
  Complex lhs = eval_pfq(s, ctx);

  Real rhs(0);
  mpz_class binom(3);  // C(3,1)
  Real q(Q(27, 40));   // 27 z / 4 at z = 1/10
  Real qn = q;
  for (long n = 1; n < 400; ++n) {
    Real term = qn / (Real(n) * Real(n) * Real(binom));
    rhs += term;
    if (abs(term) < pow10(-70)) break;
    // C(3n+3, n+1) from C(3n, n)
    binom *= (3 * n + 1);
    binom *= (3 * n + 2);
    binom *= (3 * n + 3);
    binom /= (n + 1);
    binom /= (2 * n + 1);
    binom /= (2 * n + 2);
    qn *= q;
  }
  rhs *= Real(Q(4, 9)) / Real(Q(1, 10));
  check_close(lhs.re(), rhs, -54);
}

TEST_CASE("boundary-convergent unit-argument series") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  SUBCASE("elliptic 4F3 equals Cl2(pi/3)") {
    SeriesSpec s;
    s.upper = {Q(1), Q(1, 2), Q(1, 2), Q(1, 2)};
    s.lower = {Q(3, 2), Q(5, 6), Q(7, 6)};
    s.argument = Complex(1L);
    Complex f = eval_pfq(s, ctx);
    Real lhs = sqrt(Real(3)) / 2L * f.re();
    check_close(lhs, cl2_kernel(pi_value() / 3L), -52);
  }

  SUBCASE("quartic analogue") {
    SeriesSpec s;
    s.upper = {Q(1), Q(1, 2), Q(2, 3), Q(1, 3)};
    s.lower = {Q(3, 2), Q(5, 4), Q(3, 4)};
    s.argument = Complex(1L);
    Complex f = eval_pfq(s, ctx);
    Real rhs = Real(Q(3, 4)) * sqrt(Real(3)) *
               (ln(Real(4) + Real(3) * sqrt(Real(2))) * 2L +
                ln(Real(Q(7, 2)) - Real(2) * sqrt(Real(3))));
    check_close(f.re(), rhs, -52);
  }

  SUBCASE("two-anchor agreement guards the asymptotic tail") {
    // same series at 40 and 80 digits agree to the lower target
    SeriesSpec s;
    s.upper = {Q(1), Q(1, 2), Q(1, 2), Q(1, 2)};
    s.lower = {Q(3, 2), Q(5, 6), Q(7, 6)};
    s.argument = Complex(1L);
    Complex a = eval_pfq(s, PrecisionContext(40));
    Complex b = eval_pfq(s, PrecisionContext(80));
    ScopedPrecision wide(PrecisionContext(80));
    check_small(abs(a - b), -38);
  }
}

TEST_CASE("geometric series with moderate ratio") {
  // 1/180 * 4F3(1,1,1,3/2; 7/6,11/6,2; -1/324) = ln^2((5+sqrt13)/(2 sqrt3)) - pi^2/12
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  SeriesSpec s;
  s.upper = {Q(1), Q(1), Q(1), Q(3, 2)};
  s.lower = {Q(7, 6), Q(11, 6), Q(2)};
  s.argument = Complex(Real(Q(-1, 324)));
  Complex f = eval_pfq(s, ctx);
  Real l = ln((Real(5) + sqrt(Real(13))) / (sqrt(Real(3)) * 2L));
  check_close(f.re() / 180L, l * l - zeta2_value() / 2L, -54);
}
