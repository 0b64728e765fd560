#include "li2lab/algebra.hpp"

#include "oracles.hpp"
#include "test_common.hpp"

using namespace li2lab;
using namespace li2lab::testutil;

TEST_CASE("polynomial parse / print / eval") {
  IntPolynomial p = IntPolynomial::parse("x^6 - x^5 - x^4 - 6*x^3 - x^2 - x + 1");
  CHECK(p.degree() == 6);
  CHECK(p.to_string() == "x^6 - x^5 - x^4 - 6*x^3 - x^2 - x + 1");
  CHECK(IntPolynomial::parse(p.to_string()) == p);
  CHECK(IntPolynomial::parse("6x^3+2x") == IntPolynomial::parse("2*x + 6*x^3"));
  CHECK(p.eval(mpq_class(1)) == mpq_class(-8));
  CHECK(IntPolynomial::parse("x").eval(mpq_class(7)) == 7);
  CHECK_THROWS_AS(IntPolynomial::parse("x^6 - y"), SyntaxError);
  CHECK_THROWS_AS(IntPolynomial::parse(""), SyntaxError);

  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);
  check_close(eval_poly(IntPolynomial::parse("x^2+1"), Complex::i(), ctx), Complex(0L), -60);
  check_close(eval_poly(IntPolynomial::parse("x"), Complex(7L), ctx), Complex(7L), -60);
}

TEST_CASE("sturm counting") {
  IntPolynomial p = IntPolynomial::parse("x^2 - 2");
  CHECK(sturm_count(p, mpq_class(0), mpq_class(2)) == 1);
  CHECK(sturm_count(p, mpq_class(-2), mpq_class(2)) == 2);
  CHECK(sturm_count(p, mpq_class(2), mpq_class(3)) == 0);

  IntPolynomial s = IntPolynomial::parse("x^6 - x^5 - x^4 - 6*x^3 - x^2 - x + 1");
  CHECK(sturm_count(s, mpq_class(0), mpq_class(1)) == 1);
  CHECK(sturm_count(s, mpq_class(-10), mpq_class(10)) == 2);

  CHECK(IntPolynomial::parse("x^2-2").is_squarefree());
  CHECK_FALSE(IntPolynomial::parse("x^2-2*x+1").is_squarefree());
}

TEST_CASE("roots_all on the small catalog") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  SUBCASE("x^2 - 2") {
    auto r = roots_all(IntPolynomial::parse("x^2-2"), ctx);
    REQUIRE(r.size() == 2);
    Real s2 = oracle::root_bisection(IntPolynomial::parse("x^2-2"), mpq_class(1), mpq_class(2));
    check_close(r[0], Complex(-s2), -56);
    check_close(r[1], Complex(s2), -56);
  }
  SUBCASE("x^2 + 1 canonical order") {
    auto r = roots_all(IntPolynomial::parse("x^2+1"), ctx);
    REQUIRE(r.size() == 2);
    check_close(r[0], Complex(Real(0), Real(-1)), -56);
    check_close(r[1], Complex(Real(0), Real(1)), -56);
  }
  SUBCASE("plastic cubic") {
    auto r = roots_all(IntPolynomial::parse("x^3-x-1"), ctx);
    REQUIRE(r.size() == 3);
    Real p = oracle::root_newton(IntPolynomial::parse("x^3-x-1"), 1.3);
    // canonical order: conjugate pair (re < 0) first
    CHECK(r[2].is_real());
    check_close(r[2].re(), p, -56);
    CHECK(r[2].re().to_decimal(30).substr(0, 31) == "1.324717957244746025960908854");
    check_close(r[0], conj(r[1]), -58);
  }
  SUBCASE("non-squarefree rejected") {
    CHECK_THROWS_AS(roots_all(IntPolynomial::parse("x^2-2*x+1"), ctx), DomainError);
  }
}

TEST_CASE("root count equals degree on the full catalog") {
  PrecisionContext ctx(50);
  ScopedPrecision scope(ctx);
  const char* catalog[] = {
      "x^2-x+2",
      "8*x^3-8*x^2-2*x+3",
      "x^3-x-1",
      "x^3+x^2-1",
      "x^3-4*x^2+3*x+1",
      "x^3-2*x^2+x+1",
      "x^4-3*x^3+4*x^2-2*x+1",
      "x^4-4*x^3+7*x^2-7*x+4",
      "x^4-4*x^3+14*x^2+4*x+1",
      "3*x^4-15*x^3+28*x^2-15*x+3",
      "x^4-6*x^3+13*x^2-10*x+1",
      "x^4-x^3-6*x^2-x+1",
      "x^4+x^3-6*x^2+x+1",
      "3*x^4-15*x^2+16",
      "x^5+2*x^4+4*x^3+3*x^2+2*x+1",
      "x^6-x^5-x^4-6*x^3-x^2-x+1",
      "x^6-3*x^5+5*x^4-8*x^3+5*x^2-3*x+1",
      "x^6-2*x^5+13*x^4-24*x^3+19*x^2-7*x+1",
      "x^6-7*x^5+19*x^4-24*x^3+13*x^2-2*x+1",
      "x^6-4*x^5+5*x^4-2*x^3+x^2-x-1",
      "y_sub_x^8",  // placeholder replaced below
  };
  for (const char* text : catalog) {
    std::string t(text);
    if (t == "y_sub_x^8") t = "x^8-x^7+x^6-x^4+x^2-x+1";
    IntPolynomial p = IntPolynomial::parse(t);
    auto roots = roots_all(p, ctx);
    CHECK(static_cast<int>(roots.size()) == p.degree());
    // conjugate closure
    for (const auto& r : roots) {
      if (r.is_real()) continue;
      bool found = false;
      for (const auto& s : roots)
        if (abs(s - conj(r)) < pow10(-45)) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("paper catalog root structure") {
  PrecisionContext ctx(50);
  ScopedPrecision scope(ctx);

  IntPolynomial a = IntPolynomial::parse("x^6-x^5-x^4-6*x^3-x^2-x+1");
  CHECK(sturm_count(a, mpq_class(-100), mpq_class(100)) == 2);
  CHECK(sturm_count(a, mpq_class(0), mpq_class(1)) == 1);

  IntPolynomial b = IntPolynomial::parse("x^6-3*x^5+5*x^4-8*x^3+5*x^2-3*x+1");
  CHECK(sturm_count(b, mpq_class(0), mpq_class(1)) == 1);

  IntPolynomial c = IntPolynomial::parse("x^8-x^7+x^6-x^4+x^2-x+1");
  auto roots = roots_all(c, ctx);
  bool found = false;
  ScopedPrecision scope2(ctx);
  for (const auto& r : roots) {
    Real dre = abs(r.re() - Real(mpq_class(18866, 100000)));
    Real dim = abs(r.im() - Real(mpq_class(-83324, 100000)));
    if (dre < Real(mpq_class(1, 1000)) && dim < Real(mpq_class(1, 1000))) found = true;
  }
  CHECK(found);
}

TEST_CASE("select_root") {
  PrecisionContext ctx(60);
  ScopedPrecision scope(ctx);

  SUBCASE("unique root in (0,1) of the six-term base") {
    auto v = select_root(IntPolynomial::parse("x^6-x^5-x^4-6*x^3-x^2-x+1"),
                         RootSelector::interval(mpq_class(0), mpq_class(1)), ctx);
    Real h = oracle::root_bisection(v.poly, mpq_class(1, 4), mpq_class(1, 2));
    check_close(v.value, Complex(h), -55);
    CHECK(v.value.re().to_decimal(30).substr(0, 32) == "0.404805083126263767867885760372");
  }
  SUBCASE("complex rect") {
    auto v = select_root(IntPolynomial::parse("x^4-3*x^3+4*x^2-2*x+1"),
                         RootSelector::rect(mpq_class(0), mpq_class(1, 2), mpq_class(2, 5),
                                            mpq_class(4, 5)),
                         ctx);
    CHECK(v.value.re().to_decimal(4).substr(0, 6) == "0.1909");
    CHECK(v.value.im().to_decimal(4).substr(0, 6) == "0.5877");
  }
  SUBCASE("negative interval") {
    auto v = select_root(IntPolynomial::parse("x^2-2"),
                         RootSelector::interval(mpq_class(-2), mpq_class(0)), ctx);
    check_close(v.value.re(), -sqrt(Real(2)), -56);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(select_root(IntPolynomial::parse("x^2-2"),
                                RootSelector::interval(mpq_class(3), mpq_class(4)), ctx),
                    NoRootError);
    CHECK_THROWS_AS(select_root(IntPolynomial::parse("x^2-2"),
                                RootSelector::interval(mpq_class(-2), mpq_class(2)), ctx),
                    AmbiguousRootError);
    RootSelector ranked = RootSelector::interval(mpq_class(-2), mpq_class(2));
    ranked.multiplicity_rank = 1;
    auto v = select_root(IntPolynomial::parse("x^2-2"), ranked, ctx);
    CHECK(v.value.re().sign() > 0);
  }
}

TEST_CASE("refinement is idempotent") {
  PrecisionContext lo(40), hi(80);
  auto v40 = select_root(IntPolynomial::parse("x^3-x-1"),
                         RootSelector::interval(mpq_class(1), mpq_class(2)), lo);
  auto v80 = refine(v40, hi);
  auto v80b = refine(v80, hi);
  ScopedPrecision scope(hi);
  CHECK(v80.value.re().to_decimal(80) == v80b.value.re().to_decimal(80));
  check_small(v80.poly.eval(v80.value), -75);
  // eval_poly near a refined root
  check_small(eval_poly(v80.poly, v80.value, hi), -75);
}

TEST_CASE("selector text round trip") {
  for (const char* t : {"interval(0,1)", "rect(0,1/2,2/5,4/5)", "index(3)"}) {
    RootSelector s = RootSelector::parse(t);
    CHECK(RootSelector::parse(s.to_string()).to_string() == s.to_string());
  }
  CHECK_THROWS_AS(RootSelector::parse("circle(1,2)"), SyntaxError);
}
