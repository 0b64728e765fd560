#ifndef LI2LAB_TEST_ORACLES_HPP
#define LI2LAB_TEST_ORACLES_HPP

// Independent reference implementations used only by the test suites. Each
// oracle takes a different computational route than the library code it
// checks: plain series against transformed series, AGM against MPFR's pi,
// bisection against Aberth, and so on.

#include "li2lab/complex.hpp"
#include "li2lab/algebra.hpp"

namespace li2lab::oracle {

// Naive dilogarithm series sum z^n / n^2, usable for |z| <= 0.8. No
// transformations, no Bernoulli acceleration.
Complex li2_direct_series(const Complex& z);

// pi via the Gauss-Legendre AGM iteration (quadratic convergence).
Real pi_agm();

// Catalan constant via the Hurwitz-zeta split of the defining alternating
// series: G = (zeta(2,1/4) - zeta(2,3/4)) / 16.
Real catalan_series();

// Apery's constant via the accelerated central-binomial series
// zeta(3) = (5/2) sum_{n>=1} (-1)^{n-1} / (n^3 C(2n,n)).
Real zeta3_apery();

// Cl2 at a rational angle p pi / q via the residue-class split of the
// Fourier series into Hurwitz zetas (the accelerated-series oracle).
Real cl2_rational_angle(long p, long q);

// The unique real root of `poly` in (lo, hi) by plain sign bisection.
// Requires a sign change across the interval.
Real root_bisection(const IntPolynomial& poly, const mpq_class& lo, const mpq_class& hi);

// Newton iteration from a double seed.
Real root_newton(const IntPolynomial& poly, double seed);

// Euler-Maclaurin Hurwitz zeta written independently of the library one.
Real hurwitz_zeta_ref(long s, const mpq_class& a);

}  // namespace li2lab::oracle

#endif
