#include "oracles.hpp"

#include "li2lab/bernoulli.hpp"
#include "li2lab/constants.hpp"

namespace li2lab::oracle {

Complex li2_direct_series(const Complex& z) {
  Real m = abs(z);
  if (m > Real(mpq_class(4, 5))) throw DomainError("li2_direct_series: |z| too large");
  Real eps = scope_epsilon();
  Complex term = z;
  Complex acc = z;
  for (long n = 2; n < 4000000L; ++n) {
    term = term * z;
    acc += term / (n * n);
    if (abs(term) < eps) return acc;
  }
  throw ConvergenceError("li2_direct_series: cap");
}

Real pi_agm() {
  // Gauss-Legendre: a=1, b=1/sqrt2, t=1/4, p=1;
  // a' = (a+b)/2, b' = sqrt(ab), t' = t - p (a-a')^2, p' = 2p
  Real a(1);
  Real b = Real(1) / sqrt(Real(2));
  Real t(mpq_class(1, 4));
  Real p(1);
  Real eps = scope_epsilon();
  for (int i = 0; i < 64; ++i) {
    Real an = (a + b) / 2L;
    Real bn = sqrt(a * b);
    Real d = a - an;
    t -= p * d * d;
    p *= 2L;
    a = an;
    b = bn;
    if (abs(a - b) < eps) break;
  }
  Real s = a + b;
  return s * s / (t * 4L);
}

Real hurwitz_zeta_ref(long s, const mpq_class& a) {
  // zeta(s, a) = sum_{n<N} (a+n)^{-s} + (a+N)^{1-s}/(s-1) + (a+N)^{-s}/2
  //            + sum_k B_{2k}/(2k)! (s)_{2k-1} (a+N)^{-s-2k+1}
  long target = static_cast<long>(static_cast<double>(current_precision()) * 0.6931471805599453 /
                                  6.283185307179586) + 8;
  Real eps = scope_epsilon();
  Real sum(0);
  Real x{Real(a)};
  while (x < Real(target)) {
    sum += Real(1) / pow_si(x, s);
    x += 1L;
  }
  Real inv_xs = Real(1) / pow_si(x, s);
  sum += x * inv_xs / Real(s - 1);
  sum += inv_xs / 2L;
  Real x2 = x * x;
  Real poch(s);
  Real q = inv_xs / x;
  mpz_class fact(2);
  for (unsigned k = 1; k < 3000; ++k) {
    mpq_class b = bernoulli_number(2 * k) / mpq_class(fact);
    Real term = Real(b) * poch * q;
    sum += term;
    if (abs(term) < eps) return sum;
    poch = poch * Real(s + 2 * static_cast<long>(k) - 1) * Real(s + 2 * static_cast<long>(k));
    q = q / x2;
    fact *= (2 * k + 1);
    fact *= (2 * k + 2);
  }
  throw ConvergenceError("hurwitz_zeta_ref: cap");
}

Real catalan_series() {
  // G = sum (-1)^n/(2n+1)^2 = (1/16)(zeta(2,1/4) - zeta(2,3/4))
  return (hurwitz_zeta_ref(2, mpq_class(1, 4)) - hurwitz_zeta_ref(2, mpq_class(3, 4))) / 16L;
}

Real zeta3_apery() {
  Real eps = scope_epsilon();
  Real acc(0);
  mpz_class binom(2);  // C(2n, n) at n = 1
  for (long n = 1; n < 200000L; ++n) {
    Real term = Real(1) / (Real(n) * Real(n) * Real(n) * Real(binom));
    if ((n & 1L) == 0) term = -term;
    acc += term;
    if (abs(term) < eps) break;
    // C(2n+2, n+1) = C(2n, n) * (2n+1)(2n+2)/(n+1)^2
    binom *= (2 * n + 1) * 2;
    binom /= (n + 1);
  }
  return acc * Real(mpq_class(5, 2));
}

Real cl2_rational_angle(long p, long q) {
  // Cl2(p pi / q) = sum_n sin(n p pi / q)/n^2; group n by residue mod 2q:
  // each class r contributes sin(r p pi / q) zeta(2, r/(2q)) / (2q)^2.
  if (q <= 0) throw DomainError("cl2_rational_angle: q must be positive");
  Real acc(0);
  Real pi_v = pi_value();
  Real scale = Real(1) / Real(4 * q * q);
  for (long r = 1; r < 2 * q; ++r) {
    // sin(r p pi / q): rational multiple of pi; skip exact zeros
    long num = (r * p) % (2 * q);
    if (num % q == 0) continue;
    Real s = sin(pi_v * Real(num) / Real(q));
    acc += s * hurwitz_zeta_ref(2, mpq_class(r, 2 * q)) * scale;
  }
  return acc;
}

Real root_bisection(const IntPolynomial& poly, const mpq_class& lo_q, const mpq_class& hi_q) {
  Real lo{Real(lo_q)}, hi{Real(hi_q)};
  Real flo = poly.eval(lo);
  Real fhi = poly.eval(hi);
  if (flo.sign() == 0) return lo;
  if (fhi.sign() == 0) return hi;
  if (flo.sign() == fhi.sign())
    throw DomainError("root_bisection: no sign change across the interval");
  long steps = static_cast<long>(current_precision()) + 8;
  for (long i = 0; i < steps; ++i) {
    Real mid = (lo + hi) / 2L;
    Real fm = poly.eval(mid);
    if (fm.sign() == 0) return mid;
    if (fm.sign() == flo.sign()) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2L;
}

Real root_newton(const IntPolynomial& poly, double seed) {
  IntPolynomial dp = poly.derivative();
  Real x(seed);
  for (int i = 0; i < 400; ++i) {
    Real f = poly.eval(x);
    Real d = dp.eval(x);
    if (d.is_zero()) break;
    Real step = f / d;
    x -= step;
    if (abs(step) < scope_epsilon() * (abs(x) + Real(1)) * 2L) break;
  }
  return x;
}

}  // namespace li2lab::oracle
