#include "li2lab/polylog.hpp"

#include "li2lab/bernoulli.hpp"
#include "li2lab/constants.hpp"

namespace li2lab {

namespace {

// Direct series sum z^n / n^2, |z| <= 0.6 or so. Geometric tail bound.
Complex li2_series(const Complex& z) {
  Real eps = scope_epsilon();
  Complex term = z;
  Complex acc = z;
  Real zmag = abs(z);
  Real gtail = Real(1) / (Real(1) - zmag);
  for (long n = 2; n < 2000000L; ++n) {
    term = term * z;
    acc += term / (n * n);
    // remaining tail <= |z|^{n+1}/(n+1)^2 * 1/(1-|z|)
    Real bound = abs(term) * zmag / ((n + 1) * (n + 1)) * gtail;
    if (bound < eps) return acc;
  }
  throw ConvergenceError("li2: direct series did not reach tolerance");
}

// Series in u = -ln(1-z):  Li2(z) = sum_{k>=0} B_k u^{k+1} / (k+1)!
// Converges for |u| < 2 pi; the caller keeps |u| away from the boundary.
Complex li2_bernoulli(const Complex& u) {
  Real eps = scope_epsilon();
  Complex u2 = u * u;
  // k = 0 and k = 1 terms: u - u^2/4 (B_1 = -1/2)
  Complex acc = u - u2 / 4L;
  Complex upow = u * u2;  // u^{2k+1} for k = 1
  mpz_class fact(6);      // (2k+1)! for k = 1
  Real r = abs(u) / (pi_value() * 2L);
  Real gtail = Real(1) / (Real(1) - r * r);
  for (unsigned k = 1; k < 4000; ++k) {
    mpq_class c = bernoulli_number(2 * k) / mpq_class(fact);
    Complex term = Complex(Real(c)) * upow;
    acc += term;
    Real bound = abs(term) * r * r * gtail;
    if (bound < eps) return acc;
    upow = upow * u2;
    fact *= (2 * k + 2);
    fact *= (2 * k + 3);
  }
  throw ConvergenceError("li2: Bernoulli series did not reach tolerance");
}

Real half() { return Real(mpq_class(1, 2)); }

}  // namespace

Complex li2_kernel(const Complex& z) {
  if (!z.is_finite()) throw OverflowError("li2: non-finite argument");
  if (z.is_zero()) return Complex(0L);

  if (z.is_real()) {
    const Real& x = z.re();
    if (x == Real(1)) return Complex(zeta2_value());
    if (x > Real(1)) {
      // limit from above the cut: pi^2/3 - ln^2(x)/2 - Li2(1/x) + i pi ln x
      Real lx = ln(x);
      Complex base = Complex(zeta2_value() * 2L - lx * lx / 2L) -
                     li2_kernel(Complex(Real(1) / x));
      return base + Complex(Real(0), pi_value() * lx);
    }
  }

  Real m = abs(z);
  if (m <= half()) return li2_series(z);

  if (m > Real(2)) {
    // inversion: Li2(z) = -Li2(1/z) - pi^2/6 - ln^2(-z)/2, z off [0, inf)
    Complex lnz = ln(-z);
    return -li2_kernel(inverse(z)) - Complex(zeta2_value()) - lnz * lnz * Complex(mpq_class(1, 2));
  }

  Complex one_minus = Complex(1L) - z;
  if (abs(one_minus) <= half()) {
    // reflection: Li2(z) = pi^2/6 - ln z ln(1-z) - Li2(1-z)
    return Complex(zeta2_value()) - ln(z) * ln(one_minus) - li2_series(one_minus);
  }

  return li2_bernoulli(-ln(one_minus));
}

Real cl2_kernel(const Real& theta) {
  // reduce to (-pi, pi]
  Real two_pi = pi_value() * 2L;
  Real t = theta - two_pi * round_nearest(theta / two_pi);
  if (t.is_zero()) return Real(0);
  int sgn = t.sign();
  Real x = abs(t);
  if (x > pi_value()) {  // rounding edge: push just-past-pi back
    x = two_pi - x;
    sgn = -sgn;
  }
  // Cl2(x) = x - x ln x + sum_{k>=1} |B_2k| x^{2k+1} / (2k (2k+1) (2k)!)
  Real eps = scope_epsilon();
  Real acc = x - x * ln(x);
  Real x2 = x * x;
  Real xpow = x * x2;
  mpz_class fact(2);
  Real r = x / two_pi;
  Real gtail = Real(1) / (Real(1) - r * r);
  for (unsigned k = 1; k < 4000; ++k) {
    mpq_class c = abs(bernoulli_number(2 * k)) / (mpq_class(2 * k) * mpq_class(2 * k + 1) * mpq_class(fact));
    Real term = Real(c) * xpow;
    acc += term;
    if (term * r * r * gtail < eps) break;
    xpow = xpow * x2;
    fact *= (2 * k + 1);
    fact *= (2 * k + 2);
  }
  return sgn < 0 ? -acc : acc;
}

Complex li2(const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return li2_kernel(z);
}

Real cl2(const Real& theta, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return cl2_kernel(theta);
}

Real ti2(const Real& x, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  // Li2(-ix) = conj Li2(ix) for real x, so the difference is 2i Im Li2(ix).
  return li2_kernel(Complex(Real(0), x)).im();
}

Complex chi2(const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return (li2_kernel(z) - li2_kernel(-z)) * Complex(mpq_class(1, 2));
}

Real rogers_l(const Real& x, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (x.sign() < 0 || x > Real(1)) throw DomainError("rogers_l: domain is [0, 1]");
  if (x.is_zero()) return Real(0);
  if (x == Real(1)) return Real(1);
  Real li = li2_kernel(Complex(x)).re();
  return (li + ln(x) * ln(Real(1) - x) / 2L) / zeta2_value();
}

Real bloch_wigner(const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (z.is_zero() || z == Complex(1L)) throw DomainError("bloch_wigner: undefined at 0 and 1");
  if (z.is_real()) {
    // D vanishes identically on the reals; returning the exact zero avoids
    // a spurious arg(1-z) ln|z| = pi ln|z| on the cuts.
    return Real(0);
  }
  return li2_kernel(z).im() + arg(Complex(1L) - z) * ln_abs(z);
}

}  // namespace li2lab
