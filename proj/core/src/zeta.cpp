#include "li2lab/zeta.hpp"

#include "li2lab/bernoulli.hpp"
#include "li2lab/errors.hpp"

namespace li2lab {

Real riemann_zeta(const Real& s) {
  Real r;
  mpfr_zeta(r.raw(), s.raw(), MPFR_RNDN);
  return r;
}

Real hurwitz_zeta(const Real& s, const Real& a) {
  if (!(s > Real(1))) throw DomainError("hurwitz_zeta: requires s > 1");
  if (a.sign() <= 0) throw DomainError("hurwitz_zeta: requires a > 0");

  // Push the summation point M = a + N far enough out that the asymptotic
  // Bernoulli tail bottoms out below scope epsilon (same sizing rule as the
  // Stirling series: smallest term ~ e^{-2 pi M}).
  long target = static_cast<long>(static_cast<double>(current_precision()) *
                                  0.6931471805599453 / 6.283185307179586) + 6;
  Real eps = scope_epsilon();

  Real sum(0);
  Real x = a;
  long n = 0;
  while (x < Real(target)) {
    Real t;
    mpfr_pow(t.raw(), x.raw(), s.raw(), MPFR_RNDN);
    sum += Real(1) / t;
    x += 1L;
    ++n;
    if (n > 1000000L) throw ConvergenceError("hurwitz_zeta: shift cap exceeded");
  }
  // x = a + N. Integral term + half term:
  Real xs;
  mpfr_pow(xs.raw(), x.raw(), s.raw(), MPFR_RNDN);  // x^s
  Real inv_xs = Real(1) / xs;
  sum += x * inv_xs / (s - 1L);  // x^{1-s}/(s-1)
  sum += inv_xs / 2L;

  Real x2 = x * x;
  Real poch = s;               // (s)_{2k-1}, starting k=1
  Real q = inv_xs / x;         // x^{-s-1}
  mpz_class fact(2);           // (2k)!
  Real prev_mag;
  bool have_prev = false;
  for (unsigned k = 1; k < 4000; ++k) {
    mpq_class b = bernoulli_number(2 * k) / mpq_class(fact);
    Real term = Real(b) * poch * q;
    Real mag = abs(term);
    if (have_prev && mag > prev_mag) break;
    sum += term;
    if (mag < eps) return sum;
    prev_mag = mag;
    have_prev = true;
    // advance to k+1
    poch = poch * (s + (2 * k - 1)) * (s + (2 * k));
    q = q / x2;
    fact *= (2 * k + 1);
    fact *= (2 * k + 2);
  }
  return sum;
}

}  // namespace li2lab
