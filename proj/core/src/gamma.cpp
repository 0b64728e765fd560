#include "li2lab/gamma.hpp"

#include "li2lab/bernoulli.hpp"
#include "li2lab/constants.hpp"

namespace li2lab {

namespace {

bool is_nonpositive_integer(const Complex& z) {
  if (!z.is_real()) return false;
  if (z.re().sign() > 0) return false;
  return floor(z.re()) == z.re();
}

// Stirling series for ln Gamma(w), valid once |w| is large enough:
//   ln Gamma(w) ~ (w - 1/2) ln w - w + ln(2 pi)/2
//                 + sum_{k>=1} B_{2k} / (2k(2k-1) w^{2k-1})
// The terms eventually diverge; we sum while they decrease and demand the
// smallest term clears the scope epsilon, which the caller guarantees by
// shifting w to |w| >= shift_target().
Complex stirling_log_gamma(const Complex& w) {
  Complex acc = (w - Complex(mpq_class(1, 2))) * ln(w) - w;
  Real two_pi = pi_value() * 2L;
  acc += Complex(ln(two_pi) / 2L);
  Complex w2 = w * w;
  Complex invw = inverse(w);
  Complex term_pow = invw;  // w^{-(2k-1)}
  Real eps = scope_epsilon();
  Real prev_mag;
  bool have_prev = false;
  for (unsigned k = 1; k < 4000; ++k) {
    mpq_class c = bernoulli_number(2 * k) / mpq_class(2 * k * (2 * k - 1));
    Complex term = Complex(Real(mpq_class(c))) * term_pow;
    Real mag = abs(term);
    if (have_prev && mag > prev_mag) break;  // past the asymptotic minimum
    acc += term;
    if (mag < eps) break;
    prev_mag = mag;
    have_prev = true;
    term_pow = term_pow / w2;
  }
  return acc;
}

// |w| needed so the smallest Stirling term ~ e^{-2 pi |w|} clears ~eps.
long shift_target() {
  // bits * ln2 / (2 pi), rounded up with margin
  return static_cast<long>(static_cast<double>(current_precision()) * 0.6931471805599453 /
                           6.283185307179586) + 6;
}

}  // namespace

Complex log_gamma_kernel(const Complex& z) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
  long target = shift_target();
  // Shift z -> z + n until Re large enough, dividing the product back out:
  //   Gamma(z) = Gamma(z+n) / (z (z+1) ... (z+n-1))
  Complex shifted = z;
  Complex logprod(0L);
  while (shifted.re() < Real(target)) {
    logprod += ln(shifted);
    shifted += Complex(1L);
  }
  return stirling_log_gamma(shifted) - logprod;
}

Complex gamma_kernel(const Complex& z) {
  if (z.is_real()) return Complex(gamma_kernel(z.re()));
  if (z.re().sign() > 0 || !is_nonpositive_integer(z)) {
    if (z.re().sign() > 0) return exp(log_gamma_kernel(z));
    // reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    Complex pz = Complex(pi_value()) * z;
    Complex s = sin(pz);
    if (s.is_zero()) throw PoleError("gamma: pole at non-positive integer");
    return Complex(pi_value()) / (s * exp(log_gamma_kernel(Complex(1L) - z)));
  }
  throw PoleError("gamma: pole at non-positive integer");
}

Real gamma_kernel(const Real& x) {
  if (x.sign() <= 0 && floor(x) == x) throw PoleError("gamma: pole at non-positive integer");
  Real r;
  mpfr_gamma(r.raw(), x.raw(), MPFR_RNDN);
  if (!r.is_finite()) throw OverflowError("gamma: overflow");
  return r;
}

Complex gamma(const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return gamma_kernel(z);
}

Complex log_gamma(const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (z.re().sign() <= 0) throw DomainError("log_gamma: requires Re z > 0");
  return log_gamma_kernel(z);
}

Complex beta(const Complex& p, const Complex& q, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (p.re().sign() <= 0 || q.re().sign() <= 0)
    throw DomainError("beta: requires Re p > 0 and Re q > 0");
  return exp(log_gamma_kernel(p) + log_gamma_kernel(q) - log_gamma_kernel(p + q));
}

}  // namespace li2lab
