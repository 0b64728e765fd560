#include "li2lab/complex.hpp"

#include "li2lab/constants.hpp"

namespace li2lab {

Complex operator*(const Complex& a, const Complex& b) {
  return Complex(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

Complex operator/(const Complex& a, const Complex& b) {
  // Smith's algorithm is unnecessary here: exponent range is huge, so the
  // naive quotient cannot overflow for the magnitudes this library sees.
  Real d = b.re_ * b.re_ + b.im_ * b.im_;
  if (d.is_zero()) throw DomainError("complex division by zero");
  return Complex((a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d);
}

std::string Complex::to_decimal(int digits) const {
  std::string s = re_.to_decimal(digits);
  if (im_.is_zero()) return s;
  std::string t = abs(im_).to_decimal(digits);
  return s + (im_.sign() < 0 ? " - " : " + ") + t + "*i";
}

Real abs(const Complex& z) { return hypot(z.re(), z.im()); }

Real arg(const Complex& z) {
  if (z.is_zero()) throw DomainError("arg(0) is undefined");
  if (z.im().is_zero()) {
    // Exact real axis: arg = 0 or +pi (negative axis approached from above).
    if (z.re().sign() >= 0) return Real(0);
    return pi_value();
  }
  return atan2(z.im(), z.re());
}

Complex conj(const Complex& z) { return Complex(z.re(), -z.im()); }

Real ln_abs(const Complex& z) {
  Real m2 = z.re() * z.re() + z.im() * z.im();
  Real d = m2 - 1L;
  // |z| within [0.5, 1.5] of 1: use log1p(|z|^2-1)/2 for absolute accuracy.
  if (abs(d) < Real(mpq_class(1, 2))) return log1p(d) / 2L;
  return ln(m2) / 2L;
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return Complex(0L);
  if (z.im().is_zero()) {
    if (z.re().sign() > 0) return Complex(sqrt(z.re()));
    return Complex(Real(0), sqrt(-z.re()));  // principal: positive imaginary axis
  }
  Real m = abs(z);
  Real w = sqrt((m + abs(z.re())) / 2L);
  if (z.re().sign() >= 0) return Complex(w, z.im() / (w * 2L));
  Real t = abs(z.im()) / (w * 2L);
  return z.im().sign() >= 0 ? Complex(t, w) : Complex(t, -w);
}

Complex ln(const Complex& z) {
  if (z.is_zero()) throw DomainError("ln(0) is undefined");
  return Complex(ln_abs(z), arg(z));
}

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  if (!m.is_finite()) throw OverflowError("exp: magnitude overflow");
  if (z.im().is_zero()) return Complex(m);
  return Complex(m * cos(z.im()), m * sin(z.im()));
}

Complex sin(const Complex& z) {
  Complex iz(-z.im(), z.re());
  Complex d = exp(iz) - exp(-iz);
  return Complex(d.im() / 2L, -d.re() / 2L);  // (e^{iz}-e^{-iz})/(2i)
}

Complex cos(const Complex& z) {
  Complex iz(-z.im(), z.re());
  Complex s = exp(iz) + exp(-iz);
  return Complex(s.re() / 2L, s.im() / 2L);
}

Complex arctan(const Complex& z) {
  if (z.is_real()) return Complex(atan(z.re()));
  // (i/2) [ln(1 - iz) - ln(1 + iz)]
  Complex iz(-z.im(), z.re());
  Complex d = ln(Complex(1L) - iz) - ln(Complex(1L) + iz);
  return Complex(-d.im() / 2L, d.re() / 2L);
}

Complex arcsin(const Complex& z) {
  if (z.is_real() && abs(z.re()) <= Real(1)) return Complex(asin(z.re()));
  // -i ln(iz + sqrt(1 - z^2))
  Complex iz(-z.im(), z.re());
  Complex w = ln(iz + sqrt(Complex(1L) - z * z));
  return Complex(w.im(), -w.re());
}

Complex arccosh(const Complex& z) {
  if (z.is_real() && z.re() >= Real(1)) return Complex(acosh(z.re()));
  // principal: ln(z + sqrt(z-1) sqrt(z+1)), cut (-inf, 1)
  return ln(z + sqrt(z - Complex(1L)) * sqrt(z + Complex(1L)));
}

Complex inverse(const Complex& z) { return Complex(1L) / z; }

Complex pow_int(const Complex& z, long n) {
  if (n == 0) return Complex(1L);
  bool neg = n < 0;
  unsigned long k = neg ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  Complex base = z;
  Complex acc(1L);
  while (k) {
    if (k & 1UL) acc = acc * base;
    base = base * base;
    k >>= 1;
  }
  if (neg) acc = inverse(acc);
  if (!acc.is_finite()) throw OverflowError("pow_int: overflow");
  return acc;
}

Complex pow(const Complex& z, const Complex& w) {
  if (w.is_real()) {
    Real n = round_nearest(w.re());
    if (n == w.re() && abs(n) <= Real(1000000L)) return pow_int(z, w.re().to_long());
  }
  if (z.is_zero()) {
    if (w.is_real() && w.re().sign() > 0) return Complex(0L);
    throw DomainError("pow: 0 raised to a non-positive or complex power");
  }
  return exp(w * ln(z));
}

}  // namespace li2lab
