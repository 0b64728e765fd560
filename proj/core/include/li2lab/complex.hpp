#ifndef LI2LAB_COMPLEX_HPP
#define LI2LAB_COMPLEX_HPP

#include <string>

#include "li2lab/real.hpp"

namespace li2lab {

// Arbitrary-precision complex value. Branch conventions, fixed project-wide:
//   arg  in (-pi, pi], with arg(x<0 on the axis) = +pi (continuous from above)
//   ln   principal, cut (-inf, 0]
//   sqrt principal: right half-plane union the positive imaginary axis
//   pow  with integer exponent is exact repeated squaring, otherwise exp(w ln z)
class Complex {
 public:
  Complex() = default;
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(Real re) : re_(std::move(re)) {}
  explicit Complex(long n) : re_(n) {}
  explicit Complex(const mpq_class& q) : re_(q) {}

  static Complex i() { return Complex(Real(0), Real(1)); }

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }

  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex operator-() const { return Complex(-re_, -im_); }
  friend Complex operator+(const Complex& a, const Complex& b) {
    return Complex(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend Complex operator-(const Complex& a, const Complex& b) {
    return Complex(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend Complex operator*(const Complex& a, const Complex& b);
  friend Complex operator/(const Complex& a, const Complex& b);
  friend Complex operator*(const Complex& a, long b) { return Complex(a.re_ * b, a.im_ * b); }
  friend Complex operator/(const Complex& a, long b) { return Complex(a.re_ / b, a.im_ / b); }
  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o) { *this = *this * o; return *this; }

  friend bool operator==(const Complex& a, const Complex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  std::string to_decimal(int digits) const;

 private:
  Real re_{0L};
  Real im_{0L};
};

Real abs(const Complex& z);
Real arg(const Complex& z);  // DomainError at 0
Complex conj(const Complex& z);
Complex sqrt(const Complex& z);
Complex ln(const Complex& z);  // DomainError at 0
Complex exp(const Complex& z);
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex arctan(const Complex& z);
Complex arcsin(const Complex& z);
Complex arccosh(const Complex& z);
Complex pow_int(const Complex& z, long n);
Complex pow(const Complex& z, const Complex& w);
Complex inverse(const Complex& z);

// |ln z| would lose absolute accuracy near |z|=1 if computed as ln(hypot);
// ln_abs goes through log1p of |z|^2-1 there.
Real ln_abs(const Complex& z);

}  // namespace li2lab

#endif
