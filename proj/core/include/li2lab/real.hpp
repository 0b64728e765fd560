#ifndef LI2LAB_REAL_HPP
#define LI2LAB_REAL_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <string_view>

#include "li2lab/context.hpp"
#include "li2lab/errors.hpp"

namespace li2lab {

// Arbitrary-precision real backed by an mpfr_t. A value carries the
// precision it was created with; arithmetic allocates results at the
// thread's current scoped precision (see ScopedPrecision). All rounding is
// to nearest, which keeps runs bit-reproducible.
class Real {
 public:
  Real() { mpfr_init2(v_, current_precision()); mpfr_set_zero(v_, 1); }
  explicit Real(long n) { mpfr_init2(v_, current_precision()); mpfr_set_si(v_, n, MPFR_RNDN); }
  explicit Real(int n) : Real(static_cast<long>(n)) {}
  explicit Real(const mpz_class& z) {
    mpfr_init2(v_, current_precision());
    mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
  }
  explicit Real(const mpq_class& q) {
    mpfr_init2(v_, current_precision());
    mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
  }
  explicit Real(double d) { mpfr_init2(v_, current_precision()); mpfr_set_d(v_, d, MPFR_RNDN); }

  // Parses a decimal string at the current scoped precision.
  static Real from_string(std::string_view s);

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  Real operator-() const;
  Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }
  Real& operator+=(long n) { mpfr_add_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator-=(long n) { mpfr_sub_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator*=(long n) { mpfr_mul_si(v_, v_, n, MPFR_RNDN); return *this; }
  Real& operator/=(long n) { mpfr_div_si(v_, v_, n, MPFR_RNDN); return *this; }

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);
  friend Real operator*(const Real& a, long b);
  friend Real operator/(const Real& a, long b);
  friend Real operator*(long a, const Real& b) { return b * a; }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  int cmp(long n) const { return mpfr_cmp_si(v_, n); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Fixed-point decimal rendering with `digits` places after the point.
  std::string to_decimal(int digits) const;

  // Base-2 exponent of the magnitude; very negative for tiny values.
  // Returns LONG_MIN-ish sentinel for zero via mpfr_get_exp semantics.
  long exponent2() const { return is_zero() ? -(1L << 40) : mpfr_get_exp(v_); }

 private:
  mpfr_t v_;
};

Real sqrt(const Real& x);
Real ln(const Real& x);        // DomainError for x <= 0
Real log1p(const Real& x);
Real exp(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real asin(const Real& x);
Real acosh(const Real& x);
Real abs(const Real& x);
Real pow_si(const Real& x, long n);
Real hypot(const Real& x, const Real& y);
Real floor(const Real& x);
Real round_nearest(const Real& x);

// 2^-(bits of current scope): the natural "one ulp at working precision".
Real scope_epsilon();

// 10^e at current precision (e may be negative).
Real pow10(long e);

}  // namespace li2lab

#endif
