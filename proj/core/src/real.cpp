#include "li2lab/real.hpp"

#include <cstring>
#include <vector>

namespace li2lab {

namespace detail {
mpfr_prec_t& thread_precision() {
  thread_local mpfr_prec_t prec = 256;
  return prec;
}
}  // namespace detail

Real Real::from_string(std::string_view s) {
  Real r;
  std::string tmp(s);
  if (mpfr_set_str(r.v_, tmp.c_str(), 10, MPFR_RNDN) != 0)
    throw DomainError("Real::from_string: unparsable decimal '" + tmp + "'");
  return r;
}

Real Real::operator-() const {
  Real r;
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

#define LI2LAB_BINOP(op, fn)                          \
  Real operator op(const Real& a, const Real& b) {   \
    Real r;                                           \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);         \
    return r;                                         \
  }
LI2LAB_BINOP(+, mpfr_add)
LI2LAB_BINOP(-, mpfr_sub)
LI2LAB_BINOP(*, mpfr_mul)
LI2LAB_BINOP(/, mpfr_div)
#undef LI2LAB_BINOP

Real operator+(const Real& a, long b) { Real r; mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator-(const Real& a, long b) { Real r; mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator*(const Real& a, long b) { Real r; mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
Real operator/(const Real& a, long b) { Real r; mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }

std::string Real::to_decimal(int digits) const {
  if (!is_finite()) return "nan";
  // mpfr_get_str with explicit exponent handling gives a stable fixed-point form.
  mpfr_exp_t e;
  int total = digits + 8;
  std::vector<char> buf(total + 16);
  char* s = mpfr_get_str(buf.data(), &e, 10, static_cast<size_t>(total), v_, MPFR_RNDN);
  std::string m(s);
  bool neg = !m.empty() && m[0] == '-';
  if (neg) m.erase(0, 1);
  std::string out;
  if (e <= 0) {
    out = "0." + std::string(static_cast<size_t>(-e), '0') + m;
  } else if (static_cast<size_t>(e) >= m.size()) {
    out = m + std::string(static_cast<size_t>(e) - m.size(), '0') + ".0";
  } else {
    out = m.substr(0, static_cast<size_t>(e)) + "." + m.substr(static_cast<size_t>(e));
  }
  // trim to the requested number of fractional digits
  size_t dot = out.find('.');
  if (dot != std::string::npos && out.size() > dot + 1 + static_cast<size_t>(digits))
    out.erase(dot + 1 + static_cast<size_t>(digits));
  return neg ? "-" + out : out;
}

#define LI2LAB_UNFN(name, fn)        \
  Real name(const Real& x) {         \
    Real r;                          \
    fn(r.raw(), x.raw(), MPFR_RNDN); \
    return r;                        \
  }
LI2LAB_UNFN(sqrt, mpfr_sqrt)
LI2LAB_UNFN(log1p, mpfr_log1p)
LI2LAB_UNFN(exp, mpfr_exp)
LI2LAB_UNFN(sin, mpfr_sin)
LI2LAB_UNFN(cos, mpfr_cos)
LI2LAB_UNFN(tan, mpfr_tan)
LI2LAB_UNFN(atan, mpfr_atan)
LI2LAB_UNFN(asin, mpfr_asin)
LI2LAB_UNFN(acosh, mpfr_acosh)
LI2LAB_UNFN(abs, mpfr_abs)
#undef LI2LAB_UNFN

Real floor(const Real& x) {
  Real r;
  mpfr_floor(r.raw(), x.raw());
  return r;
}

Real round_nearest(const Real& x) {
  Real r;
  mpfr_round(r.raw(), x.raw());
  return r;
}

Real ln(const Real& x) {
  if (x.sign() <= 0) throw DomainError("ln: argument must be positive on the real path");
  Real r;
  mpfr_log(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real atan2(const Real& y, const Real& x) {
  Real r;
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pow_si(const Real& x, long n) {
  Real r;
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

Real hypot(const Real& x, const Real& y) {
  Real r;
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

Real scope_epsilon() {
  Real r(1);
  mpfr_div_2ui(r.raw(), r.raw(), static_cast<unsigned long>(current_precision()), MPFR_RNDN);
  return r;
}

Real pow10(long e) {
  Real r;
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

}  // namespace li2lab
