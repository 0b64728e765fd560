#ifndef LI2LAB_ALGEBRA_HPP
#define LI2LAB_ALGEBRA_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "li2lab/complex.hpp"
#include "li2lab/context.hpp"

namespace li2lab {

// Integer-coefficient univariate polynomial, constant term first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  // Text form: "x^6 - x^5 - x^4 - 6*x^3 - x^2 - x + 1". Whitespace-free or
  // not; implicit * between coefficient and x accepted.
  static IntPolynomial parse(std::string_view text);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  const mpz_class& leading() const { return c_.back(); }

  Complex eval(const Complex& z) const;
  Real eval(const Real& x) const;
  mpq_class eval(const mpq_class& x) const;
  IntPolynomial derivative() const;
  bool is_squarefree() const;
  std::string to_string() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  std::vector<mpz_class> c_{mpz_class(0)};
};

// Number of distinct real roots in the half-open interval (lo, hi].
int sturm_count(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

// Root selection region.
struct RootSelector {
  enum class Kind { real_interval, complex_rect, index };
  Kind kind = Kind::index;
  mpq_class lo, hi;                  // real_interval
  mpq_class re_lo, re_hi, im_lo, im_hi;  // complex_rect
  long idx = 0;                      // index under canonical (re, im) order
  std::optional<long> multiplicity_rank;  // which match when several

  static RootSelector interval(mpq_class a, mpq_class b);
  static RootSelector rect(mpq_class a, mpq_class b, mpq_class c, mpq_class d);
  static RootSelector index(long k);
  // Text forms: interval(a,b) | rect(a,b,c,d) | index(k)
  static RootSelector parse(std::string_view text);
  std::string to_string() const;
  // stable key for caches
  std::string key() const { return to_string(); }
};

struct AlgebraicValue {
  IntPolynomial poly;
  RootSelector selector;
  Complex value;
  int digits = 0;  // precision of `value`
};

// All `degree` roots in canonical order: sorted lexicographically by
// (re, im). Each root satisfies |poly(root)| below the certification bound.
std::vector<Complex> roots_all(const IntPolynomial& poly, const PrecisionContext& ctx);

// The unique root in the selector region, refined to ctx.digits.
// AmbiguousRootError / NoRootError per the region contents.
AlgebraicValue select_root(const IntPolynomial& poly, const RootSelector& sel,
                           const PrecisionContext& ctx);

// Re-refine an existing AlgebraicValue to a (possibly higher) precision.
AlgebraicValue refine(const AlgebraicValue& v, const PrecisionContext& ctx);

Complex eval_poly(const IntPolynomial& poly, const Complex& z, const PrecisionContext& ctx);

}  // namespace li2lab

#endif
