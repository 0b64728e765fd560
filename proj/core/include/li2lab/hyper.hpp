#ifndef LI2LAB_HYPER_HPP
#define LI2LAB_HYPER_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "li2lab/complex.hpp"
#include "li2lab/context.hpp"

namespace li2lab {

// Generalized hypergeometric series pFq with rational parameters:
//   sum_n prod (a_i)_n / prod (b_j)_n * z^n / n!
struct SeriesSpec {
  std::vector<mpq_class> upper;
  std::vector<mpq_class> lower;
  Complex argument;
};

// Pochhammer-ratio series sum_n q^n [upper; lower]_n (no n! factor).
struct BracketSpec {
  std::vector<mpq_class> upper;
  std::vector<mpq_class> lower;
  Complex ratio_argument;
};

// Per-term rational factor extra(n) = num(n)/den(n), polynomials in n with
// exact rational coefficients, constant term first.
struct TermFactor {
  std::vector<mpq_class> num{mpq_class(1)};
  std::vector<mpq_class> den{mpq_class(1)};
  mpq_class at(unsigned long n) const;
};

// (x)_0 = 1, (x)_n = x (x+1) ... (x+n-1), exact.
mpq_class pochhammer(const mpq_class& x, unsigned long n);

Complex eval_pfq(const SeriesSpec& spec, const PrecisionContext& ctx);
Complex eval_bracket(const BracketSpec& spec, const std::optional<TermFactor>& extra,
                     const PrecisionContext& ctx);

// Ambient-precision kernel used by the expression evaluator.
Complex pfq_kernel(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                   const Complex& z);

}  // namespace li2lab

#endif
