#ifndef LI2LAB_RELATION_HPP
#define LI2LAB_RELATION_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "li2lab/context.hpp"
#include "li2lab/real.hpp"

namespace li2lab {

struct RelationProblem {
  std::vector<Real> values;
  long max_norm = 1000;
  int digits_used = 60;
};

struct RelationResult {
  // gcd-normalized, first nonzero entry positive; nullopt when no relation
  // with coefficients up to max_norm exists at this precision.
  std::optional<std::vector<mpz_class>> coeffs;
  Real residual;
  Real confidence_margin;  // second-smallest candidate bound / smallest
  Real norm_bound;         // certified lower bound on any relation when coeffs is empty
  long iterations = 0;
};

// PSLQ with gamma = 2/sqrt(3) and standard Hermite reduction.
// PrecisionExhausted when a candidate appears without enough margin to
// accept and the iteration cannot make further progress.
RelationResult find_integer_relation(const RelationProblem& p, const PrecisionContext& ctx);

// |sum_i coeffs_i values_i| at ctx digits.
Real verify_relation(const std::vector<mpz_class>& coeffs, const std::vector<Real>& values,
                     const PrecisionContext& ctx);

}  // namespace li2lab

#endif
