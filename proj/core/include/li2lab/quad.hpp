#ifndef LI2LAB_QUAD_HPP
#define LI2LAB_QUAD_HPP

#include "li2lab/expr.hpp"

namespace li2lab {

// Finite-interval integrand: an expression in `var` plus free parameters
// supplied through the binding. Endpoint singularities up to logarithmic /
// algebraic strength are fine; interior singularities are not supported.
struct IntegralSpec {
  ExprPtr integrand;
  std::string var = "x";
  mpq_class lo{0};
  mpq_class hi{1};
  bool singular_lo = false;
  bool singular_hi = false;
};

struct QuadResult {
  Complex value;
  Real error_estimate;
  int levels = 0;
};

// Tanh-sinh (double-exponential) quadrature with level doubling; the error
// estimate is the last inter-level difference. NoConvergence if the level
// cap is reached before `tol`.
QuadResult integrate(const IntegralSpec& spec, const Binding& binding,
                     const PrecisionContext& ctx, const Real& tol);

}  // namespace li2lab

#endif
