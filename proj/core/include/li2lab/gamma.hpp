#ifndef LI2LAB_GAMMA_HPP
#define LI2LAB_GAMMA_HPP

#include "li2lab/complex.hpp"
#include "li2lab/context.hpp"

namespace li2lab {

// Gamma for complex argument, accurate to ctx.digits. Shifted Stirling
// series with exact Bernoulli coefficients; reflection for Re z <= 0.
// PoleError at non-positive integers.
Complex gamma(const Complex& z, const PrecisionContext& ctx);

// log Gamma (principal determination from the Stirling branch), Re z > 0.
Complex log_gamma(const Complex& z, const PrecisionContext& ctx);

// beta(p, q) = Gamma(p) Gamma(q) / Gamma(p+q), Re p > 0 and Re q > 0.
Complex beta(const Complex& p, const Complex& q, const PrecisionContext& ctx);

// Scope-precision kernels (ambient precision; used by hyper's tail machinery).
Complex log_gamma_kernel(const Complex& z);
Complex gamma_kernel(const Complex& z);
Real gamma_kernel(const Real& x);  // mpfr_gamma; PoleError at non-positive ints

}  // namespace li2lab

#endif
