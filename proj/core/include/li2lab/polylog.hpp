#ifndef LI2LAB_POLYLOG_HPP
#define LI2LAB_POLYLOG_HPP

#include "li2lab/complex.hpp"
#include "li2lab/context.hpp"

namespace li2lab {

enum class PolylogFunctionTag { li2, cl2, ti2, chi2, rogers_l, bloch_wigner };

// Dilogarithm, principal branch with cut [1, inf); on the cut the value is
// the limit from above (Im z -> 0+). Accurate to ctx.digits in absolute
// terms for |z| <= 1e3.
Complex li2(const Complex& z, const PrecisionContext& ctx);

// Clausen function Cl_2(theta) = Im Li2(e^{i theta}), reduced mod 2 pi.
Real cl2(const Real& theta, const PrecisionContext& ctx);

// Inverse tangent integral Ti_2(x) = (Li2(ix) - Li2(-ix)) / (2i).
Real ti2(const Real& x, const PrecisionContext& ctx);

// Legendre chi: chi_2(z) = (Li2(z) - Li2(-z)) / 2.
Complex chi2(const Complex& z, const PrecisionContext& ctx);

// Rogers L, normalized so L(1) = 1; domain [0, 1] with the endpoints by
// limit. DomainError outside.
Real rogers_l(const Real& x, const PrecisionContext& ctx);

// Bloch-Wigner D(z) = Im Li2(z) + arg(1-z) ln|z|; DomainError at 0 and 1.
Real bloch_wigner(const Complex& z, const PrecisionContext& ctx);

// Ambient-precision kernels.
Complex li2_kernel(const Complex& z);
Real cl2_kernel(const Real& theta);

}  // namespace li2lab

#endif
