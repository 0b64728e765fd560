#ifndef LI2LAB_ZETA_HPP
#define LI2LAB_ZETA_HPP

#include "li2lab/real.hpp"

namespace li2lab {

// Riemann zeta at real s != 1 (mpfr), ambient precision.
Real riemann_zeta(const Real& s);

// Hurwitz zeta(s, a) = sum_{n>=0} (n+a)^{-s} for real s > 1, a > 0, via
// Euler-Maclaurin at ambient precision. Used by the boundary-convergent
// hypergeometric tail and by the test oracles.
Real hurwitz_zeta(const Real& s, const Real& a);

}  // namespace li2lab

#endif
