#ifndef LI2LAB_CONSTANTS_HPP
#define LI2LAB_CONSTANTS_HPP

#include "li2lab/context.hpp"
#include "li2lab/real.hpp"

namespace li2lab {

enum class ConstantTag { pi, ln2, zeta2, zeta3, catalan, euler_e };

// Value of the tagged constant, correct to ctx.digits.
Real const_value(ConstantTag tag, const PrecisionContext& ctx);

// Scope-precision constants for internal use (no context round trip).
Real pi_value();
Real ln2_value();
Real zeta2_value();
Real zeta3_value();
Real catalan_value();
Real euler_e_value();

}  // namespace li2lab

#endif
