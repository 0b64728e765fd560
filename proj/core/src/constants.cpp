#include "li2lab/constants.hpp"

namespace li2lab {

Real pi_value() {
  Real r;
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real ln2_value() {
  Real r;
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

Real zeta2_value() {
  Real p = pi_value();
  return p * p / 6L;
}

Real zeta3_value() {
  Real r;
  mpfr_zeta_ui(r.raw(), 3, MPFR_RNDN);
  return r;
}

Real catalan_value() {
  Real r;
  mpfr_const_catalan(r.raw(), MPFR_RNDN);
  return r;
}

Real euler_e_value() {
  Real one(1);
  return exp(one);
}

Real const_value(ConstantTag tag, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  switch (tag) {
    case ConstantTag::pi: return pi_value();
    case ConstantTag::ln2: return ln2_value();
    case ConstantTag::zeta2: return zeta2_value();
    case ConstantTag::zeta3: return zeta3_value();
    case ConstantTag::catalan: return catalan_value();
    case ConstantTag::euler_e: return euler_e_value();
  }
  throw DomainError("const_value: unknown tag");
}

}  // namespace li2lab
