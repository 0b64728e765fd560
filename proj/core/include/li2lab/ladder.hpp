#ifndef LI2LAB_LADDER_HPP
#define LI2LAB_LADDER_HPP

#include <string>
#include <utility>
#include <vector>

#include "li2lab/algebra.hpp"
#include "li2lab/expr.hpp"

namespace li2lab {

// One Li2 term of a ladder: coeff * Li2(base^power).
struct LadderTerm {
  long power = 1;
  mpq_class coeff{1};
};

// A dilogarithm ladder relation:
//   sum_i coeff_i Li2(base^power_i) + log2_coeff ln^2(base)
//     + sum(extra expressions in `base`)  =  rhs(base)
// When real_part is set the residual is taken on the real part only (the
// source states some complex-base ladders modulo imaginary parts).
struct LadderSpec {
  std::string id;
  IntPolynomial base_poly;
  RootSelector selector;
  std::vector<LadderTerm> terms;
  mpq_class log2_coeff{0};
  std::vector<std::string> extra;
  std::string rhs = "0";
  bool real_part = false;
  std::string paper_ref;
  std::string status = "verified";
};

// Residual |lhs - rhs| at ctx digits.
Real verify_ladder(const LadderSpec& spec, const PrecisionContext& ctx);

// JSON loading (one relation per file); format documented in the README.
LadderSpec ladder_from_json_text(const std::string& text);
LadderSpec ladder_from_file(const std::string& path);
std::string ladder_to_json_text(const LadderSpec& spec);

// Base equation (h^m + h - 3) h^{m+1} + 1 = 0 expanded to an integer
// polynomial; negative m clears denominators and removes the trivial
// (h-1)^2 factor introduced by the clearing. Requires m not in {0, -1}.
IntPolynomial three_term_base(long m);

// Base equation (h-1) h^{2m-1} = (h(h+6)+1) h^{m-1} + h - 1, m >= 2.
IntPolynomial six_term_base(long m);

// Surd-ratio constraint sqrt(A(u))/B(u) = sign * i sqrt(3).
struct RadiusConstraint {
  std::string sqrt_poly;  // A, polynomial text in x
  std::string den_poly;   // B
  int sign = -1;          // -1 or +1 on i sqrt(3)
};

// Solves the constraint: clears radicals to an integer polynomial in u,
// picks the admissible root, and returns u together with the ladder radius
// r = sqrt((u-1)/(u+1)) matched to its catalog quartic by residual test.
std::pair<AlgebraicValue, AlgebraicValue> radius_solve(const RadiusConstraint& c,
                                                       const PrecisionContext& ctx);

}  // namespace li2lab

#endif
