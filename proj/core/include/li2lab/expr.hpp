#ifndef LI2LAB_EXPR_HPP
#define LI2LAB_EXPR_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "li2lab/algebra.hpp"
#include "li2lab/complex.hpp"
#include "li2lab/constants.hpp"
#include "li2lab/context.hpp"

namespace li2lab {

enum class Func {
  li2, cl2, ti2, chi2, rogers_l, bloch_wigner,
  ln, sqrt_fn, exp_fn, arctan, arccot, arcsin, arccosh,
  re_part, im_part, arg_fn, abs_fn, conj_fn
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
 public:
  enum class Kind {
    literal, constant, imag_unit, param,
    neg, add, sub, mul, div, pow,
    call, root, pfq
  };

  Kind kind;
  mpq_class lit;                      // literal
  ConstantTag ctag{};                 // constant
  std::string name;                   // param
  Func fn{};                          // call
  std::vector<ExprPtr> args;          // call / binary (a, b) / unary (a)
  std::string poly_text;              // root
  RootSelector selector;              // root
  std::vector<mpq_class> upper, lower;  // pfq

  static ExprPtr make(Kind k) { return std::make_shared<Expr>(Expr{.kind = k}); }
};

// Parse per the corpus grammar:
//   expr   := term (("+"|"-") term)*
//   term   := factor (("*"|"/") factor)*
//   factor := atom ("^" factor)? | "-" factor
//   atom   := NUMBER | pi | i | e | catalan | zeta2 | zeta3 | ln2 | IDENT
//           | func "(" expr ("," expr)* ")"
//           | root "(" STRING "," selector ")"
//           | pfq "(" rats ";" rats ";" expr ")"
//           | "(" expr ")"
// Rejects anything else with a position-annotated SyntaxError.
ExprPtr parse(std::string_view text);

// Canonical printing; parse(print(e)) is structurally identical to e.
std::string print(const ExprPtr& e);

std::set<std::string> free_params(const ExprPtr& e);

using Binding = std::map<std::string, Complex>;

// Evaluation options: the branch-override hooks used by the harness.
struct EvalOptions {
  // Flip the principal square root at these call sites (0-based, in
  // depth-first evaluation order).
  std::set<int> conjugate_sqrt_sites;
};

Complex evaluate(const ExprPtr& e, const Binding& b, const PrecisionContext& ctx);
Complex evaluate(const ExprPtr& e, const Binding& b, const PrecisionContext& ctx,
                 const EvalOptions& opts);

// Root values are cached per (poly, selector, digits) so repeated
// evaluation does not re-isolate. Exposed for tests.
size_t root_cache_size();

}  // namespace li2lab

#endif
