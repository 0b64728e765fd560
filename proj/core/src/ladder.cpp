#include "li2lab/ladder.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "li2lab/polylog.hpp"

namespace li2lab {

namespace {

mpq_class rational_from_string(const std::string& s) {
  mpq_class q(s);
  q.canonicalize();
  return q;
}

// exact division by (x - 1); throws if the remainder is nonzero
std::vector<mpz_class> divide_by_x_minus_1(const std::vector<mpz_class>& c) {
  std::vector<mpz_class> q(c.size() - 1, mpz_class(0));
  mpz_class carry(0);
  for (size_t i = c.size(); i-- > 1;) {
    carry += c[i];
    q[i - 1] = carry;
  }
  carry += c[0];
  if (carry != 0) throw DomainError("three_term_base: (h-1) deflation failed");
  return q;
}

}  // namespace

Real verify_ladder(const LadderSpec& spec, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (spec.terms.empty()) throw DomainError("verify_ladder: no Li2 terms");
  AlgebraicValue base = select_root(spec.base_poly, spec.selector, ctx);
  const Complex& v = base.value;

  Complex acc(0L);
  for (const auto& t : spec.terms) {
    if (t.power == 0) throw DomainError("verify_ladder: zero power");
    acc += Complex(Real(t.coeff)) * li2_kernel(pow_int(v, t.power));
  }
  if (spec.log2_coeff != 0) {
    Complex l = ln(v);
    acc += Complex(Real(spec.log2_coeff)) * l * l;
  }
  Binding b{{"base", v}};
  for (const auto& ex : spec.extra) acc += evaluate(parse(ex), b, ctx);
  Complex rhs = evaluate(parse(spec.rhs), b, ctx);
  Complex resid = acc - rhs;
  return spec.real_part ? abs(resid.re()) : abs(resid);
}

IntPolynomial three_term_base(long m) {
  if (m == 0 || m == -1) throw DomainError("three_term_base: m must not be 0 or -1");
  if (m >= 1) {
    // h^{2m+1} + h^{m+2} - 3 h^{m+1} + 1
    std::vector<mpz_class> c(static_cast<size_t>(2 * m + 2), mpz_class(0));
    c[0] = 1;
    c[static_cast<size_t>(2 * m + 1)] += 1;
    c[static_cast<size_t>(m + 2)] += 1;
    c[static_cast<size_t>(m + 1)] += -3;
    return IntPolynomial(std::move(c));
  }
  // m <= -2: multiply by h^{2|m|-1}, then strip the (h-1)^2 the clearing
  // introduces:  1 + h^{m'+1} - 3 h^{m'} + h^{2m'-1},  m' = -m
  long mp = -m;
  std::vector<mpz_class> c(static_cast<size_t>(2 * mp), mpz_class(0));
  c[0] = 1;
  c[static_cast<size_t>(mp + 1)] += 1;
  c[static_cast<size_t>(mp)] += -3;
  c[static_cast<size_t>(2 * mp - 1)] += 1;
  auto q = divide_by_x_minus_1(c);
  q = divide_by_x_minus_1(q);
  return IntPolynomial(std::move(q));
}

IntPolynomial six_term_base(long m) {
  if (m < 2) throw DomainError("six_term_base: m must be >= 2");
  // h^{2m} - h^{2m-1} - h^{m+1} - 6 h^m - h^{m-1} - h + 1
  std::vector<mpz_class> c(static_cast<size_t>(2 * m + 1), mpz_class(0));
  c[static_cast<size_t>(2 * m)] += 1;
  c[static_cast<size_t>(2 * m - 1)] += -1;
  c[static_cast<size_t>(m + 1)] += -1;
  c[static_cast<size_t>(m)] += -6;
  c[static_cast<size_t>(m - 1)] += -1;
  c[1] += -1;
  c[0] += 1;
  return IntPolynomial(std::move(c));
}

std::pair<AlgebraicValue, AlgebraicValue> radius_solve(const RadiusConstraint& c,
                                                       const PrecisionContext& ctx) {
  if (c.sign != 1 && c.sign != -1) throw DomainError("radius_solve: sign must be +-1");
  IntPolynomial a = IntPolynomial::parse(c.sqrt_poly);
  IntPolynomial bp = IntPolynomial::parse(c.den_poly);

  // sqrt(A)/B = +-i sqrt(3)  =>  A = -3 B^2  =>  A + 3 B^2 = 0
  std::vector<mpz_class> cleared(
      static_cast<size_t>(std::max(a.degree(), 2 * bp.degree())) + 1, mpz_class(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) cleared[i] += a.coeffs()[i];
  for (size_t i = 0; i < bp.coeffs().size(); ++i)
    for (size_t j = 0; j < bp.coeffs().size(); ++j)
      cleared[i + j] += 3 * bp.coeffs()[i] * bp.coeffs()[j];
  IntPolynomial u_poly(std::move(cleared));
  if (u_poly.degree() < 1) throw NoRootError("radius_solve: constraint has no root");

  ScopedPrecision scope(ctx);
  std::vector<Complex> roots = roots_all(u_poly, ctx);

  // admissible: real u with |u| > 1 (so the radius is a positive real) and
  // the radius lands on one of the catalog quartics
  IntPolynomial cat1 = IntPolynomial::parse("x^4-x^3-6*x^2-x+1");
  IntPolynomial cat2 = IntPolynomial::parse("x^4+x^3-6*x^2+x+1");
  Real tol = pow10(-(ctx.digits - 8));

  struct Cand {
    Real u;
    Real r;
    const IntPolynomial* catalog;
  };
  std::vector<Cand> cands;
  for (const auto& z : roots) {
    if (!z.is_real()) continue;
    const Real& u = z.re();
    if (u <= Real(1)) continue;
    Real r = sqrt((u - 1L) / (u + 1L));
    const IntPolynomial* cat = nullptr;
    if (abs(cat1.eval(r)) < tol) cat = &cat1;
    else if (abs(cat2.eval(r)) < tol) cat = &cat2;
    if (!cat) continue;
    // numeric verification of the radical reduction at this root
    Complex sq = sqrt(Complex(a.eval(u)));
    Complex ratio = sq / Complex(bp.eval(u));
    Complex ratio_sq = ratio * ratio;
    if (abs(ratio_sq + Complex(3L)) > tol)
      throw DomainError("radius_solve: cleared polynomial does not reproduce the constraint");
    cands.push_back(Cand{u, r, cat});
  }
  if (cands.empty()) throw NoRootError("radius_solve: no admissible root");

  // The source labels the two branches by the written sign of i sqrt(3):
  // '-' selects the outer root (larger u), '+' the inner one.
  std::sort(cands.begin(), cands.end(),
            [](const Cand& x, const Cand& y) { return x.u < y.u; });
  const Cand& pick = (c.sign < 0) ? cands.back() : cands.front();

  auto bracket = [](const Real& v) {
    // rational window +-1/64 around v; catalog roots are well separated
    mpq_class mid(v.to_double());
    mpq_class w(1, 64);
    return RootSelector::interval(mid - w, mid + w);
  };
  AlgebraicValue uval = select_root(u_poly, bracket(pick.u), ctx);
  AlgebraicValue rval = select_root(*pick.catalog, bracket(pick.r), ctx);
  return {uval, rval};
}

LadderSpec ladder_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  LadderSpec s;
  s.id = j.at("id").get<std::string>();
  s.base_poly = IntPolynomial::parse(j.at("base_poly").get<std::string>());
  s.selector = RootSelector::parse(j.at("selector").get<std::string>());
  for (const auto& t : j.at("terms")) {
    LadderTerm term;
    term.power = t.at(0).get<long>();
    if (t.at(1).is_string())
      term.coeff = rational_from_string(t.at(1).get<std::string>());
    else
      term.coeff = mpq_class(t.at(1).get<long>());
    s.terms.push_back(term);
  }
  if (j.contains("log2_coeff")) {
    const auto& lc = j.at("log2_coeff");
    s.log2_coeff = lc.is_string() ? rational_from_string(lc.get<std::string>())
                                  : mpq_class(lc.get<long>());
  }
  if (j.contains("extra"))
    for (const auto& e : j.at("extra")) s.extra.push_back(e.get<std::string>());
  if (j.contains("rhs")) s.rhs = j.at("rhs").get<std::string>();
  if (j.contains("real_part")) s.real_part = j.at("real_part").get<bool>();
  if (j.contains("paper_ref")) s.paper_ref = j.at("paper_ref").get<std::string>();
  if (j.contains("status")) s.status = j.at("status").get<std::string>();
  return s;
}

LadderSpec ladder_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("ladder_from_file: cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ladder_from_json_text(ss.str());
}

std::string ladder_to_json_text(const LadderSpec& s) {
  nlohmann::json j;
  j["id"] = s.id;
  j["base_poly"] = s.base_poly.to_string();
  j["selector"] = s.selector.to_string();
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms)
    terms.push_back({t.power, t.coeff.get_str()});
  j["terms"] = terms;
  j["log2_coeff"] = s.log2_coeff.get_str();
  j["extra"] = s.extra;
  j["rhs"] = s.rhs;
  if (s.real_part) j["real_part"] = true;
  j["paper_ref"] = s.paper_ref;
  j["status"] = s.status;
  return j.dump(2);
}

}  // namespace li2lab
