#include "li2lab/hyper.hpp"

#include <algorithm>

#include "li2lab/bernoulli.hpp"
#include "li2lab/gamma.hpp"
#include "li2lab/zeta.hpp"

namespace li2lab {

mpq_class pochhammer(const mpq_class& x, unsigned long n) {
  mpq_class acc(1);
  mpq_class f = x;
  for (unsigned long k = 0; k < n; ++k) {
    acc *= f;
    f += 1;
  }
  acc.canonicalize();
  return acc;
}

mpq_class TermFactor::at(unsigned long n) const {
  auto eval = [n](const std::vector<mpq_class>& p) {
    mpq_class acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * static_cast<long>(n) + *it;
    return acc;
  };
  mpq_class d = eval(den);
  if (d == 0) throw DomainError("TermFactor: denominator vanishes at a summation index");
  mpq_class r = eval(num) / d;
  r.canonicalize();
  return r;
}

namespace {

bool is_nonpositive_int(const mpq_class& q) {
  return q.get_den() == 1 && q.get_num() <= 0;
}

void check_lower(const std::vector<mpq_class>& lower) {
  for (const auto& b : lower)
    if (is_nonpositive_int(b))
      throw DomainError("hypergeometric: lower parameter is a non-positive integer");
}

// Direct summation for |q| < 1 with a geometric tail certificate: once the
// per-step ratio modulus sits below rho_bar for a run of steps, the tail is
// bounded by |t| rho_bar / (1 - rho_bar).
Complex sum_geometric(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                      const Complex& q, const TermFactor* extra) {
  Real eps = scope_epsilon();
  Real qmag = abs(q);
  Real rho_bar = (Real(1) + qmag) / 2L;
  Real tail_scale = rho_bar / (Real(1) - rho_bar);

  Complex acc(0L);
  Complex t(1L);  // pochhammer-ratio part of the term, t_0 = 1
  int quiet = 0;
  for (unsigned long n = 0; n < 1000000UL; ++n) {
    Complex term = t;
    if (extra) term = term * Complex(Real(extra->at(n)));
    acc += term;

    mpq_class step(1);
    for (const auto& a : upper) step *= (a + static_cast<long>(n));
    for (const auto& b : lower) step /= (b + static_cast<long>(n));
    Complex tn = t * Complex(Real(step)) * q;

    Real mag = abs(tn);
    // extra(n) in this corpus is bounded by 1 in modulus for large n
    // (factors like 1/(n+1)); the pochhammer part dominates the tail.
    if (mag * tail_scale < eps && abs(Real(step)) * qmag <= rho_bar) {
      if (++quiet >= 4) return acc;
    } else {
      quiet = 0;
    }
    t = tn;
  }
  throw ConvergenceError("hypergeometric: iteration cap reached before the tail was certified");
}

// Unit-argument summation for series with algebraic decay t_n ~ C n^{-sigma}.
//
// Writing ln Gamma(n + a) with the Stirling/Bernoulli-polynomial expansion
// gives exact rationals e_k with
//   ln( t_n n^sigma / C ) = sum_k e_k n^{-k},
//   e_k = (-1)^{k+1}/(k(k+1)) [ sum_i B_{k+1}(a_i) - sum_j B_{k+1}(b_j) ],
// so t_n = C sum_j c_j n^{-sigma-j} with c = exp-series of e, and the tail
// past N is C sum_j c_j zeta(sigma+j, N). The j-series is asymptotic: it is
// truncated at its smallest term, N is raised until that term clears the
// target, and the two-anchor check in the test suite guards the heuristic.
Complex sum_boundary(std::vector<mpq_class> upper, std::vector<mpq_class> lower) {
  // decay exponent
  mpq_class sigma_q(0);
  for (const auto& b : lower) sigma_q += b;
  for (const auto& a : upper) sigma_q -= a;
  if (!(sigma_q > 1))
    throw ConvergenceError("hypergeometric: unit-argument series needs decay exponent > 1");
  Real sigma(sigma_q);

  // C = prod Gamma(b) / prod Gamma(a); parameters here are positive rationals.
  Real c_inf(1);
  for (const auto& b : lower) c_inf *= gamma_kernel(Real(b));
  for (const auto& a : upper) c_inf /= gamma_kernel(Real(a));

  Real eps = scope_epsilon();
  long wd = static_cast<long>(static_cast<double>(current_precision()) * 0.30103);
  long n_anchor = std::max<long>(40, wd / 2);

  for (int attempt = 0; attempt < 4; ++attempt, n_anchor *= 2) {
    // exact partial sum up to n_anchor-1 (numerically, recurrence in Real)
    Real partial(0);
    Real t(1);
    for (long n = 0; n < n_anchor; ++n) {
      partial += t;
      mpq_class step(1);
      for (const auto& a : upper) step *= (a + n);
      for (const auto& b : lower) step /= (b + n);
      t *= Real(step);
    }

    // exp-series coefficients c_j at working precision
    const unsigned kmax = 420;
    std::vector<Real> e(kmax + 1, Real(0));
    for (unsigned k = 1; k <= kmax; ++k) {
      mpq_class s(0);
      for (const auto& a : upper) s += bernoulli_polynomial(k + 1, a);
      for (const auto& b : lower) s -= bernoulli_polynomial(k + 1, b);
      s /= mpq_class(k) * mpq_class(k + 1);
      if ((k + 1) % 2 == 1) s = -s;  // (-1)^{k+1}
      e[k] = Real(s);
    }
    std::vector<Real> c(kmax + 1, Real(0));
    c[0] = Real(1);
    for (unsigned m = 1; m <= kmax; ++m) {
      Real acc(0);
      for (unsigned k = 1; k <= m; ++k) acc += Real(static_cast<long>(k)) * e[k] * c[m - k];
      c[m] = acc / static_cast<long>(m);
    }

    // tail = C sum_j c_j zeta(sigma + j, N), truncated at the smallest term
    Real anchor(n_anchor);
    Real tail(0);
    Real smallest;
    bool ok = false;
    Real prev_mag;
    bool have_prev = false;
    for (unsigned j = 0; j <= kmax; ++j) {
      Real term = c_inf * c[j] * hurwitz_zeta(sigma + static_cast<long>(j), anchor);
      Real mag = abs(term);
      if (have_prev && mag > prev_mag) {
        smallest = prev_mag;
        ok = smallest < eps * 16L;
        break;
      }
      tail += term;
      if (mag < eps) {
        ok = true;
        break;
      }
      prev_mag = mag;
      have_prev = true;
    }
    if (ok) return Complex(partial + tail);
  }
  throw ConvergenceError("hypergeometric: asymptotic tail did not reach the target accuracy");
}

Complex sum_series(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                   const Complex& q, const TermFactor* extra) {
  check_lower(lower);
  if (q.is_zero()) return extra ? Complex(Real(extra->at(0))) : Complex(1L);
  Real qmag = abs(q);
  if (qmag < Real(1)) return sum_geometric(upper, lower, q, extra);
  if (q == Complex(1L) && !extra) return sum_boundary(upper, lower);
  throw ConvergenceError("hypergeometric: argument outside the certified convergence domain");
}

}  // namespace

Complex pfq_kernel(const std::vector<mpq_class>& upper, const std::vector<mpq_class>& lower,
                   const Complex& z) {
  // fold 1/n! in as an extra lower parameter 1
  std::vector<mpq_class> lo = lower;
  lo.emplace_back(1);
  return sum_series(upper, lo, z, nullptr);
}

Complex eval_pfq(const SeriesSpec& spec, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return pfq_kernel(spec.upper, spec.lower, spec.argument);
}

Complex eval_bracket(const BracketSpec& spec, const std::optional<TermFactor>& extra,
                     const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  if (extra) return sum_series(spec.upper, spec.lower, spec.ratio_argument, &*extra);
  // [upper; lower]_n q^n = pFq with an upper 1 cancelling the n! factor
  std::vector<mpq_class> up = spec.upper;
  up.emplace_back(1);
  return pfq_kernel(up, spec.lower, spec.ratio_argument);
}

}  // namespace li2lab
