#include "li2lab/relation.hpp"

#include <algorithm>
#include <cmath>

#include "li2lab/errors.hpp"

namespace li2lab {

namespace {

mpz_class to_mpz(const Real& x) {
  Real r = round_nearest(x);
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), r.raw(), MPFR_RNDN);
  return z;
}

struct Matrix {
  size_t rows, cols;
  std::vector<Real> a;
  Matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Real(0)) {}
  Real& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Real& at(size_t i, size_t j) const { return a[i * cols + j]; }
};

struct IMatrix {
  size_t rows, cols;
  std::vector<mpz_class> a;
  IMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, mpz_class(0)) {
    for (size_t i = 0; i < r && i < c; ++i) a[i * c + i] = 1;
  }
  mpz_class& at(size_t i, size_t j) { return a[i * cols + j]; }
};

}  // namespace

Real verify_relation(const std::vector<mpz_class>& coeffs, const std::vector<Real>& values,
                     const PrecisionContext& ctx) {
  if (coeffs.size() != values.size())
    throw DomainError("verify_relation: length mismatch");
  ScopedPrecision scope(ctx);
  Real acc(0);
  for (size_t i = 0; i < coeffs.size(); ++i) acc += Real(coeffs[i]) * values[i];
  return abs(acc);
}

RelationResult find_integer_relation(const RelationProblem& p, const PrecisionContext& ctx) {
  const size_t n = p.values.size();
  if (n < 2) throw DomainError("find_integer_relation: need at least two values");
  for (const auto& v : p.values)
    if (!v.is_finite()) throw DomainError("find_integer_relation: non-finite input");
  if (p.max_norm < 1) throw DomainError("find_integer_relation: max_norm must be positive");
  {
    double need = 20.0 + static_cast<double>(n) * std::log10(static_cast<double>(p.max_norm));
    if (p.digits_used < static_cast<int>(need))
      throw DomainError("find_integer_relation: digits_used below the working floor");
  }

  PrecisionContext work(p.digits_used, 25);
  ScopedPrecision scope(work);

  // gamma = 2/sqrt(3)
  Real gamma = Real(2) / sqrt(Real(3));
  Real detect_eps = pow10(-(p.digits_used - 10));

  // normalize input
  std::vector<Real> x;
  x.reserve(n);
  {
    Real norm(0);
    for (const auto& v : p.values) norm += v * v;
    norm = sqrt(norm);
    if (norm.is_zero()) throw DomainError("find_integer_relation: zero input vector");
    for (const auto& v : p.values) x.push_back(v / norm);
  }

  // partial norms s_k = sqrt(sum_{j>=k} x_j^2)
  std::vector<Real> s(n, Real(0));
  {
    Real acc(0);
    for (size_t k = n; k-- > 0;) {
      acc += x[k] * x[k];
      s[k] = sqrt(acc);
    }
  }
  std::vector<Real> y = x;

  Matrix H(n, n - 1);
  for (size_t j = 0; j < n - 1; ++j) {
    H.at(j, j) = s[j + 1] / s[j];
    for (size_t i = j + 1; i < n; ++i) H.at(i, j) = -(x[i] * x[j]) / (s[j] * s[j + 1]);
  }

  IMatrix A(n, n), B(n, n);

  auto reduce_entry = [&](size_t i, size_t j) {
    Real q = H.at(i, j) / H.at(j, j);
    mpz_class t = to_mpz(q);
    if (t == 0) return;
    Real rt(t);
    y[j] += rt * y[i];
    for (size_t k = 0; k <= j; ++k) H.at(i, k) -= rt * H.at(j, k);
    for (size_t k = 0; k < n; ++k) {
      A.at(i, k) -= t * A.at(j, k);
      B.at(k, j) += t * B.at(k, i);
    }
  };

  // full initial Hermite reduction
  for (size_t i = 1; i < n; ++i)
    for (size_t j = i; j-- > 0;) reduce_entry(i, j);

  Real bound_best(0);
  RelationResult result{std::nullopt, Real(0), Real(0), Real(0), 0};

  const long cap = 200000;
  for (long iter = 0; iter < cap; ++iter) {
    result.iterations = iter;

    // certified bound: any relation has norm >= 1 / max_j |H_jj|
    Real hmax(0);
    for (size_t j = 0; j < n - 1; ++j) {
      Real h = abs(H.at(j, j));
      if (h > hmax) hmax = h;
    }
    if (!hmax.is_zero()) {
      Real bound = Real(1) / hmax;
      if (bound > bound_best) bound_best = bound;
      if (bound > Real(p.max_norm)) {
        result.coeffs = std::nullopt;
        result.norm_bound = bound_best;
        return result;  // nothing with coefficients this small exists
      }
    }

    // detection: smallest |y| under the epsilon, with margin to the runner-up
    size_t imin = 0, isecond = 1;
    {
      Real best = abs(y[0]);
      Real second;
      bool have_second = false;
      for (size_t i = 1; i < n; ++i) {
        Real v = abs(y[i]);
        if (v < best) {
          second = best;
          isecond = imin;
          have_second = true;
          best = v;
          imin = i;
        } else if (!have_second || v < second) {
          second = v;
          isecond = i;
          have_second = true;
        }
      }
    }
    Real ymin = abs(y[imin]);
    Real ysecond = abs(y[isecond]);
    if (ymin < detect_eps) {
      Real margin = ymin.is_zero() ? pow10(p.digits_used) : ysecond / ymin;
      std::vector<mpz_class> c(n);
      for (size_t k = 0; k < n; ++k) c[k] = B.at(k, imin);
      // normalize: gcd 1, first nonzero positive
      mpz_class g(0);
      for (const auto& v : c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 0) throw PrecisionExhausted("pslq: zero candidate relation");
      for (auto& v : c) v /= g;
      for (const auto& v : c) {
        if (v != 0) {
          if (v < 0)
            for (auto& w : c) w = -w;
          break;
        }
      }
      Real resid = verify_relation(c, p.values, PrecisionContext(p.digits_used, 15));
      if (margin < pow10(20))
        throw PrecisionExhausted("pslq: candidate without confidence margin; raise digits_used");
      if (resid > pow10(-(p.digits_used / 2)))
        throw PrecisionExhausted("pslq: candidate residual too large; raise digits_used");
      long nmax = 0;
      for (const auto& v : c) {
        long av = std::llabs(v.get_si());
        if (mpz_sizeinbase(v.get_mpz_t(), 2) > 62) av = p.max_norm + 1;
        nmax = std::max(nmax, av);
      }
      if (nmax > p.max_norm)
        throw PrecisionExhausted("pslq: relation found but exceeds max_norm");
      result.coeffs = std::move(c);
      result.residual = resid;
      result.confidence_margin = margin;
      result.norm_bound = bound_best;
      return result;
    }

    // pivot: maximize gamma^i |H_ii|
    size_t r = 0;
    {
      Real best(-1);
      Real g(1);
      for (size_t i = 0; i < n - 1; ++i) {
        g *= gamma;
        Real v = g * abs(H.at(i, i));
        if (v > best) {
          best = v;
          r = i;
        }
      }
    }

    std::swap(y[r], y[r + 1]);
    for (size_t k = 0; k < n - 1; ++k) {
      Real t = H.at(r, k);
      H.at(r, k) = H.at(r + 1, k);
      H.at(r + 1, k) = t;
    }
    for (size_t k = 0; k < n; ++k) {
      std::swap(A.at(r, k), A.at(r + 1, k));
      std::swap(B.at(k, r), B.at(k, r + 1));
    }

    if (r + 1 < n - 1) {
      Real t0 = hypot(H.at(r, r), H.at(r, r + 1));
      if (!t0.is_zero()) {
        Real c0 = H.at(r, r) / t0;
        Real s0 = H.at(r, r + 1) / t0;
        for (size_t i = r; i < n; ++i) {
          Real t3 = H.at(i, r);
          Real t4 = H.at(i, r + 1);
          H.at(i, r) = c0 * t3 + s0 * t4;
          H.at(i, r + 1) = c0 * t4 - s0 * t3;
        }
      }
    }

    // restricted re-reduction
    for (size_t i = r + 1; i < n; ++i) {
      size_t jtop = std::min(i - 1, r + 1);
      for (size_t j = jtop + 1; j-- > 0;) {
        if (j > static_cast<size_t>(H.cols - 1)) continue;
        reduce_entry(i, j);
      }
    }
  }
  throw PrecisionExhausted("pslq: iteration cap reached without a decision");
}

}  // namespace li2lab
