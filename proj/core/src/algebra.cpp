#include "li2lab/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "li2lab/constants.hpp"
#include "li2lab/errors.hpp"

namespace li2lab {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
  if (c_.empty()) c_.assign(1, mpz_class(0));
}

Complex IntPolynomial::eval(const Complex& z) const {
  Complex acc(0L);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + Complex(Real(mpz_class(*it)));
  return acc;
}

Real IntPolynomial::eval(const Real& x) const {
  Real acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Real(mpz_class(*it));
  return acc;
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
  mpq_class acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + mpq_class(*it);
  acc.canonicalize();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (degree() < 1) return IntPolynomial({mpz_class(0)});
  std::vector<mpz_class> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return IntPolynomial(std::move(d));
}

namespace {

using QPoly = std::vector<mpq_class>;  // constant first

QPoly to_qpoly(const IntPolynomial& p) {
  QPoly q;
  q.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) q.emplace_back(c);
  return q;
}

void normalize(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

mpq_class qeval(const QPoly& p, const mpq_class& x) {
  mpq_class acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

// -(remainder of a / b), as used in the Sturm chain.
QPoly neg_rem(QPoly a, const QPoly& b) {
  normalize(a);
  while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
    mpq_class f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    normalize(a);
    if (a.size() == 1 && a[0] == 0) break;
    if (a.size() - 1 < b.size() - 1) break;
  }
  for (auto& c : a) c = -c;
  return a;
}

std::vector<QPoly> sturm_chain(const IntPolynomial& p) {
  std::vector<QPoly> chain;
  chain.push_back(to_qpoly(p));
  chain.push_back(to_qpoly(p.derivative()));
  normalize(chain[0]);
  normalize(chain[1]);
  while (!(chain.back().size() == 1 && chain.back()[0] == 0)) {
    const QPoly& a = chain[chain.size() - 2];
    const QPoly& b = chain.back();
    QPoly r = neg_rem(a, b);
    normalize(r);
    if (r.size() == 1 && r[0] == 0) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_changes(const std::vector<QPoly>& chain, const mpq_class& x) {
  int changes = 0, prev = 0;
  for (const auto& p : chain) {
    mpq_class v = qeval(p, x);
    int s = sgn(v);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

bool IntPolynomial::is_squarefree() const {
  if (degree() < 2) return true;
  // gcd(p, p') over Q via the Sturm-style remainder chain: squarefree iff
  // the chain terminates in a nonzero constant.
  auto chain = sturm_chain(*this);
  return chain.back().size() == 1 && chain.back()[0] != 0;
}

int sturm_count(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
  auto chain = sturm_chain(p);
  return sign_changes(chain, lo) - sign_changes(chain, hi);
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  // terms: [sign] [integer] ['*'] ['x' ['^' exponent]]
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw SyntaxError(0, "polynomial");
  size_t i = 0;
  std::vector<mpz_class> coeffs;
  auto bump = [&coeffs](unsigned long e, const mpz_class& c) {
    if (coeffs.size() <= e) coeffs.resize(e + 1, mpz_class(0));
    coeffs[e] += c;
  };
  while (i < s.size()) {
    int sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    if (i >= s.size()) throw SyntaxError(i, "term after sign");
    std::string digits;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits.push_back(s[i++]);
    mpz_class coef = digits.empty() ? mpz_class(1) : mpz_class(digits);
    if (sign < 0) coef = -coef;
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'x') {
      ++i;
      unsigned long e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        std::string ed;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ed.push_back(s[i++]);
        if (ed.empty()) throw SyntaxError(i, "exponent");
        e = std::stoul(ed);
      }
      bump(e, coef);
    } else {
      if (digits.empty()) throw SyntaxError(i, "coefficient or x");
      bump(0, coef);
    }
  }
  IntPolynomial p(std::move(coeffs));
  if (p.degree() == 0 && p.coeffs()[0] == 0) throw SyntaxError(0, "nonzero polynomial");
  return p;
}

std::string IntPolynomial::to_string() const {
  std::string out;
  for (int e = degree(); e >= 0; --e) {
    const mpz_class& c = c_[static_cast<size_t>(e)];
    if (c == 0 && degree() > 0) continue;
    mpz_class a = c < 0 ? mpz_class(-c) : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    if (a != 1 || e == 0) {
      out += a.get_str();
      if (e > 0) out += "*";
    }
    if (e > 1) out += "x^" + std::to_string(e);
    else if (e == 1) out += "x";
  }
  return out.empty() ? "0" : out;
}

RootSelector RootSelector::interval(mpq_class a, mpq_class b) {
  RootSelector s;
  s.kind = Kind::real_interval;
  s.lo = std::move(a);
  s.hi = std::move(b);
  if (!(s.lo < s.hi)) throw DomainError("RootSelector: empty interval");
  return s;
}

RootSelector RootSelector::rect(mpq_class a, mpq_class b, mpq_class c, mpq_class d) {
  RootSelector s;
  s.kind = Kind::complex_rect;
  s.re_lo = std::move(a);
  s.re_hi = std::move(b);
  s.im_lo = std::move(c);
  s.im_hi = std::move(d);
  if (!(s.re_lo < s.re_hi) || !(s.im_lo < s.im_hi)) throw DomainError("RootSelector: empty rect");
  return s;
}

RootSelector RootSelector::index(long k) {
  RootSelector s;
  s.kind = Kind::index;
  s.idx = k;
  return s;
}

namespace {
mpq_class parse_rational_token(std::string_view t, size_t base_pos) {
  std::string s(t);
  // strip spaces
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw SyntaxError(base_pos, "number");
  // decimal form -> exact rational
  auto dot = s.find('.');
  try {
    if (dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      long scale = static_cast<long>(s.size() - dot - 1);
      mpz_class num(digits);
      mpz_class den(1);
      for (long i = 0; i < scale; ++i) den *= 10;
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    mpq_class q(s);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw SyntaxError(base_pos, "number");
  }
}
}  // namespace

RootSelector RootSelector::parse(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  auto args_of = [&s](std::string_view head) -> std::optional<std::vector<mpq_class>> {
    if (s.rfind(head, 0) != 0) return std::nullopt;
    if (s.back() != ')') throw SyntaxError(s.size(), ")");
    std::string inner = s.substr(head.size(), s.size() - head.size() - 1);
    std::vector<mpq_class> args;
    size_t start = 0;
    while (start <= inner.size()) {
      size_t comma = inner.find(',', start);
      std::string tok = inner.substr(start, comma == std::string::npos ? std::string::npos
                                                                       : comma - start);
      args.push_back(parse_rational_token(tok, start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return args;
  };
  if (auto a = args_of("interval(")) {
    if (a->size() != 2) throw SyntaxError(0, "interval(lo, hi)");
    return interval((*a)[0], (*a)[1]);
  }
  if (auto a = args_of("rect(")) {
    if (a->size() != 4) throw SyntaxError(0, "rect(re_lo, re_hi, im_lo, im_hi)");
    return rect((*a)[0], (*a)[1], (*a)[2], (*a)[3]);
  }
  if (auto a = args_of("index(")) {
    if (a->size() != 1 || (*a)[0].get_den() != 1) throw SyntaxError(0, "index(k)");
    return index(static_cast<long>((*a)[0].get_num().get_si()));
  }
  throw SyntaxError(0, "interval(...), rect(...) or index(...)");
}

std::string RootSelector::to_string() const {
  auto q = [](const mpq_class& v) { return v.get_str(); };
  switch (kind) {
    case Kind::real_interval: return "interval(" + q(lo) + "," + q(hi) + ")";
    case Kind::complex_rect:
      return "rect(" + q(re_lo) + "," + q(re_hi) + "," + q(im_lo) + "," + q(im_hi) + ")";
    case Kind::index: return "index(" + std::to_string(idx) + ")";
  }
  return "?";
}

namespace {

// Aberth-Ehrlich simultaneous iteration. Deterministic start: scaled roots
// of unity with a fixed angular offset so no starting point is real.
std::vector<Complex> aberth(const IntPolynomial& p) {
  int n = p.degree();
  IntPolynomial dp = p.derivative();
  // Cauchy bound 1 + max |c_i / c_n|
  Real bound(1);
  Real lead = abs(Real(p.leading()));
  for (int i = 0; i < n; ++i) {
    Real t = abs(Real(p.coeffs()[static_cast<size_t>(i)])) / lead;
    if (t > bound) bound = t;
  }
  bound += 1L;

  Real two_pi = pi_value() * 2L;
  std::vector<Complex> z(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) {
    Real theta = two_pi * Real(2 * k + 1) / Real(2 * n) + Real(mpq_class(1, 3));
    z[static_cast<size_t>(k)] = Complex(bound * cos(theta), bound * sin(theta));
  }

  Real eps = scope_epsilon();
  Real stop = eps * 64L;
  for (int iter = 0; iter < 500; ++iter) {
    Real worst(0);
    for (int k = 0; k < n; ++k) {
      Complex& zk = z[static_cast<size_t>(k)];
      Complex pv = p.eval(zk);
      if (pv.is_zero()) continue;
      Complex dv = dp.eval(zk);
      Complex newton = dv.is_zero() ? Complex(Real(mpq_class(1, 1000))) : pv / dv;
      Complex sum(0L);
      for (int j = 0; j < n; ++j) {
        if (j == k) continue;
        Complex d = zk - z[static_cast<size_t>(j)];
        if (d.is_zero()) d = Complex(eps, eps);  // nudge coincident iterates
        sum += inverse(d);
      }
      Complex denom = Complex(1L) - newton * sum;
      Complex w = denom.is_zero() ? newton : newton / denom;
      zk -= w;
      Real mag = abs(w) / (abs(zk) + Real(1));
      if (mag > worst) worst = mag;
    }
    if (worst < stop) break;
  }
  return z;
}

struct CanonicalLess {
  bool operator()(const Complex& a, const Complex& b) const {
    if (a.re() < b.re()) return true;
    if (b.re() < a.re()) return false;
    return a.im() < b.im();
  }
};

}  // namespace

std::vector<Complex> roots_all(const IntPolynomial& poly, const PrecisionContext& ctx) {
  if (poly.degree() < 1) throw DomainError("roots_all: degree must be >= 1");
  if (!poly.is_squarefree())
    throw DomainError("roots_all: polynomial is not squarefree (gcd(p, p') check)");

  // extra headroom for the iteration itself
  ScopedPrecision scope(ctx.bits() + 64);
  std::vector<Complex> z = aberth(poly);
  int n = poly.degree();

  // Real-root snapping: a tiny imaginary part plus a Sturm certificate on a
  // small rational window pins the root to the axis, then Newton refines it
  // on the real line (keeps canonical ordering exactly stable).
  Real snap_window(mpq_class(1, 1000));
  IntPolynomial dp = poly.derivative();
  for (auto& r : z) {
    if (abs(r.im()) < snap_window) {
      double mid = r.re().to_double();
      mpq_class lo(mpq_class(static_cast<long>(mid * 1000) - 2, 1000));
      mpq_class hi(mpq_class(static_cast<long>(mid * 1000) + 2, 1000));
      if (sturm_count(poly, lo, hi) == 1) {
        Real x = r.re();
        for (int it = 0; it < 200; ++it) {
          Real f = poly.eval(x);
          Real d = dp.eval(x);
          if (d.is_zero()) break;
          Real step = f / d;
          x -= step;
          if (abs(step) < scope_epsilon() * (abs(x) + Real(1)) * 4L) break;
        }
        r = Complex(x);
      }
    }
  }

  // Enforce exact conjugate symmetry for the remaining complex roots.
  std::vector<bool> used(static_cast<size_t>(n), false);
  for (int i = 0; i < n; ++i) {
    if (used[static_cast<size_t>(i)] || z[static_cast<size_t>(i)].is_real()) continue;
    if (z[static_cast<size_t>(i)].im().sign() < 0) continue;
    int best = -1;
    Real best_d;
    for (int j = 0; j < n; ++j) {
      if (j == i || used[static_cast<size_t>(j)] || z[static_cast<size_t>(j)].is_real()) continue;
      if (z[static_cast<size_t>(j)].im().sign() > 0) continue;
      Real d = abs(z[static_cast<size_t>(j)] - conj(z[static_cast<size_t>(i)]));
      if (best < 0 || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    if (best >= 0) {
      Complex avg = (z[static_cast<size_t>(i)] + conj(z[static_cast<size_t>(best)])) *
                    Complex(mpq_class(1, 2));
      z[static_cast<size_t>(i)] = avg;
      z[static_cast<size_t>(best)] = conj(avg);
      used[static_cast<size_t>(i)] = used[static_cast<size_t>(best)] = true;
    }
  }

  std::sort(z.begin(), z.end(), CanonicalLess{});

  // Certification: |p(root)| must clear the precision-scaled bound.
  Real cert = pow10(-(ctx.digits - 4));
  Real scale = abs(Real(poly.leading()));
  for (const auto& r : z) {
    Real m = abs(r) + Real(1);
    Real residual = abs(poly.eval(r));
    if (residual > cert * scale * pow_si(m, poly.degree()))
      throw ConvergenceError("roots_all: root failed certification at " + r.to_decimal(20));
  }

  // round down to the context precision
  ScopedPrecision out_scope(ctx);
  std::vector<Complex> out;
  out.reserve(z.size());
  for (const auto& r : z) out.emplace_back(Real(1) * r.re(), Real(1) * r.im());
  return out;
}

AlgebraicValue select_root(const IntPolynomial& poly, const RootSelector& sel,
                           const PrecisionContext& ctx) {
  std::vector<Complex> roots = roots_all(poly, ctx);
  std::vector<Complex> matches;
  ScopedPrecision scope(ctx);
  switch (sel.kind) {
    case RootSelector::Kind::real_interval: {
      Real lo(sel.lo), hi(sel.hi);
      for (const auto& r : roots)
        if (r.is_real() && lo <= r.re() && r.re() <= hi) matches.push_back(r);
      break;
    }
    case RootSelector::Kind::complex_rect: {
      Real a(sel.re_lo), b(sel.re_hi), c(sel.im_lo), d(sel.im_hi);
      for (const auto& r : roots)
        if (a <= r.re() && r.re() <= b && c <= r.im() && r.im() <= d) matches.push_back(r);
      break;
    }
    case RootSelector::Kind::index: {
      if (sel.idx < 0 || sel.idx >= static_cast<long>(roots.size()))
        throw NoRootError("select_root: index out of range");
      matches.push_back(roots[static_cast<size_t>(sel.idx)]);
      break;
    }
  }
  if (matches.empty()) throw NoRootError("select_root: no root in region " + sel.to_string());
  size_t pick = 0;
  if (matches.size() > 1) {
    if (!sel.multiplicity_rank)
      throw AmbiguousRootError("select_root: " + std::to_string(matches.size()) +
                               " roots in region " + sel.to_string());
    long r = *sel.multiplicity_rank;
    if (r < 0 || r >= static_cast<long>(matches.size()))
      throw AmbiguousRootError("select_root: multiplicity_rank out of range");
    pick = static_cast<size_t>(r);
  }
  return AlgebraicValue{poly, sel, matches[pick], ctx.digits};
}

AlgebraicValue refine(const AlgebraicValue& v, const PrecisionContext& ctx) {
  if (v.digits >= ctx.digits) {
    if (v.digits == ctx.digits) return v;
  }
  // Newton polish at the higher precision from the cached value.
  ScopedPrecision scope(ctx.bits() + 32);
  IntPolynomial dp = v.poly.derivative();
  Complex x = v.value;
  for (int it = 0; it < 200; ++it) {
    Complex f = v.poly.eval(x);
    Complex d = dp.eval(x);
    if (d.is_zero()) break;
    Complex step = f / d;
    x -= step;
    if (abs(step) < scope_epsilon() * (abs(x) + Real(1)) * 4L) break;
  }
  if (v.value.is_real()) x = Complex(x.re());  // refinement never leaves the axis
  ScopedPrecision out(ctx);
  return AlgebraicValue{v.poly, v.selector, Complex(Real(1) * x.re(), Real(1) * x.im()),
                        ctx.digits};
}

Complex eval_poly(const IntPolynomial& poly, const Complex& z, const PrecisionContext& ctx) {
  ScopedPrecision scope(ctx);
  return poly.eval(z);
}

}  // namespace li2lab
