#ifndef LI2LAB_TEST_COMMON_HPP
#define LI2LAB_TEST_COMMON_HPP

#include <doctest.h>

#include <cstdint>

#include "li2lab/complex.hpp"
#include "li2lab/constants.hpp"
#include "li2lab/context.hpp"

namespace li2lab::testutil {

inline void check_close(const Real& a, const Real& b, int tol_exp) {
  Real d = abs(a - b);
  bool ok = d < pow10(tol_exp);
  if (!ok) {
    CAPTURE(a.to_decimal(30));
    CAPTURE(b.to_decimal(30));
    CAPTURE(d.to_decimal(30));
  }
  CHECK(ok);
}

inline void check_close(const Complex& a, const Complex& b, int tol_exp) {
  Real d = abs(a - b);
  bool ok = d < pow10(tol_exp);
  if (!ok) {
    CAPTURE(a.to_decimal(30));
    CAPTURE(b.to_decimal(30));
    CAPTURE(d.to_decimal(30));
  }
  CHECK(ok);
}

inline void check_small(const Real& d, int tol_exp) {
  bool ok = abs(d) < pow10(tol_exp);
  if (!ok) CAPTURE(d.to_decimal(40));
  CHECK(ok);
}

inline void check_small(const Complex& d, int tol_exp) { check_small(abs(d), tol_exp); }

// deterministic pseudo-random reals/complexes for property tests
struct Rng {
  uint64_t state;
  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // uniform in (lo, hi), granularity 2^-20
  Real uniform(double lo, double hi) {
    double t = static_cast<double>(next() % 1048576ULL) / 1048576.0;
    return Real(lo + (hi - lo) * (t * 0.998 + 0.001));
  }
  Complex in_disk(double radius) {
    for (;;) {
      Real x = uniform(-radius, radius);
      Real y = uniform(-radius, radius);
      if ((x * x + y * y) < Real(radius) * Real(radius)) return Complex(x, y);
    }
  }
};

}  // namespace li2lab::testutil

#endif
