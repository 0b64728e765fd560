#ifndef LI2LAB_CONTEXT_HPP
#define LI2LAB_CONTEXT_HPP

#include <mpfr.h>

#include <stdexcept>

namespace li2lab {

// Target accuracy for a computation: `digits` decimal digits of absolute
// error for inputs of modulus <= 1e3, carried out internally with `guard`
// extra digits. Every public numeric operation takes one of these.
struct PrecisionContext {
  int digits = 60;
  int guard = 15;

  PrecisionContext() = default;
  explicit PrecisionContext(int d, int g = 15) : digits(d), guard(g) {
    if (digits < 10) throw std::invalid_argument("PrecisionContext: digits must be >= 10");
    if (guard < 0) throw std::invalid_argument("PrecisionContext: guard must be >= 0");
  }

  int working_digits() const { return digits + guard; }

  // Binary precision for the working digits, with a fixed slack so that
  // decimal<->binary conversions never eat into the guard band.
  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(working_digits() * 3.3219280948873623 + 32);
  }
};

namespace detail {
mpfr_prec_t& thread_precision();
}

// Scope guard: Real/Complex values constructed while this is alive use the
// scope's precision. Thread-local, so concurrent verifications at different
// precisions do not interfere.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(const PrecisionContext& ctx) : ScopedPrecision(ctx.bits()) {}
  explicit ScopedPrecision(mpfr_prec_t bits) : saved_(detail::thread_precision()) {
    detail::thread_precision() = bits;
  }
  ~ScopedPrecision() { detail::thread_precision() = saved_; }
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

 private:
  mpfr_prec_t saved_;
};

inline mpfr_prec_t current_precision() { return detail::thread_precision(); }

}  // namespace li2lab

#endif
