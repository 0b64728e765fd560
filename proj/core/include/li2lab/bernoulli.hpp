#ifndef LI2LAB_BERNOULLI_HPP
#define LI2LAB_BERNOULLI_HPP

#include <gmpxx.h>

namespace li2lab {

// Exact Bernoulli number B_n (B_1 = -1/2 convention). Cached, thread-safe.
mpq_class bernoulli_number(unsigned n);

// Exact Bernoulli polynomial value B_n(x) for rational x.
mpq_class bernoulli_polynomial(unsigned n, const mpq_class& x);

// Exact binomial coefficient.
mpz_class binomial_z(unsigned long n, unsigned long k);

}  // namespace li2lab

#endif
