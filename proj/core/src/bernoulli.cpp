#include "li2lab/bernoulli.hpp"

#include <mutex>
#include <vector>

namespace li2lab {

mpz_class binomial_z(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

namespace {
std::mutex bern_mutex;
std::vector<mpq_class> bern_cache;  // bern_cache[n] = B_n

// sum_{j=0}^{n} C(n+1,j) B_j = 0  =>  B_n = -1/(n+1) sum_{j<n} C(n+1,j) B_j
void extend_cache(unsigned n) {
  if (bern_cache.empty()) {
    bern_cache.emplace_back(1);  // B_0
  }
  while (bern_cache.size() <= n) {
    unsigned m = static_cast<unsigned>(bern_cache.size());
    if (m > 1 && (m & 1U)) {
      bern_cache.emplace_back(0);
      continue;
    }
    mpq_class acc(0);
    for (unsigned j = 0; j < m; ++j) {
      if (j > 1 && (j & 1U)) continue;
      acc += mpq_class(binomial_z(m + 1, j)) * bern_cache[j];
    }
    mpq_class b = -acc / mpq_class(m + 1);
    b.canonicalize();
    bern_cache.push_back(b);
  }
}
}  // namespace

mpq_class bernoulli_number(unsigned n) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  extend_cache(n);
  return bern_cache[n];
}

mpq_class bernoulli_polynomial(unsigned n, const mpq_class& x) {
  // Horner over B_n(x) = sum_k C(n,k) B_k x^{n-k}
  mpq_class acc(0);
  {
    std::lock_guard<std::mutex> lock(bern_mutex);
    extend_cache(n);
    for (unsigned k = 0; k <= n; ++k) {
      acc = acc * x + mpq_class(binomial_z(n, k)) * bern_cache[k];
    }
  }
  acc.canonicalize();
  return acc;
}

}  // namespace li2lab
