#pragma once

// Test-only oracles.  None of these share code with the implementation they
// check: inverses by linear search, powers by repeated multiplication,
// primality by trial division, Bernoulli numbers by Akiyama-Tanigawa.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace oracle {

inline bool trial_division_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Smallest b in [0, m) with a*b = 1 (mod m), or -1.
inline long brute_inverse(long a, long m) {
  for (long b = 0; b < m; ++b) {
    if ((a * b) % m == 1 % m) return b;
  }
  return -1;
}

inline mpz_class naive_pow_mod(const mpz_class& a, unsigned n, const mpz_class& m) {
  mpz_class r = 1 % m;
  for (unsigned i = 0; i < n; ++i) r = r * a % m;
  return r;
}

// B_n with B_1 = +1/2 (the Akiyama-Tanigawa convention).
inline std::vector<mpq_class> akiyama_tanigawa(std::size_t n_max) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> row(n_max + 1);
  for (std::size_t m = 0; m <= n_max; ++m) {
    row[m] = mpq_class(1, m + 1);
    for (std::size_t j = m; j >= 1; --j) {
      row[j - 1] = mpq_class(j) * (row[j - 1] - row[j]);
      row[j - 1].canonicalize();
    }
    out.push_back(row[0]);
  }
  return out;
}

// v_p of a nonzero integer by repeated division.
inline long divide_out(mpz_class x, long p) {
  if (x < 0) x = -x;
  long t = 0;
  while (x % p == 0) {
    x /= p;
    ++t;
  }
  return t;
}

}  // namespace oracle
