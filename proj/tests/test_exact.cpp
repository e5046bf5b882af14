#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "supercong/exact.hpp"
#include "supercong/sweep.hpp"

using namespace supercong;

namespace {

BigRational q(long n, long d) { return BigRational(n, d); }

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(q(1, 2) + q(1, 3) == q(5, 6));
  CHECK(q(2, 3) * q(-1, 3) == q(-2, 9));
  CHECK((q(7, 5) * BigRational(0)).to_string() == "0");
  CHECK((q(7, 5) * BigRational(0)).den() == 1);
  CHECK(q(6, -4).to_string() == "-3/2");
  CHECK(q(1, 2) / q(1, 4) == BigRational(2));
  CHECK(pow(q(-2, 3), 3) == q(-8, 27));
  CHECK(pow(q(2, 3), -2) == q(9, 4));
  CHECK(pow(q(2, 3), 0) == BigRational(1));
  CHECK_THROWS_AS(q(1, 0), Error);
  CHECK_THROWS_AS(q(1, 2) / BigRational(0), Error);
  CHECK_THROWS_AS(pow(BigRational(0), -1), Error);
}

TEST_CASE("p-adic valuation of rationals") {
  CHECK(harmonic(4) == q(25, 12));
  CHECK(padic_valuation(q(25, 12), 5) == 2);
  CHECK_FALSE(padic_valuation(BigRational(0), 5).has_value());
  CHECK(padic_valuation(q(1, 5), 5) == -1);
  CHECK(padic_valuation(q(-250, 7), 5) == 3);
}

TEST_CASE("reduce_mod") {
  const RingCtx z(5, 3);
  CHECK(reduce_mod(q(-1, 9), z).residue() == 111);
  CHECK(reduce_mod(q(5, 3), z).residue() == embed_rational(5, 3, z).residue());
  CHECK(reduce_mod(q(5, 3), z).residue() == 85);
  try {
    reduce_mod(q(1, 5), z);
    FAIL("expected NegativeValuation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NegativeValuation);
  }
}

TEST_CASE("reduction is a ring homomorphism") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
  for (long p : {5L, 97L, 104729L}) {
    const RingCtx ctx(p, 3);
    int done = 0;
    while (done < 200) {
      const long d1 = den(rng), d2 = den(rng);
      if (d1 % p == 0 || d2 % p == 0) continue;
      const BigRational x = q(num(rng), d1), y = q(num(rng), d2);
      CHECK(reduce_mod(x + y, ctx) == reduce_mod(x, ctx) + reduce_mod(y, ctx));
      CHECK(reduce_mod(x * y, ctx) == reduce_mod(x, ctx) * reduce_mod(y, ctx));
      CHECK(reduce_mod(-x, ctx) == -reduce_mod(x, ctx));
      ++done;
    }
  }
}

TEST_CASE("rational binomials") {
  CHECK(rat_binomial(q(2, 3), 2) == q(-1, 9));
  CHECK(rat_binomial(q(2, 3), 0) == BigRational(1));
  CHECK(rat_binomial(q(2, 3), 1) == q(2, 3));
  CHECK(rat_binomial(BigRational(5), 7) == BigRational(0));
  CHECK(rat_binomial(BigRational(-1), 5) == BigRational(-1));

  // Pascal: C(r, k) = C(r-1, k) + C(r-1, k-1).
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  for (int i = 0; i < 200; ++i) {
    const BigRational r = q(num(rng), den(rng));
    for (std::uint64_t k = 1; k <= 8; ++k) {
      CHECK(rat_binomial(r, k) == rat_binomial(r - 1, k) + rat_binomial(r - 1, k - 1));
    }
  }

  // Every factor of C(p/m - q, k) is p-integral for k < p.
  for (long p : {7L, 11L, 13L, 29L}) {
    for (long m = 3; m <= 6; ++m) {
      for (long qq = 1; qq * m < p; ++qq) {
        const BigRational r = q(p, m) - BigRational(qq);
        for (long k = 0; k < p; ++k) {
          const auto v = padic_valuation(rat_binomial(r, static_cast<std::uint64_t>(k)), p);
          CHECK((!v || *v >= 0));
        }
      }
    }
  }
}

TEST_CASE("integer binomials") {
  std::vector<std::vector<BigInt>> pascal(60);
  for (long n = 0; n < 60; ++n) {
    pascal[n].assign(n + 1, 1);
    for (long k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    for (long k = 0; k <= n; ++k) CHECK(int_binomial(n, k) == pascal[n][k]);
    CHECK(int_binomial(n, n + 1) == 0);
    CHECK(int_binomial(n, -1) == 0);
  }
}

TEST_CASE("Bernoulli numbers") {
  BernoulliTable table;
  CHECK(bernoulli(0, table) == BigRational(1));
  CHECK(bernoulli(1, table) == q(-1, 2));
  CHECK(bernoulli(2, table) == q(1, 6));
  CHECK(bernoulli(3, table) == BigRational(0));
  CHECK(bernoulli(4, table) == q(-1, 30));
  CHECK(bernoulli(12, table) == q(-691, 2730));

  const auto other = oracle::akiyama_tanigawa(120);
  for (std::size_t n = 0; n <= 120; ++n) {
    const BigRational b = bernoulli(n, table);
    const mpq_class& expected = other[n];
    if (n == 1) {
      CHECK(b == BigRational(-expected.get_num(), expected.get_den()));
    } else {
      CHECK(b == BigRational(expected.get_num(), expected.get_den()));
    }
    if (n >= 3 && n % 2 == 1) CHECK(b.is_zero());
    if (n >= 2 && n % 2 == 0) CHECK(b.den() == staudt_clausen_denominator(n));
  }
  for (long p : sieve(97)) {
    if (p <= 3) continue;
    const auto v = padic_valuation(bernoulli(static_cast<std::size_t>(p - 3), table), p);
    CHECK((!v || *v >= 0));
  }
}

TEST_CASE("Bernoulli table under concurrent readers") {
  BernoulliTable shared;
  BernoulliTable reference;
  std::vector<BigRational> expected;
  for (std::size_t n = 0; n <= 80; ++n) expected.push_back(reference.get(n));

  std::atomic<int> mismatches{0};
  {
    std::vector<std::jthread> threads;
    for (int t = 0; t < 8; ++t) {
      threads.emplace_back([&, t] {
        std::mt19937 rng(static_cast<unsigned>(t));
        std::uniform_int_distribution<std::size_t> idx(0, 80);
        for (int i = 0; i < 200; ++i) {
          const std::size_t n = idx(rng);
          if (!(shared.get(n) == expected[n])) ++mismatches;
        }
      });
    }
  }
  CHECK(mismatches == 0);
  CHECK(shared.size() >= 1);
}

TEST_CASE("exact main sum oracle") {
  const BigRational s45 = exact_theorem12_sum(4, 1, 5);
  const auto v45 = padic_valuation(s45, 5);
  CHECK((!v45 || *v45 >= 3));
  const auto v35 = padic_valuation(exact_theorem12_sum(3, 1, 5), 5);
  CHECK((!v35 || *v35 >= 3));

  CHECK_THROWS_AS(exact_theorem12_sum(2, 1, 5), Error);
  CHECK_THROWS_AS(exact_theorem12_sum(3, 0, 5), Error);
  CHECK_THROWS_AS(exact_theorem12_sum(3, 2, 5), Error);
  CHECK_THROWS_AS(exact_theorem12_sum(3, 1, 9), Error);
}
