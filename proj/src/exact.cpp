#include "supercong/exact.hpp"

#include <mutex>

namespace supercong {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, num.get_str() + "/0");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational operator+(const BigRational& x, const BigRational& y) {
  return BigRational(mpq_class(x.value_ + y.value_));
}

BigRational operator-(const BigRational& x, const BigRational& y) {
  return BigRational(mpq_class(x.value_ - y.value_));
}

BigRational operator*(const BigRational& x, const BigRational& y) {
  return BigRational(mpq_class(x.value_ * y.value_));
}

BigRational operator/(const BigRational& x, const BigRational& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, x.to_string() + " / 0");
  return BigRational(mpq_class(x.value_ / y.value_));
}

BigRational operator-(const BigRational& x) { return BigRational(mpq_class(-x.value_)); }

BigRational pow(const BigRational& x, long n) {
  if (n < 0) return BigRational(1) / pow(x, -n);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(n));
  mpz_pow_ui(den.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(n));
  return BigRational(num, den);
}

std::optional<long> padic_valuation(const BigInt& x, const BigInt& p) {
  if (x == 0) return std::nullopt;
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> padic_valuation(const BigRational& x, const BigInt& p) {
  if (x.is_zero()) return std::nullopt;
  return *padic_valuation(x.num(), p) - *padic_valuation(x.den(), p);
}

RingElem reduce_mod(const BigRational& x, const RingCtx& ctx) {
  const auto v = padic_valuation(x, ctx.p());
  if (v && *v < 0) {
    throw Error(ErrorCode::NegativeValuation,
                x.to_string() + " has " + ctx.p().get_str() + " in its denominator");
  }
  // The denominator is coprime to p here, so the numerator carries p^t intact.
  return embed_rational(x.num(), x.den(), ctx);
}

BigRational rat_binomial(const BigRational& r, std::uint64_t k) {
  BigRational acc(1);
  for (std::uint64_t j = 1; j <= k; ++j) {
    const BigInt jj(static_cast<unsigned long>(j));
    acc = acc * (r - BigRational(jj) + BigRational(1)) / BigRational(jj);
  }
  return acc;
}

BigInt int_binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt acc = 1;
  for (long j = 1; j <= k; ++j) {
    acc *= n - k + j;
    acc /= j;  // exact: acc is C(n - k + j, j)
  }
  return acc;
}

BernoulliTable::BernoulliTable() { values_.emplace_back(1); }

std::size_t BernoulliTable::size() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

BigRational BernoulliTable::get(std::size_t n) {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  std::unique_lock lock(mutex_);
  while (values_.size() <= n) {
    const std::size_t next = values_.size();
    BigRational acc;
    BigInt c = 1;  // C(next + 1, k), advanced along k
    for (std::size_t k = 0; k < next; ++k) {
      acc += BigRational(c) * values_[k];
      c = c * static_cast<unsigned long>(next + 1 - k) / static_cast<unsigned long>(k + 1);
    }
    values_.push_back(-acc / BigRational(static_cast<long>(next + 1)));
  }
  return values_[n];
}

BigRational bernoulli(std::size_t n, BernoulliTable& table) { return table.get(n); }

BernoulliTable& shared_bernoulli_table() {
  static BernoulliTable table;
  return table;
}

BigInt staudt_clausen_denominator(std::size_t n) {
  BigInt prod = 1;
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d == 0 && is_prime(BigInt(static_cast<unsigned long>(d + 1)))) {
      prod *= static_cast<unsigned long>(d + 1);
    }
  }
  return prod;
}

BigRational harmonic(long n) {
  BigRational acc;
  for (long k = 1; k <= n; ++k) acc += BigRational(1, k);
  return acc;
}

BigRational exact_theorem12_sum(long m, long q, long p) {
  if (m <= 2 || q <= 0 || p <= m * q || !is_prime(BigInt(p))) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "need m > 2, q > 0 and prime p > mq (m=" + std::to_string(m) +
                    ", q=" + std::to_string(q) + ", p=" + std::to_string(p) + ")");
  }
  const BigRational r = BigRational(p, m) - BigRational(q);
  BigRational binom(1);
  BigRational sum;
  for (long k = 0; k < p; ++k) {
    if (k > 0) binom = binom * (r - BigRational(k - 1)) / BigRational(k);
    const BigRational term = pow(binom, m);
    if ((k * m) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace supercong
