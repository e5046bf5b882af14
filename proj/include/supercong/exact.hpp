#pragma once

// Exact rational arithmetic and the brute-force oracles built on it.

#include <cstdint>
#include <deque>
#include <optional>
#include <shared_mutex>
#include <string>

#include <gmpxx.h>

#include "supercong/ring.hpp"

namespace supercong {

/// Normalized rational num/den with den > 0 and gcd(|num|, den) = 1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  bool is_zero() const { return sgn(value_) == 0; }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const { return value_.get_str(); }

  friend BigRational operator+(const BigRational& x, const BigRational& y);
  friend BigRational operator-(const BigRational& x, const BigRational& y);
  friend BigRational operator*(const BigRational& x, const BigRational& y);
  /// Throws DivisionByZero.
  friend BigRational operator/(const BigRational& x, const BigRational& y);
  friend BigRational operator-(const BigRational& x);

  BigRational& operator+=(const BigRational& y) { return *this = *this + y; }
  BigRational& operator-=(const BigRational& y) { return *this = *this - y; }
  BigRational& operator*=(const BigRational& y) { return *this = *this * y; }
  BigRational& operator/=(const BigRational& y) { return *this = *this / y; }

  friend bool operator==(const BigRational& x, const BigRational& y) { return x.value_ == y.value_; }

 private:
  explicit BigRational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

/// x^n for any integer n; a negative exponent of zero throws DivisionByZero.
BigRational pow(const BigRational& x, long n);

/// v_p(num) - v_p(den); std::nullopt stands for +infinity (x == 0).
std::optional<long> padic_valuation(const BigRational& x, const BigInt& p);
std::optional<long> padic_valuation(const BigInt& x, const BigInt& p);

/// Image of a p-integral rational in Z/p^e.  Throws NegativeValuation.
RingElem reduce_mod(const BigRational& x, const RingCtx& ctx);

/// prod_{j=1}^{k} (r - j + 1) / j.
BigRational rat_binomial(const BigRational& r, std::uint64_t k);

/// Exact integer binomial C(n, k) by the multiplicative recurrence; 0 unless
/// 0 <= k <= n.
BigInt int_binomial(long n, long k);

/// Bernoulli numbers B_0, B_1 = -1/2, B_2, ... grown on demand from
///   B_n = -1/(n+1) * sum_{k<n} C(n+1, k) B_k.
/// Concurrent readers are safe; growth takes an exclusive lock and entries
/// never move once published.
class BernoulliTable {
 public:
  BernoulliTable();
  BigRational get(std::size_t n);
  std::size_t size() const;

 private:
  mutable std::shared_mutex mutex_;
  std::deque<BigRational> values_;
};

BigRational bernoulli(std::size_t n, BernoulliTable& table);

/// Process-wide table used by the verifiers.
BernoulliTable& shared_bernoulli_table();

/// prod { q prime : (q - 1) | n }, the denominator of B_n for even n >= 2.
BigInt staudt_clausen_denominator(std::size_t n);

/// sum_{k=1}^{n} 1/k.
BigRational harmonic(long n);

/// sum_{k=0}^{p-1} (-1)^{km} C(p/m - q, k)^m computed in exact rationals.
/// Throws ParameterOutOfRange unless m > 2, q > 0, p > mq and p is prime.
BigRational exact_theorem12_sum(long m, long q, long p);

}  // namespace supercong
