#pragma once

// Truncated p-adic ring Z/p^e.
//
// Residues are kept canonical in [0, p^e).  When p^e < 2^63 a residue is a
// single 64-bit word and products go through unsigned __int128; otherwise
// every operation runs on GMP integers.  Both paths return identical residues.

#include <cstdint>
#include <memory>
#include <string>

#include <gmpxx.h>

#include "supercong/error.hpp"
#include "supercong/valuation.hpp"

namespace supercong {

using BigInt = mpz_class;

/// Deterministic Miller-Rabin for n < 3.317e24 (first thirteen prime bases).
/// Larger inputs additionally pass through GMP's probabilistic test.
bool is_prime(const BigInt& n);

enum class ArithPath {
  Auto,    // word path whenever the modulus fits below 2^63
  Bignum,  // always GMP; used to cross-check the word path
};

class RingElem;

/// Immutable description of Z/p^e.  Copies share one underlying state, so a
/// context can be passed by value and used from any number of threads.
class RingCtx {
 public:
  /// Throws Error{NotPrime} for composite p and Error{ExponentZero} for e == 0.
  RingCtx(const BigInt& p, unsigned e, ArithPath path = ArithPath::Auto);

  const BigInt& p() const noexcept { return state_->p; }
  unsigned e() const noexcept { return state_->e; }
  const BigInt& modulus() const noexcept { return state_->modulus; }
  bool fast_path() const noexcept { return state_->fast; }

  std::uint64_t modulus_word() const noexcept { return state_->modulus_word; }
  std::uint64_t p_word() const noexcept { return state_->p_word; }

  /// Same (p, e); the arithmetic path is irrelevant.
  bool same_ring(const RingCtx& other) const noexcept;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(const BigInt& n) const;
  RingElem from_int(long n) const;

 private:
  struct State {
    BigInt p;
    unsigned e;
    BigInt modulus;
    bool fast;
    std::uint64_t p_word;
    std::uint64_t modulus_word;
  };
  std::shared_ptr<const State> state_;
};

class RingElem {
 public:
  const RingCtx& ctx() const noexcept { return ctx_; }

  BigInt residue() const;
  std::string residue_string() const { return residue().get_str(); }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Residues compared exactly; throws ContextMismatch across rings.
  bool operator==(const RingElem& other) const;

  friend RingElem add(const RingElem& a, const RingElem& b);
  friend RingElem sub(const RingElem& a, const RingElem& b);
  friend RingElem mul(const RingElem& a, const RingElem& b);
  friend RingElem neg(const RingElem& a);
  friend RingElem inv(const RingElem& a);
  friend RingElem pow(const RingElem& a, std::uint64_t n);
  friend Valuation valuation(const RingElem& a);

  RingElem& operator+=(const RingElem& b) { return *this = add(*this, b); }
  RingElem& operator-=(const RingElem& b) { return *this = sub(*this, b); }
  RingElem& operator*=(const RingElem& b) { return *this = mul(*this, b); }

 private:
  friend class RingCtx;
  RingElem(RingCtx ctx, std::uint64_t word) : ctx_(std::move(ctx)), word_(word) {}
  RingElem(RingCtx ctx, BigInt big) : ctx_(std::move(ctx)), big_(std::move(big)) {}

  // Residue as a GMP integer regardless of which path produced it.
  BigInt as_big() const;

  RingCtx ctx_;
  std::uint64_t word_ = 0;  // residue on the word path
  BigInt big_;              // residue on the GMP path
};

RingElem add(const RingElem& a, const RingElem& b);
RingElem sub(const RingElem& a, const RingElem& b);
RingElem mul(const RingElem& a, const RingElem& b);
RingElem neg(const RingElem& a);

/// Throws Error{NotInvertible} when p divides the residue.
RingElem inv(const RingElem& a);

/// Binary exponentiation; pow(a, 0) is 1 even for a == 0.
RingElem pow(const RingElem& a, std::uint64_t n);

/// AtLeast(e) for the zero residue, otherwise the exact p-adic valuation (< e).
Valuation valuation(const RingElem& a);

/// (num mod p^e) * (den mod p^e)^{-1}.  Throws ZeroDenominator or
/// NonInvertibleDenominator.
RingElem embed_rational(const BigInt& num, const BigInt& den, const RingCtx& ctx);

inline RingElem operator+(const RingElem& a, const RingElem& b) { return add(a, b); }
inline RingElem operator-(const RingElem& a, const RingElem& b) { return sub(a, b); }
inline RingElem operator*(const RingElem& a, const RingElem& b) { return mul(a, b); }
inline RingElem operator-(const RingElem& a) { return neg(a); }

}  // namespace supercong
