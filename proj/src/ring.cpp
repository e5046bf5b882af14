#include "supercong/ring.hpp"

#include <array>

namespace supercong {

namespace {

using u128 = unsigned __int128;

// 2^63; moduli strictly below keep a + b and the 128-bit products safe.
const BigInt kWordLimit = BigInt(1) << 63;

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, unsigned long base) {
  const BigInt n_minus_1 = n - 1;
  BigInt a = base;
  BigInt x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = x * x % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

void require_same(const RingElem& a, const RingElem& b) {
  if (!a.ctx().same_ring(b.ctx())) {
    throw Error(ErrorCode::ContextMismatch,
                "Z/" + a.ctx().p().get_str() + "^" + std::to_string(a.ctx().e()) + " vs Z/" +
                    b.ctx().p().get_str() + "^" + std::to_string(b.ctx().e()));
  }
}

BigInt canonical(BigInt x, const BigInt& modulus) {
  mpz_mod(x.get_mpz_t(), x.get_mpz_t(), modulus.get_mpz_t());
  return x;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

// Extended Euclid on (a, m) with m < 2^63; returns 0 when gcd != 1.
std::uint64_t invmod_word(std::uint64_t a, std::uint64_t m) {
  std::int64_t old_r = static_cast<std::int64_t>(a), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return 0;
  if (old_s < 0) old_s += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(old_s);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned long, 13> kBases = {2, 3, 5, 7, 11, 13, 17,
                                                           19, 23, 29, 31, 37, 41};
  for (unsigned long b : kBases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d >>= 1;
    ++s;
  }
  for (unsigned long b : kBases) {
    if (!miller_rabin_round(n, d, s, b)) return false;
  }
  // The base set above is a proof only below 3.317e24.
  static const BigInt kDeterministicBound("3317044064679887385961981");
  if (n >= kDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  return true;
}

RingCtx::RingCtx(const BigInt& p, unsigned e, ArithPath path) {
  if (e == 0) throw Error(ErrorCode::ExponentZero, "modulus exponent must be at least 1");
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, p.get_str());
  State st{p, e, 0, false, 0, 0};
  mpz_pow_ui(st.modulus.get_mpz_t(), p.get_mpz_t(), e);
  st.fast = path == ArithPath::Auto && st.modulus < kWordLimit;
  if (st.fast) {
    st.p_word = p.get_ui();
    st.modulus_word = st.modulus.get_ui();
  }
  state_ = std::make_shared<const State>(std::move(st));
}

bool RingCtx::same_ring(const RingCtx& other) const noexcept {
  return state_ == other.state_ || (e() == other.e() && p() == other.p());
}

RingElem RingCtx::zero() const { return from_int(0L); }
RingElem RingCtx::one() const { return from_int(1L); }

RingElem RingCtx::from_int(const BigInt& n) const {
  BigInt r = canonical(n, modulus());
  if (fast_path()) return RingElem(*this, static_cast<std::uint64_t>(r.get_ui()));
  return RingElem(*this, std::move(r));
}

RingElem RingCtx::from_int(long n) const {
  if (fast_path()) {
    const std::uint64_t m = modulus_word();
    std::uint64_t r;
    if (n >= 0) {
      r = static_cast<std::uint64_t>(n) % m;
    } else {
      // -(n + 1) avoids overflow at LONG_MIN.
      const std::uint64_t mag = static_cast<std::uint64_t>(-(n + 1)) + 1;
      r = (m - mag % m) % m;
    }
    return RingElem(*this, r);
  }
  return from_int(BigInt(n));
}

BigInt RingElem::as_big() const {
  if (ctx_.fast_path()) return BigInt(static_cast<unsigned long>(word_));
  return big_;
}

BigInt RingElem::residue() const { return as_big(); }

bool RingElem::is_zero() const noexcept {
  return ctx_.fast_path() ? word_ == 0 : big_ == 0;
}

bool RingElem::is_one() const noexcept {
  return ctx_.fast_path() ? word_ == 1 : big_ == 1;
}

bool RingElem::operator==(const RingElem& other) const {
  require_same(*this, other);
  if (ctx_.fast_path() && other.ctx_.fast_path()) return word_ == other.word_;
  return as_big() == other.as_big();
}

RingElem add(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  const RingCtx& ctx = a.ctx_;
  if (ctx.fast_path() && b.ctx_.fast_path()) {
    std::uint64_t s = a.word_ + b.word_;
    if (s >= ctx.modulus_word()) s -= ctx.modulus_word();
    return RingElem(ctx, s);
  }
  BigInt s = a.as_big() + b.as_big();
  if (s >= ctx.modulus()) s -= ctx.modulus();
  return ctx.from_int(s);
}

RingElem sub(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  const RingCtx& ctx = a.ctx_;
  if (ctx.fast_path() && b.ctx_.fast_path()) {
    const std::uint64_t d =
        a.word_ >= b.word_ ? a.word_ - b.word_ : a.word_ + (ctx.modulus_word() - b.word_);
    return RingElem(ctx, d);
  }
  BigInt d = a.as_big() - b.as_big();
  if (d < 0) d += ctx.modulus();
  return ctx.from_int(d);
}

RingElem mul(const RingElem& a, const RingElem& b) {
  require_same(a, b);
  const RingCtx& ctx = a.ctx_;
  if (ctx.fast_path() && b.ctx_.fast_path()) {
    return RingElem(ctx, mulmod(a.word_, b.word_, ctx.modulus_word()));
  }
  BigInt prod = a.as_big() * b.as_big();
  mpz_mod(prod.get_mpz_t(), prod.get_mpz_t(), ctx.modulus().get_mpz_t());
  return ctx.from_int(prod);
}

RingElem neg(const RingElem& a) {
  const RingCtx& ctx = a.ctx_;
  if (ctx.fast_path()) {
    return RingElem(ctx, a.word_ == 0 ? 0 : ctx.modulus_word() - a.word_);
  }
  return ctx.from_int(a.big_ == 0 ? BigInt(0) : ctx.modulus() - a.big_);
}

RingElem inv(const RingElem& a) {
  const RingCtx& ctx = a.ctx_;
  if (ctx.fast_path()) {
    const std::uint64_t r = a.word_ % ctx.p_word() == 0 ? 0 : invmod_word(a.word_, ctx.modulus_word());
    if (r == 0) throw Error(ErrorCode::NotInvertible, std::to_string(a.word_));
    return RingElem(ctx, r);
  }
  BigInt r;
  if (mpz_divisible_p(a.big_.get_mpz_t(), ctx.p().get_mpz_t()) ||
      mpz_invert(r.get_mpz_t(), a.big_.get_mpz_t(), ctx.modulus().get_mpz_t()) == 0) {
    throw Error(ErrorCode::NotInvertible, a.big_.get_str());
  }
  return ctx.from_int(r);
}

RingElem pow(const RingElem& a, std::uint64_t n) {
  RingElem result = a.ctx_.one();
  RingElem base = a;
  while (n != 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1;
    if (n != 0) base = mul(base, base);
  }
  return result;
}

Valuation valuation(const RingElem& a) {
  const RingCtx& ctx = a.ctx_;
  const int e = static_cast<int>(ctx.e());
  if (a.is_zero()) return Valuation::at_least(e);
  if (ctx.fast_path()) {
    std::uint64_t r = a.word_;
    int t = 0;
    while (r % ctx.p_word() == 0) {
      r /= ctx.p_word();
      ++t;
    }
    return Valuation::finite(t);
  }
  BigInt r = a.big_;
  const auto t = mpz_remove(r.get_mpz_t(), r.get_mpz_t(), ctx.p().get_mpz_t());
  return Valuation::finite(static_cast<int>(t));
}

RingElem embed_rational(const BigInt& num, const BigInt& den, const RingCtx& ctx) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, num.get_str() + "/0");
  if (mpz_divisible_p(den.get_mpz_t(), ctx.p().get_mpz_t())) {
    throw Error(ErrorCode::NonInvertibleDenominator,
                den.get_str() + " is divisible by " + ctx.p().get_str());
  }
  return mul(ctx.from_int(num), inv(ctx.from_int(den)));
}

}  // namespace supercong
