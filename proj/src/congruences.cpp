#include "supercong/congruences.hpp"

#include <chrono>

namespace supercong {

namespace {

struct NamedStatement {
  StatementId id;
  std::string_view name;
};

constexpr std::array<NamedStatement, kAllStatements.size()> kNames = {{
    {StatementId::WOLSTENHOLME_H, "WOLSTENHOLME_H"},
    {StatementId::WOLSTENHOLME_B, "WOLSTENHOLME_B"},
    {StatementId::THM11_A, "THM11_A"},
    {StatementId::THM11_B, "THM11_B"},
    {StatementId::THM12, "THM12"},
    {StatementId::LEMMA21, "LEMMA21"},
    {StatementId::LEMMA22, "LEMMA22"},
    {StatementId::LEMMA23_A, "LEMMA23_A"},
    {StatementId::LEMMA23_B, "LEMMA23_B"},
    {StatementId::PROOF_STEP, "PROOF_STEP"},
    {StatementId::HALFSUM, "HALFSUM"},
    {StatementId::REFLECTION, "REFLECTION"},
    {StatementId::CENTRAL_IDENTITY, "CENTRAL_IDENTITY"},
    {StatementId::POWER_SUM, "POWER_SUM"},
}};

using Clock = std::chrono::steady_clock;

class Stopwatch {
 public:
  std::int64_t micros() const {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start_).count();
  }

 private:
  Clock::time_point start_ = Clock::now();
};

[[noreturn]] void out_of_range(const std::string& what) {
  throw Error(ErrorCode::ParameterOutOfRange, what);
}

void require_prime(long p) {
  if (p < 2 || !is_prime(BigInt(p))) out_of_range(std::to_string(p) + " is not prime");
}

void require_mqp(long m, long q, long p) {
  if (m <= 2 || q <= 0 || p <= m * q) {
    out_of_range("need m > 2, q > 0, p > mq (m=" + std::to_string(m) + ", q=" + std::to_string(q) +
                 ", p=" + std::to_string(p) + ")");
  }
  require_prime(p);
}

void require_parity(long m, long q) {
  if (!satisfies_parity(m, q)) {
    out_of_range("m odd with q even (m=" + std::to_string(m) + ", q=" + std::to_string(q) + ")");
  }
}

CongruenceRecord make_record(StatementId id, Params params, const RingElem& residue,
                             const Stopwatch& clock) {
  CongruenceRecord rec;
  rec.statement = id;
  rec.params = params;
  rec.modulus_exp = residue.ctx().e();
  rec.residue = residue.residue_string();
  rec.observed = valuation(residue);
  rec.required = required_valuation(id);
  rec.pass = meets(rec.observed, rec.required);
  rec.micros = clock.micros();
  return rec;
}

// Record of an exact identity whose defect is `value` (zero when it holds).
CongruenceRecord make_exact_record(StatementId id, Params params, const BigInt& value,
                                   const Stopwatch& clock) {
  CongruenceRecord rec;
  rec.statement = id;
  rec.params = params;
  rec.modulus_exp = 0;
  rec.residue = value.get_str();
  if (value == 0) {
    rec.observed = Valuation::infinite();
  } else if (params.p) {
    rec.observed = Valuation::finite(static_cast<int>(*padic_valuation(value, BigInt(*params.p))));
  } else {
    rec.observed = Valuation::finite(0);
  }
  rec.required = required_valuation(id);
  rec.pass = meets(rec.observed, rec.required);
  rec.micros = clock.micros();
  return rec;
}

BigInt int_pow(const BigInt& base, long n) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

// sum_{k=q-1}^{p-1} C(k, q-1)^m * sum_{q<=j<=k} 1/j^2 in ctx.
RingElem weighted_square_harmonic(long m, long q, long p, const RingCtx& ctx) {
  RingElem total = ctx.zero();
  RingElem inner = ctx.zero();
  for (long k = q - 1; k <= p - 1; ++k) {
    if (k >= q) inner += inv(pow(ctx.from_int(k), 2));
    total += ctx.from_int(int_pow(int_binomial(k, q - 1), m)) * inner;
  }
  return total;
}

// sum_{k=0}^{kmax} (-1)^k C(p-q, k) C(k+q-1, q-1)^{m-1}, with both binomials
// advanced incrementally.  The recurrence drives C(p-q, k) to 0 past k = p - q.
BigInt alternating_binomial_sum(long m, long q, long p, long kmax) {
  BigInt sum = 0;
  BigInt top = 1;     // C(p-q, k)
  BigInt weight = 1;  // C(k+q-1, k)
  for (long k = 0; k <= kmax; ++k) {
    if (k > 0) {
      top = top * (p - q - k + 1) / k;
      weight = weight * (k + q - 1) / k;
    }
    const BigInt term = top * int_pow(weight, m - 1);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

}  // namespace

std::string_view statement_name(StatementId id) noexcept {
  for (const auto& entry : kNames) {
    if (entry.id == id) return entry.name;
  }
  return "UNKNOWN";
}

std::optional<StatementId> parse_statement(std::string_view name) noexcept {
  for (const auto& entry : kNames) {
    if (entry.name == name) return entry.id;
  }
  return std::nullopt;
}

Valuation required_valuation(StatementId id) noexcept {
  switch (id) {
    case StatementId::THM11_A:
    case StatementId::THM11_B:
      return Valuation::finite(5);
    case StatementId::THM12:
    case StatementId::WOLSTENHOLME_B:
    case StatementId::PROOF_STEP:
      return Valuation::finite(3);
    case StatementId::WOLSTENHOLME_H:
      return Valuation::finite(2);
    case StatementId::LEMMA21:
    case StatementId::CENTRAL_IDENTITY:
      return Valuation::infinite();
    case StatementId::LEMMA22:
    case StatementId::LEMMA23_A:
    case StatementId::LEMMA23_B:
    case StatementId::HALFSUM:
    case StatementId::REFLECTION:
    case StatementId::POWER_SUM:
      break;
  }
  return Valuation::finite(1);
}

std::vector<RingElem> binomial_sequence(const RingElem& r, long kmax) {
  const RingCtx& ctx = r.ctx();
  if (kmax < 0 || BigInt(kmax) >= ctx.p()) {
    throw Error(ErrorCode::KmaxTooLarge,
                "kmax " + std::to_string(kmax) + " must lie in [0, " + ctx.p().get_str() + ")");
  }
  std::vector<RingElem> seq;
  seq.reserve(static_cast<std::size_t>(kmax) + 1);
  seq.push_back(ctx.one());
  for (long k = 1; k <= kmax; ++k) {
    seq.push_back(seq.back() * (r - ctx.from_int(k - 1)) * inv(ctx.from_int(k)));
  }
  return seq;
}

RingElem theorem12_sum(long m, long q, long p, unsigned e) {
  require_mqp(m, q, p);
  const RingCtx ctx(BigInt(p), e);
  const RingElem r = embed_rational(BigInt(p - q * m), BigInt(m), ctx);
  const auto binom = binomial_sequence(r, p - 1);
  RingElem sum = ctx.zero();
  for (long k = 0; k < p; ++k) {
    const RingElem term = pow(binom[static_cast<std::size_t>(k)], static_cast<std::uint64_t>(m));
    if ((k * m) % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

CongruenceRecord theorem12_residue(long m, long q, long p, unsigned e) {
  const Stopwatch clock;
  const RingElem sum = theorem12_sum(m, q, p, e);
  return make_record(StatementId::THM12, {.p = p, .m = m, .q = q}, sum, clock);
}

namespace {

// sum_{k<p} C(num/den, k)^exponent in Z/p^5.
RingElem power_binomial_sum(long p, long num, long den, std::uint64_t exponent) {
  if (p <= 3) out_of_range("need p > 3, got " + std::to_string(p));
  require_prime(p);
  const RingCtx ctx(BigInt(p), 5);
  const auto binom = binomial_sequence(embed_rational(BigInt(num), BigInt(den), ctx), p - 1);
  RingElem sum = ctx.zero();
  for (const RingElem& c : binom) sum += pow(c, exponent);
  return sum;
}

}  // namespace

CongruenceRecord theorem11_lhs1(long p) {
  const Stopwatch clock;
  const RingElem sum = power_binomial_sum(p, -1, p + 1, static_cast<std::uint64_t>(p + 1));
  return make_record(StatementId::THM11_A, {.p = p}, sum, clock);
}

RingElem theorem11_lhs2(long p) {
  return power_binomial_sum(p, 1, p - 1, static_cast<std::uint64_t>(p - 1));
}

RingElem theorem11_rhs2(long p) {
  if (p <= 3) out_of_range("need p > 3, got " + std::to_string(p));
  require_prime(p);
  const BigInt prime(p);
  const BigRational b = bernoulli(static_cast<std::size_t>(p - 3), shared_bernoulli_table());
  const auto vb = padic_valuation(b, prime);
  if (vb && *vb < 0) {
    throw Error(ErrorCode::NegativeValuation, "B_" + std::to_string(p - 3) + " is not p-integral");
  }
  const RingCtx ctx(prime, 5);
  return reduce_mod(BigRational(2, 3) * BigRational(int_pow(prime, 4)) * b, ctx);
}

CongruenceRecord theorem11_second(long p) {
  const Stopwatch clock;
  const RingElem diff = theorem11_lhs2(p) - theorem11_rhs2(p);
  return make_record(StatementId::THM11_B, {.p = p}, diff, clock);
}

std::pair<CongruenceRecord, CongruenceRecord> wolstenholme_check(long p) {
  if (p <= 3) out_of_range("need p > 3, got " + std::to_string(p));
  require_prime(p);
  const RingCtx ctx(BigInt(p), 3);

  const Stopwatch clock_h;
  const RingElem h = reduce_mod(harmonic(p - 1), ctx);
  auto rec_h = make_record(StatementId::WOLSTENHOLME_H, {.p = p}, h, clock_h);

  const Stopwatch clock_b;
  RingElem central = ctx.one();
  for (long j = 1; j <= p - 1; ++j) central *= embed_rational(BigInt(p + j), BigInt(j), ctx);
  auto rec_b = make_record(StatementId::WOLSTENHOLME_B, {.p = p}, central - ctx.one(), clock_b);
  return {std::move(rec_h), std::move(rec_b)};
}

BigInt lemma21_sum(long n, long m) {
  BigInt sum = 0;
  BigInt binom = 1;  // C(n, k)
  for (long k = 0; k <= n; ++k) {
    // The k = 0 term is C(n,0) (-1)^0 0^m, which is 1 only for m = 0.
    const BigInt power = (k == 0) ? BigInt(m == 0 ? 1 : 0) : int_pow(BigInt(k), m);
    if (k % 2 == 0) {
      sum += binom * power;
    } else {
      sum -= binom * power;
    }
    binom = binom * (n - k) / (k + 1);
  }
  return sum;
}

CongruenceRecord lemma21_check(long n) {
  if (n < 1) out_of_range("need n >= 1, got " + std::to_string(n));
  const Stopwatch clock;
  BigInt defect = 0;
  for (long m = 0; m < n && defect == 0; ++m) defect = lemma21_sum(n, m);
  if (defect == 0) {
    BigInt factorial;
    mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(n));
    const BigInt expected = (n % 2 == 0) ? factorial : BigInt(-factorial);
    defect = lemma21_sum(n, n) - expected;
  }
  return make_exact_record(StatementId::LEMMA21, {.n = n}, defect, clock);
}

CongruenceRecord lemma22_check(long p, long q) {
  if (q < 1 || p <= 2 * q) {
    out_of_range("need q >= 1 and p > 2q (p=" + std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }
  require_prime(p);
  const Stopwatch clock;
  const RingCtx ctx(BigInt(p), 1);

  // prefix[x] = sum_{1<=j<=x} 1/j^2 for 0 <= x <= p - 1.
  std::vector<RingElem> prefix{ctx.zero()};
  prefix.reserve(static_cast<std::size_t>(p));
  for (long j = 1; j < p; ++j) prefix.push_back(prefix.back() + inv(pow(ctx.from_int(j), 2)));
  auto range_sum = [&](long lo, long hi) {  // sum_{lo<=j<=hi}, empty when hi < lo
    if (hi < lo) return ctx.zero();
    return prefix[static_cast<std::size_t>(hi)] - prefix[static_cast<std::size_t>(lo - 1)];
  };

  const RingElem middle = range_sum(q, p - q);
  for (long k = q - 1; k <= p - 1; ++k) {
    const RingElem lhs = range_sum(q, k) + range_sum(q, p + q - 2 - k);
    // sum_{0<=l<q-1} 1/(k-l)^2 covers j = k-q+2 .. k.
    const RingElem rhs = middle + range_sum(k - q + 2, k);
    const RingElem diff = lhs - rhs;
    if (!diff.is_zero()) {
      return make_record(StatementId::LEMMA22, {.p = p, .q = q, .k = k}, diff, clock);
    }
  }
  return make_record(StatementId::LEMMA22, {.p = p, .q = q}, ctx.zero(), clock);
}

std::pair<CongruenceRecord, CongruenceRecord> lemma23_check(long p, long m, long q) {
  require_mqp(m, q, p);
  const RingCtx ctx(BigInt(p), 1);

  const Stopwatch clock_a;
  RingElem plain = ctx.zero();
  for (long k = q - 1; k <= p - 1; ++k) plain += ctx.from_int(int_pow(int_binomial(k, q - 1), m));
  auto rec_a = make_record(StatementId::LEMMA23_A, {.p = p, .m = m, .q = q}, plain, clock_a);

  const Stopwatch clock_b;
  RingElem weighted = ctx.zero();
  for (long k = q - 1; k <= p - 1; ++k) {
    RingElem w = ctx.zero();
    for (long l = 0; l < q - 1; ++l) w += inv(pow(ctx.from_int(k - l), 2));
    weighted += ctx.from_int(int_pow(int_binomial(k, q - 1), m)) * w;
  }
  auto rec_b = make_record(StatementId::LEMMA23_B, {.p = p, .m = m, .q = q}, weighted, clock_b);
  return {std::move(rec_a), std::move(rec_b)};
}

CongruenceRecord reflection_check(long p, long m, long q) {
  require_mqp(m, q, p);
  require_parity(m, q);
  const Stopwatch clock;
  const RingCtx ctx(BigInt(p), 1);
  for (long k = q - 1; k <= p - 1; ++k) {
    const RingElem lhs = ctx.from_int(int_pow(int_binomial(p + q - 2 - k, q - 1), m));
    const RingElem rhs = ctx.from_int(int_pow(int_binomial(k, q - 1), m));
    if (!(lhs == rhs)) {
      return make_record(StatementId::REFLECTION, {.p = p, .m = m, .q = q, .k = k}, lhs - rhs, clock);
    }
  }
  return make_record(StatementId::REFLECTION, {.p = p, .m = m, .q = q}, ctx.zero(), clock);
}

CongruenceRecord proof_step_check(long m, long q, long p) {
  require_mqp(m, q, p);
  const Stopwatch clock;
  const RingCtx ctx(BigInt(p), 3);
  const RingElem main_sum = theorem12_sum(m, q, p, 3);

  const BigInt integer_part = alternating_binomial_sum(m, q, p, p - 1);

  const RingElem coeff = embed_rational(BigInt(m - 1), BigInt(2 * m), ctx);
  const RingElem p_squared = ctx.from_int(BigInt(p) * p);
  const RingElem tail = p_squared * coeff * weighted_square_harmonic(m, q, p, ctx);
  const RingElem diff = main_sum - ctx.from_int(integer_part) - tail;
  return make_record(StatementId::PROOF_STEP, {.p = p, .m = m, .q = q}, diff, clock);
}

CongruenceRecord halfsum_check(long p, long m, long q) {
  require_mqp(m, q, p);
  require_parity(m, q);
  const Stopwatch clock;
  const RingCtx ctx(BigInt(p), 1);
  const RingElem doubled = ctx.from_int(2L) * weighted_square_harmonic(m, q, p, ctx);
  return make_record(StatementId::HALFSUM, {.p = p, .m = m, .q = q}, doubled, clock);
}

CongruenceRecord central_identity_check(long m, long q, long p) {
  if (m < 1 || q < 1) out_of_range("need m >= 1 and q >= 1");
  require_prime(p);
  if ((m - 1) * (q - 1) >= p - q) {
    throw Error(ErrorCode::DegreeTooLarge, "(m-1)(q-1) = " + std::to_string((m - 1) * (q - 1)) +
                                               " >= p - q = " + std::to_string(p - q));
  }
  const Stopwatch clock;
  const BigInt short_form = alternating_binomial_sum(m, q, p, p - q);
  const BigInt long_form = alternating_binomial_sum(m, q, p, p - 1);
  const BigInt defect = short_form != 0 ? short_form : BigInt(long_form - short_form);
  return make_exact_record(StatementId::CENTRAL_IDENTITY, {.p = p, .m = m, .q = q}, defect, clock);
}

CongruenceRecord power_sum_check(long p) {
  require_prime(p);
  const Stopwatch clock;
  const RingCtx ctx(BigInt(p), 1);
  for (long j = 1; j <= p - 2; ++j) {
    RingElem sum = ctx.zero();
    for (long k = 1; k < p; ++k) sum += pow(ctx.from_int(k), static_cast<std::uint64_t>(j));
    // k carries the failing exponent j.
    if (!sum.is_zero()) return make_record(StatementId::POWER_SUM, {.p = p, .k = j}, sum, clock);
  }
  return make_record(StatementId::POWER_SUM, {.p = p}, ctx.zero(), clock);
}

}  // namespace supercong
