#pragma once

// One verifier per checkable statement.  Every verifier returns a
// CongruenceRecord holding the residue it computed and whether the observed
// valuation reaches the statement's required valuation.
//
// Two-sided congruences A = B are recorded through the residue of A - B, so
// "pass" always means "observed valuation >= required valuation".  Exact
// integer identities (LEMMA21, CENTRAL_IDENTITY) use modulus_exp 0 and require
// an infinite valuation, i.e. an exact zero.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "supercong/exact.hpp"
#include "supercong/ring.hpp"

namespace supercong {

enum class StatementId {
  WOLSTENHOLME_H,
  WOLSTENHOLME_B,
  THM11_A,
  THM11_B,
  THM12,
  LEMMA21,
  LEMMA22,
  LEMMA23_A,
  LEMMA23_B,
  PROOF_STEP,
  HALFSUM,
  REFLECTION,
  CENTRAL_IDENTITY,
  POWER_SUM,
};

inline constexpr std::array<StatementId, 14> kAllStatements = {
    StatementId::WOLSTENHOLME_H, StatementId::WOLSTENHOLME_B, StatementId::THM11_A,
    StatementId::THM11_B,        StatementId::THM12,          StatementId::LEMMA21,
    StatementId::LEMMA22,        StatementId::LEMMA23_A,      StatementId::LEMMA23_B,
    StatementId::PROOF_STEP,     StatementId::HALFSUM,        StatementId::REFLECTION,
    StatementId::CENTRAL_IDENTITY, StatementId::POWER_SUM,
};

std::string_view statement_name(StatementId id) noexcept;
std::optional<StatementId> parse_statement(std::string_view name) noexcept;
Valuation required_valuation(StatementId id) noexcept;

struct Params {
  std::optional<long> p = std::nullopt, m = std::nullopt, q = std::nullopt, n = std::nullopt,
                      k = std::nullopt;
  auto operator<=>(const Params&) const = default;
};

struct CongruenceRecord {
  StatementId statement = StatementId::THM12;
  Params params;
  unsigned modulus_exp = 0;  // 0 marks exact integer arithmetic
  std::string residue = "0";
  Valuation observed;
  Valuation required;
  bool asserted = true;  // false for observational (excluded-parameter) runs
  bool pass = false;
  std::optional<std::int64_t> micros;  // wall time of the verifier, when kept
};

/// True when the record is asserted and failed.
inline bool is_failure(const CongruenceRecord& r) { return r.asserted && !r.pass; }

/// m even or q odd.
constexpr bool satisfies_parity(long m, long q) noexcept { return m % 2 == 0 || q % 2 != 0; }

/// C(r, k) for k = 0..kmax in the ring of r, via C(r,k) = C(r,k-1)(r-k+1)/k.
/// Throws KmaxTooLarge when kmax >= p.
std::vector<RingElem> binomial_sequence(const RingElem& r, long kmax);

/// sum_{k<p} (-1)^{km} C(p/m - q, k)^m in Z/p^e without the record wrapper.
/// Needs only m > 2, q > 0, p > mq; the parity condition is not checked.
RingElem theorem12_sum(long m, long q, long p, unsigned e);

CongruenceRecord theorem12_residue(long m, long q, long p, unsigned e = 3);

CongruenceRecord theorem11_lhs1(long p);
RingElem theorem11_lhs2(long p);
RingElem theorem11_rhs2(long p);
/// THM11_B: residue of lhs2 - rhs2 in Z/p^5.
CongruenceRecord theorem11_second(long p);

/// {WOLSTENHOLME_H, WOLSTENHOLME_B}.
std::pair<CongruenceRecord, CongruenceRecord> wolstenholme_check(long p);

/// sum_{k=0}^{n} C(n,k) (-1)^k k^m in exact integers, with 0^0 = 1.
BigInt lemma21_sum(long n, long m);
/// All m < n vanish and the m = n value equals (-1)^n n!.
CongruenceRecord lemma21_check(long n);

CongruenceRecord lemma22_check(long p, long q);

/// {LEMMA23_A, LEMMA23_B}.
std::pair<CongruenceRecord, CongruenceRecord> lemma23_check(long p, long m, long q);

CongruenceRecord reflection_check(long p, long m, long q);
CongruenceRecord proof_step_check(long m, long q, long p);
CongruenceRecord halfsum_check(long p, long m, long q);
CongruenceRecord central_identity_check(long m, long q, long p);

/// sum_{k<p} k^j = 0 (mod p) for every 1 <= j <= p - 2.
CongruenceRecord power_sum_check(long p);

}  // namespace supercong
