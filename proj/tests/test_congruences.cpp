#include "doctest.h"
#include "oracles.hpp"
#include "supercong/congruences.hpp"
#include "supercong/sweep.hpp"

using namespace supercong;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::EmptyGrid;
}

}  // namespace

TEST_CASE("statement table") {
  for (StatementId id : kAllStatements) {
    CHECK(parse_statement(statement_name(id)) == id);
  }
  CHECK_FALSE(parse_statement("THM13").has_value());
  CHECK(required_valuation(StatementId::THM12) == Valuation::finite(3));
  CHECK(required_valuation(StatementId::THM11_A) == Valuation::finite(5));
  CHECK(required_valuation(StatementId::THM11_B) == Valuation::finite(5));
  CHECK(required_valuation(StatementId::WOLSTENHOLME_H) == Valuation::finite(2));
  CHECK(required_valuation(StatementId::WOLSTENHOLME_B) == Valuation::finite(3));
  CHECK(required_valuation(StatementId::LEMMA23_B) == Valuation::finite(1));
  CHECK(required_valuation(StatementId::CENTRAL_IDENTITY) == Valuation::infinite());
}

TEST_CASE("valuation ordering") {
  CHECK(meets(Valuation::at_least(3), Valuation::finite(3)));
  CHECK_FALSE(meets(Valuation::at_least(1), Valuation::finite(3)));
  CHECK(meets(Valuation::finite(4), Valuation::finite(3)));
  CHECK_FALSE(meets(Valuation::finite(2), Valuation::finite(3)));
  CHECK(meets(Valuation::infinite(), Valuation::infinite()));
  CHECK_FALSE(meets(Valuation::at_least(99), Valuation::infinite()));
}

TEST_CASE("binomial sequence") {
  const RingCtx z(5, 3);
  const RingElem r = embed_rational(2, 3, z);
  const auto seq = binomial_sequence(r, 4);
  REQUIRE(seq.size() == 5);
  CHECK(seq[0].is_one());
  CHECK(seq[1] == r);
  CHECK(seq[2].residue() == 111);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    CHECK(seq[k] == reduce_mod(rat_binomial(BigRational(2, 3), k), z));
  }
  CHECK(code_of([&] { binomial_sequence(r, 5); }) == ErrorCode::KmaxTooLarge);
}

TEST_CASE("main supercongruence examples") {
  for (auto [m, q, p] : {std::tuple{4L, 1L, 5L}, {3L, 1L, 5L}, {6L, 2L, 13L}}) {
    const auto rec = theorem12_residue(m, q, p);
    CHECK(rec.residue == "0");
    CHECK(rec.modulus_exp == 3);
    CHECK(rec.observed == Valuation::at_least(3));
    CHECK(rec.pass);
  }
  CHECK(code_of([] { theorem12_residue(2, 1, 5); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { theorem12_residue(3, 0, 5); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { theorem12_residue(4, 1, 3); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { theorem12_residue(4, 1, 9); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("ring sum agrees with exact oracle, including excluded parameters") {
  for (long p : sieve(23)) {
    for (long m = 3; m <= 6; ++m) {
      for (long q = 1; q * m < p; ++q) {
        const RingCtx ctx(p, 3);
        const BigRational exact = exact_theorem12_sum(m, q, p);
        CHECK(theorem12_sum(m, q, p, 3) == reduce_mod(exact, ctx));
      }
    }
  }
}

TEST_CASE("truncation is monotone") {
  for (auto [m, q, p] : {std::tuple{3L, 2L, 11L}, {4L, 2L, 13L}, {5L, 1L, 31L}, {3L, 4L, 17L}}) {
    const RingElem high = theorem12_sum(m, q, p, 6);
    for (unsigned f = 1; f < 6; ++f) {
      const RingCtx low(p, f);
      CHECK(low.from_int(high.residue()) == theorem12_sum(m, q, p, f));
    }
  }
}

TEST_CASE("mod p^5 binomial power sums") {
  for (long p : {5L, 7L}) {
    const auto rec = theorem11_lhs1(p);
    CHECK(rec.residue == "0");
    CHECK(rec.pass);
  }
  CHECK(theorem11_rhs2(5).residue() == 2500);
  CHECK(theorem11_lhs2(5) == theorem11_rhs2(5));
  CHECK(theorem11_lhs2(7) == theorem11_rhs2(7));
  CHECK(theorem11_second(7).pass);
  CHECK(code_of([] { theorem11_lhs1(3); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { theorem11_rhs2(9); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("Wolstenholme") {
  auto [h5, b5] = wolstenholme_check(5);
  CHECK(h5.observed == Valuation::finite(2));  // H_4 = 25/12
  CHECK(h5.pass);
  CHECK(b5.residue == "0");  // C(9,4) = 126
  CHECK(b5.pass);
  auto [h7, b7] = wolstenholme_check(7);
  CHECK(h7.pass);
  CHECK(b7.pass);  // C(13,6) = 1716 = 5*343 + 1
  CHECK(code_of([] { wolstenholme_check(3); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("alternating power identity") {
  CHECK(lemma21_sum(2, 0) == 0);
  CHECK(lemma21_sum(3, 2) == 0);
  CHECK(lemma21_sum(2, 2) == 2);
  CHECK(lemma21_sum(3, 3) == -6);
  CHECK(lemma21_sum(1, 0) == 0);
  const auto rec = lemma21_check(5);
  CHECK(rec.pass);
  CHECK(rec.modulus_exp == 0);
  CHECK(rec.observed == Valuation::infinite());
  CHECK(code_of([] { lemma21_check(0); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("square harmonic symmetry") {
  CHECK(lemma22_check(5, 2).pass);
  CHECK(lemma22_check(7, 2).pass);
  CHECK(lemma22_check(7, 1).pass);
  CHECK(lemma22_check(101, 50).pass);
  CHECK(code_of([] { lemma22_check(5, 3); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { lemma22_check(4, 1); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("power sums of binomials") {
  auto [a1, b1] = lemma23_check(5, 3, 1);
  CHECK(a1.pass);
  CHECK(b1.pass);
  auto [a2, b2] = lemma23_check(7, 3, 2);  // sum k^3 = 441, sum k = 21
  CHECK(a2.pass);
  CHECK(b2.pass);
  CHECK(code_of([] { lemma23_check(7, 3, 3); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("reflection") {
  CHECK(reflection_check(7, 3, 1).pass);
  CHECK(reflection_check(11, 3, 3).pass);
  CHECK(reflection_check(11, 4, 2).pass);
  CHECK(code_of([] { reflection_check(11, 3, 2); }) == ErrorCode::ParameterOutOfRange);
  CHECK(code_of([] { reflection_check(7, 3, 3); }) == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("proof steps") {
  CHECK(proof_step_check(3, 1, 5).pass);
  CHECK(proof_step_check(4, 1, 7).pass);
  CHECK(proof_step_check(4, 2, 11).pass);
  CHECK(halfsum_check(5, 3, 1).pass);
  CHECK(halfsum_check(7, 3, 1).pass);
  CHECK(halfsum_check(11, 4, 2).pass);
  CHECK(code_of([] { halfsum_check(7, 3, 2); }) == ErrorCode::ParameterOutOfRange);

  for (auto [m, q, p] : {std::tuple{3L, 2L, 7L}, {5L, 1L, 7L}, {4L, 2L, 11L}}) {
    const auto rec = central_identity_check(m, q, p);
    CHECK(rec.pass);
    CHECK(rec.residue == "0");
  }
  CHECK(code_of([] { central_identity_check(8, 4, 11); }) == ErrorCode::DegreeTooLarge);
}

TEST_CASE("power sums vanish mod p") {
  for (long p : sieve(31)) {
    CHECK(power_sum_check(p).pass);
    // Direct check with the naive power oracle.
    for (long j = 1; j <= p - 2; ++j) {
      mpz_class s = 0;
      for (long k = 0; k < p; ++k) s += oracle::naive_pow_mod(k, static_cast<unsigned>(j), p);
      CHECK(s % p == 0);
    }
  }
}

TEST_CASE("a genuine failure is reported as one") {
  // m odd with q even lies outside the hypothesis; the sum only reaches p^2.
  const auto rec = theorem12_residue(3, 2, 7);
  CHECK(rec.residue != "0");
  CHECK_FALSE(rec.pass);
  CHECK(is_failure(rec));
  // Too little precision cannot certify the mod p^3 claim either.
  CHECK_FALSE(theorem12_residue(4, 1, 5, 2).pass);
}
