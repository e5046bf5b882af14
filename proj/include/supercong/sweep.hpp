#pragma once

// Parameter grids and their parallel execution.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "supercong/congruences.hpp"

namespace supercong {

/// All primes <= limit in ascending order (Eratosthenes).
std::vector<long> sieve(long limit);

struct IntRange {
  long lo = 0;
  long hi = 0;
  bool contains(long x) const noexcept { return lo <= x && x <= hi; }
};

struct Grid {
  std::vector<StatementId> statements;
  IntRange m_range{3, 8};
  IntRange q_range{1, 4};
  long p_min = 2;
  long p_max = 311;
  /// Modulus exponent for THM12 records (default 3).
  std::optional<unsigned> e_override;
  /// Also run m odd / q even points; their records are observational.
  bool include_excluded = false;
  /// LEMMA21 runs n = 1..n_max.
  long n_max = 60;
  /// Per-statement replacement for p_max.
  std::map<StatementId, long> p_max_by_statement;

  long p_max_for(StatementId id) const;
  /// Throws ParameterOutOfRange on a malformed grid.
  void validate() const;
};

/// Every statement; THM12 and the (m, q)-indexed checks to p <= 311,
/// the mod p^5 pair to p <= 97 and Wolstenholme to p <= 499.
Grid default_grid();

struct Task {
  StatementId statement;
  Params params;
  bool asserted = true;
};

/// Admissible tasks of the grid, in ordering-key order.
std::vector<Task> expand_grid(const Grid& grid);

/// Runs one task through its verifier.
CongruenceRecord run_task(const Task& task, std::optional<unsigned> e_override = std::nullopt);

/// (statement, p, m, q, n, k); absent parameters sort first.
bool ordering_less(const CongruenceRecord& a, const CongruenceRecord& b);

struct SweepSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t observational = 0;
};

struct SweepResult {
  std::vector<CongruenceRecord> records;  // sorted by ordering key
  SweepSummary summary;
};

/// Runs every admissible task on up to `parallelism` worker threads.  The
/// output does not depend on `parallelism`.  Throws EmptyGrid when the grid
/// has no admissible point.
SweepResult run_grid(const Grid& grid, unsigned parallelism);

/// Observed valuation of the THM12 sum in Z/p^{e_max}; no pass/fail claim.
/// Parity-excluded (m, q) are allowed.  Needs p > mq and 1 <= e_max <= 8.
Valuation explore_valuation(long m, long q, long p, unsigned e_max);

}  // namespace supercong
