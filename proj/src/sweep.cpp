#include "supercong/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace supercong {

std::vector<long> sieve(long limit) {
  std::vector<long> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
  for (long i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = i * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return primes;
}

long Grid::p_max_for(StatementId id) const {
  const auto it = p_max_by_statement.find(id);
  return it == p_max_by_statement.end() ? p_max : it->second;
}

void Grid::validate() const {
  auto bad = [](const std::string& what) { throw Error(ErrorCode::ParameterOutOfRange, what); };
  if (m_range.lo < 3 || m_range.hi < m_range.lo) bad("m range must satisfy 3 <= lo <= hi");
  if (q_range.lo < 1 || q_range.hi < q_range.lo) bad("q range must satisfy 1 <= lo <= hi");
  if (p_min < 2 || p_max < p_min) bad("prime bounds must satisfy 2 <= p_min <= p_max");
  if (e_override && *e_override == 0) bad("modulus exponent must be at least 1");
  for (const auto& [id, bound] : p_max_by_statement) {
    if (bound < 2) bad(std::string(statement_name(id)) + " prime bound below 2");
  }
}

Grid default_grid() {
  Grid grid;
  grid.statements.assign(kAllStatements.begin(), kAllStatements.end());
  grid.p_max_by_statement = {
      {StatementId::THM11_A, 97},
      {StatementId::THM11_B, 97},
      {StatementId::WOLSTENHOLME_H, 499},
      {StatementId::WOLSTENHOLME_B, 499},
  };
  return grid;
}

namespace {

bool indexed_by_mq(StatementId id) {
  switch (id) {
    case StatementId::THM12:
    case StatementId::PROOF_STEP:
    case StatementId::LEMMA23_A:
    case StatementId::LEMMA23_B:
    case StatementId::REFLECTION:
    case StatementId::HALFSUM:
    case StatementId::CENTRAL_IDENTITY:
      return true;
    default:
      return false;
  }
}

// Verifiers whose own preconditions do not include the parity condition.
bool accepts_excluded(StatementId id) {
  return id != StatementId::REFLECTION && id != StatementId::HALFSUM;
}

template <typename P>
int compare_opt(const std::optional<P>& a, const std::optional<P>& b) {
  if (a == b) return 0;
  return a < b ? -1 : 1;  // nullopt < any value
}

}  // namespace

std::vector<Task> expand_grid(const Grid& grid) {
  grid.validate();
  std::vector<StatementId> ids = grid.statements;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<Task> tasks;
  for (StatementId id : ids) {
    const std::vector<long> primes = sieve(grid.p_max_for(id));
    auto primes_from = [&](long lo) {
      std::vector<long> out;
      for (long p : primes) {
        if (p >= std::max(lo, grid.p_min)) out.push_back(p);
      }
      return out;
    };

    if (indexed_by_mq(id)) {
      for (long p : primes_from(2)) {
        for (long m = grid.m_range.lo; m <= grid.m_range.hi; ++m) {
          for (long q = grid.q_range.lo; q <= grid.q_range.hi; ++q) {
            if (p <= m * q) continue;
            const bool admissible = satisfies_parity(m, q);
            if (!admissible && !(grid.include_excluded && accepts_excluded(id))) continue;
            tasks.push_back({id, {.p = p, .m = m, .q = q}, admissible});
          }
        }
      }
      continue;
    }

    switch (id) {
      case StatementId::THM11_A:
      case StatementId::THM11_B:
      case StatementId::WOLSTENHOLME_H:
      case StatementId::WOLSTENHOLME_B:
        for (long p : primes_from(5)) tasks.push_back({id, {.p = p}});
        break;
      case StatementId::POWER_SUM:
        for (long p : primes_from(2)) tasks.push_back({id, {.p = p}});
        break;
      case StatementId::LEMMA22:
        // Every q with p > 2q is in the domain; only q_range.lo bounds it.
        for (long p : primes_from(3)) {
          for (long q = grid.q_range.lo; 2 * q < p; ++q) tasks.push_back({id, {.p = p, .q = q}});
        }
        break;
      case StatementId::LEMMA21:
        for (long n = 1; n <= grid.n_max; ++n) tasks.push_back({id, {.n = n}});
        break;
      default:
        break;
    }
  }
  return tasks;
}

CongruenceRecord run_task(const Task& task, std::optional<unsigned> e_override) {
  const Params& a = task.params;
  const long p = a.p.value_or(0), m = a.m.value_or(0), q = a.q.value_or(0);
  CongruenceRecord rec;
  switch (task.statement) {
    case StatementId::THM12: rec = theorem12_residue(m, q, p, e_override.value_or(3)); break;
    case StatementId::THM11_A: rec = theorem11_lhs1(p); break;
    case StatementId::THM11_B: rec = theorem11_second(p); break;
    case StatementId::WOLSTENHOLME_H: rec = wolstenholme_check(p).first; break;
    case StatementId::WOLSTENHOLME_B: rec = wolstenholme_check(p).second; break;
    case StatementId::LEMMA21: rec = lemma21_check(a.n.value_or(0)); break;
    case StatementId::LEMMA22: rec = lemma22_check(p, q); break;
    case StatementId::LEMMA23_A: rec = lemma23_check(p, m, q).first; break;
    case StatementId::LEMMA23_B: rec = lemma23_check(p, m, q).second; break;
    case StatementId::PROOF_STEP: rec = proof_step_check(m, q, p); break;
    case StatementId::HALFSUM: rec = halfsum_check(p, m, q); break;
    case StatementId::REFLECTION: rec = reflection_check(p, m, q); break;
    case StatementId::CENTRAL_IDENTITY: rec = central_identity_check(m, q, p); break;
    case StatementId::POWER_SUM: rec = power_sum_check(p); break;
  }
  rec.asserted = task.asserted;
  return rec;
}

bool ordering_less(const CongruenceRecord& a, const CongruenceRecord& b) {
  if (a.statement != b.statement) return a.statement < b.statement;
  const Params& x = a.params;
  const Params& y = b.params;
  for (int c : {compare_opt(x.p, y.p), compare_opt(x.m, y.m), compare_opt(x.q, y.q),
                compare_opt(x.n, y.n), compare_opt(x.k, y.k)}) {
    if (c != 0) return c < 0;
  }
  return false;
}

SweepResult run_grid(const Grid& grid, unsigned parallelism) {
  const std::vector<Task> tasks = expand_grid(grid);
  if (tasks.empty()) throw Error(ErrorCode::EmptyGrid, "no admissible (statement, m, q, p) point");

  std::vector<CongruenceRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        records[i] = run_task(tasks[i], grid.e_override);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  const unsigned workers =
      std::clamp<unsigned>(parallelism, 1U, static_cast<unsigned>(std::min<std::size_t>(tasks.size(), 256)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(records.begin(), records.end(), ordering_less);
  SweepResult result;
  for (const auto& rec : records) {
    if (!rec.asserted) {
      ++result.summary.observational;
    } else if (rec.pass) {
      ++result.summary.passed;
    } else {
      ++result.summary.failed;
    }
  }
  result.records = std::move(records);
  return result;
}

Valuation explore_valuation(long m, long q, long p, unsigned e_max) {
  if (e_max < 1 || e_max > 8) {
    throw Error(ErrorCode::ParameterOutOfRange, "e_max must lie in [1, 8]");
  }
  return valuation(theorem12_sum(m, q, p, e_max));
}

}  // namespace supercong
