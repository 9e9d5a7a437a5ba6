#include "circhad/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "circhad/block_structure.hpp"

namespace circhad {

namespace {

constexpr std::uint64_t full_mask(int n) {
  return n == 64 ? ~0ULL : (1ULL << n) - 1;
}

std::uint64_t rotl_mask(std::uint64_t x, int r, int n) {
  if (r == 0) return x;
  return ((x << r) | (x >> (n - r))) & full_mask(n);
}

std::uint64_t reverse_mask(std::uint64_t x, int n) {
  std::uint64_t y = 0;
  for (int j = 0; j < n; ++j)
    if ((x >> j) & 1) y |= 1ULL << (n - 1 - j);
  return y;
}

// lexicographic on entries from position 0, -1 (clear bit) < +1 (set bit)
bool mask_lex_less(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t diff = a ^ b;
  if (!diff) return false;
  return ((a >> std::countr_zero(diff)) & 1) == 0;
}

std::uint64_t canonical_mask(std::uint64_t x, int n, SymmetryGroup g) {
  std::uint64_t best = x;
  const int rmax = g.rotation ? n : 1;
  for (int r = 0; r < rmax; ++r) {
    const std::uint64_t rx = rotl_mask(x, r, n);
    for (int b = 0; b <= (g.reversal ? 1 : 0); ++b) {
      const std::uint64_t bx = b ? reverse_mask(rx, n) : rx;
      for (int a = 0; a <= (g.negation ? 1 : 0); ++a) {
        const std::uint64_t cand = a ? (~bx & full_mask(n)) : bx;
        if (mask_lex_less(cand, best)) best = cand;
      }
    }
  }
  return best;
}

int alpha1_mask(std::uint64_t x, int n) {
  const std::uint64_t m = full_mask(n);
  const std::uint64_t starts = x ^ rotl_mask(x, 1, n);  // bit j: a block begins at j
  if (starts == 0) return 0;                            // constant row
  // blocks of size 1 begin at j with starts[j] and starts[j+1] both set
  const std::uint64_t ones = starts & rotl_mask(starts, n - 1, n);
  if (ones == 0) return 0;
  if (ones == m) return 1;  // fully alternating row: a single wrapped run
  // runs of consecutive 1-blocks = circular runs of set bits
  return std::popcount(ones & ~rotl_mask(ones, 1, n));
}

struct EngineSetup {
  int n = 0;
  int keff = 0;       // constraints paf(1..keff) = 0 cover paf(1..K) via paf(s) = paf(n-s)
  bool halve = false; // explore bit0 = 0 only; negation pairs up the other half
  bool sum_filter = false;
  int sum_abs = 0;
  std::optional<int> alpha1;
  std::uint64_t work_budget = default_work_budget;
  int jobs = 1;
  // leaf handling
  bool collect = false;              // gather canonical witnesses
  SymmetryGroup group;               // for collect
  const std::function<bool(std::uint64_t)>* raw_sink = nullptr;
  const std::function<bool(const SignRow&)>* canonical_sink = nullptr;
};

struct EngineShared {
  std::atomic<std::uint32_t> next_task{0};
  std::atomic<std::uint64_t> work{0};
  std::atomic<bool> cancel{false};
  std::atomic<bool> budget_exhausted{false};
  std::mutex sink_mutex;
};

struct EngineTotals {
  std::uint64_t leaves = 0;  // complete candidate rows reached
  std::uint64_t hits = 0;    // rows that also pass the filters
  std::uint64_t work = 0;
  std::vector<std::uint64_t> witnesses;
};

constexpr std::uint64_t work_flush_interval = 8192;

struct Worker {
  const EngineSetup& cfg;
  EngineShared& shared;

  std::array<int, 33> partial{};
  std::array<int, 33> undecided{};
  std::uint64_t bits = 0;
  int sum_partial = 0;
  int depth0 = 0;  // positions below this are fixed by the task prefix

  std::uint64_t leaves = 0, hits = 0, work_total = 0, work_pending = 0;
  std::vector<std::uint64_t> witnesses;
  bool stopped = false;

  explicit Worker(const EngineSetup& c, EngineShared& s) : cfg(c), shared(s) {}

  void reset_state() {
    for (int s = 1; s <= cfg.keff; ++s) {
      partial[static_cast<std::size_t>(s)] = 0;
      undecided[static_cast<std::size_t>(s)] = cfg.n;
    }
    bits = 0;
    sum_partial = 0;
  }

  void count_work() {
    ++work_total;
    if (++work_pending >= work_flush_interval) {
      const std::uint64_t w =
          shared.work.fetch_add(work_pending, std::memory_order_relaxed) + work_pending;
      work_pending = 0;
      if (w > cfg.work_budget) {
        shared.budget_exhausted.store(true, std::memory_order_relaxed);
        shared.cancel.store(true, std::memory_order_relaxed);
      }
      if (shared.cancel.load(std::memory_order_relaxed)) stopped = true;
    }
  }

  // apply the two per-shift terms decided by assigning position t
  void apply(int t, int dir) {
    for (int s = 1; s <= cfg.keff; ++s) {
      if (t >= s) {
        const int prod = (((bits >> (t - s)) ^ (bits >> t)) & 1) ? -1 : 1;
        partial[static_cast<std::size_t>(s)] += dir * prod;
        undecided[static_cast<std::size_t>(s)] -= dir;
      }
      if (t >= cfg.n - s) {
        const int prod = (((bits >> t) ^ (bits >> (t + s - cfg.n))) & 1) ? -1 : 1;
        partial[static_cast<std::size_t>(s)] += dir * prod;
        undecided[static_cast<std::size_t>(s)] -= dir;
      }
    }
  }

  bool feasible(int t) const {
    for (int s = 1; s <= cfg.keff; ++s) {
      const int p = partial[static_cast<std::size_t>(s)];
      const int u = undecided[static_cast<std::size_t>(s)];
      const int a = p < 0 ? -p : p;
      if (a > u || ((a + u) & 1)) return false;  // zero unreachable
    }
    if (cfg.sum_filter) {
      const int left = cfg.n - t - 1;
      const bool hi = std::abs(cfg.sum_abs - sum_partial) <= left &&
                      (((cfg.sum_abs - sum_partial) - left) & 1) == 0;
      const bool lo = std::abs(-cfg.sum_abs - sum_partial) <= left &&
                      (((-cfg.sum_abs - sum_partial) - left) & 1) == 0;
      if (!hi && !lo) return false;
    }
    return true;
  }

  // returns false when the search must stop (cancel / budget / sink)
  bool leaf() {
    ++leaves;
    if (cfg.sum_filter) {
      const int rs = 2 * std::popcount(bits) - cfg.n;
      if (rs * rs != cfg.n) return true;
    }
    if (cfg.alpha1 && alpha1_mask(bits, cfg.n) != *cfg.alpha1) return true;
    ++hits;
    if (cfg.collect) {
      if (cfg.group.empty() || canonical_mask(bits, cfg.n, cfg.group) == bits)
        witnesses.push_back(bits);
    }
    if (cfg.raw_sink) {
      std::lock_guard<std::mutex> lk(shared.sink_mutex);
      if (!(*cfg.raw_sink)(bits)) {
        shared.cancel.store(true, std::memory_order_relaxed);
        return false;
      }
    }
    if (cfg.canonical_sink) {
      if (cfg.group.empty() || canonical_mask(bits, cfg.n, cfg.group) == bits) {
        const SignRow row = row_from_mask(bits, cfg.n);
        std::lock_guard<std::mutex> lk(shared.sink_mutex);
        if (!(*cfg.canonical_sink)(row)) {
          shared.cancel.store(true, std::memory_order_relaxed);
          return false;
        }
      }
    }
    return true;
  }

  void dfs(int t) {
    if (t == cfg.n) {
      if (!leaf()) stopped = true;
      return;
    }
    for (int v = 0; v < 2 && !stopped; ++v) {
      if (v)
        bits |= 1ULL << t;
      else
        bits &= ~(1ULL << t);
      sum_partial += v ? 1 : -1;
      apply(t, +1);
      count_work();
      if (feasible(t)) dfs(t + 1);
      apply(t, -1);
      sum_partial -= v ? 1 : -1;
    }
  }

  // assign the fixed task prefix; returns false if it is already infeasible
  bool enter_prefix(const std::vector<int>& values) {
    reset_state();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const int t = static_cast<int>(i);
      if (values[i])
        bits |= 1ULL << t;
      sum_partial += values[i] ? 1 : -1;
      apply(t, +1);
      count_work();
      if (!feasible(t)) return false;
    }
    depth0 = static_cast<int>(values.size());
    return true;
  }
};

EngineTotals run_engine(const EngineSetup& cfg, bool& budget_exhausted, bool& cancelled) {
  EngineShared shared;

  const int fixed = cfg.halve ? 1 : 0;
  const int free = cfg.n - fixed;
  const int task_depth = free <= 10 ? 0 : std::min(12, free - 8);
  const std::uint32_t ntasks = 1u << task_depth;
  const int jobs = std::max(1, std::min(cfg.jobs, static_cast<int>(ntasks)));

  std::mutex merge_mutex;
  EngineTotals totals;

  auto worker_main = [&]() {
    Worker w(cfg, shared);
    for (;;) {
      if (shared.cancel.load(std::memory_order_relaxed)) break;
      const std::uint32_t task = shared.next_task.fetch_add(1, std::memory_order_relaxed);
      if (task >= ntasks) break;
      std::vector<int> prefix;
      prefix.reserve(static_cast<std::size_t>(fixed + task_depth));
      if (cfg.halve) prefix.push_back(0);
      for (int q = 0; q < task_depth; ++q) prefix.push_back((task >> q) & 1);
      w.stopped = false;
      if (w.enter_prefix(prefix) && !w.stopped) w.dfs(w.depth0);
      if (shared.cancel.load(std::memory_order_relaxed)) break;
    }
    shared.work.fetch_add(w.work_pending, std::memory_order_relaxed);
    std::lock_guard<std::mutex> lk(merge_mutex);
    totals.leaves += w.leaves;
    totals.hits += w.hits;
    totals.work += w.work_total;
    totals.witnesses.insert(totals.witnesses.end(), w.witnesses.begin(), w.witnesses.end());
  };

  if (jobs == 1) {
    worker_main();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker_main);
    for (auto& th : pool) th.join();
  }

  budget_exhausted = shared.budget_exhausted.load();
  cancelled = shared.cancel.load();
  return totals;
}

int effective_shifts(int n, int K) {
  // paf(s) = paf(n-s): shifts above n/2 fold back, so 1..K reduces to
  // 1..min(K, n/2)
  return std::min(K, n / 2);
}

void validate_order(int n) {
  if (n < 2 || n > max_search_order)
    throw std::invalid_argument("search order must be in [2, " +
                                std::to_string(max_search_order) + "], got " +
                                std::to_string(n));
}

void validate_config(const SearchConfig& c) {
  validate_order(c.n);
  if (c.shift_budget < 1 || c.shift_budget > c.n - 1)
    throw std::invalid_argument("shift budget must satisfy 1 <= K <= n-1");
  if (c.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (c.filters.row_sum_square && c.shift_budget != c.n - 1)
    throw std::invalid_argument(
        "row-sum filter is implied by full orthogonality only; it requires K = n-1");
  if (c.filters.alpha1 && *c.filters.alpha1 < 0)
    throw std::invalid_argument("alpha1 filter must be nonnegative");
}

}  // namespace

std::uint64_t mask_from_row(const SignRow& row) {
  if (row.size() > 64) throw std::invalid_argument("mask_from_row: row longer than 64");
  std::uint64_t x = 0;
  for (int j = 0; j < row.size(); ++j)
    if (row[j] > 0) x |= 1ULL << j;
  return x;
}

SignRow row_from_mask(std::uint64_t mask, int n) {
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    e[static_cast<std::size_t>(j)] = ((mask >> j) & 1) ? 1 : -1;
  return SignRow(std::move(e));
}

SearchResult enumerate_rows(const SearchConfig& config) {
  validate_config(config);
  const auto t0 = std::chrono::steady_clock::now();

  EngineSetup cfg;
  cfg.n = config.n;
  cfg.keff = effective_shifts(config.n, config.shift_budget);
  cfg.halve = config.symmetry.negation;
  cfg.sum_filter = config.filters.row_sum_square;
  if (cfg.sum_filter) {
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(config.n))));
    cfg.sum_abs = r;  // when r^2 != n the leaf check rejects everything
  }
  cfg.alpha1 = config.filters.alpha1;
  cfg.work_budget = config.work_budget;
  cfg.jobs = config.jobs;
  cfg.collect = true;
  cfg.group = config.symmetry;

  bool budget = false, cancelled = false;
  EngineTotals totals = run_engine(cfg, budget, cancelled);

  SearchResult res;
  res.n = config.n;
  res.shift_budget = config.shift_budget;
  res.symmetry = config.symmetry;
  res.status = budget ? SearchStatus::failed_work_budget : SearchStatus::ok;
  res.nodes_visited = totals.leaves;
  res.count_total = totals.hits * (cfg.halve ? 2 : 1);

  std::sort(totals.witnesses.begin(), totals.witnesses.end(), mask_lex_less);
  res.count_canonical = totals.witnesses.size();

  for (std::uint64_t w : totals.witnesses) {
    const SignRow row = row_from_mask(w, config.n);
    ++res.alpha1_distribution[census(decompose(row)).alpha1];
    const int k = max_orthogonal_prefix(row);
    if (k > res.max_k_overall) res.max_k_overall = k;
  }

  std::size_t keep = totals.witnesses.size();
  if (config.limit && *config.limit < keep) {
    keep = static_cast<std::size_t>(*config.limit);
    res.truncated = true;
  }
  res.witnesses.reserve(keep);
  for (std::size_t i = 0; i < keep; ++i)
    res.witnesses.push_back(row_from_mask(totals.witnesses[i], config.n));

  res.duration_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

StreamStats stream_rows(int n, int K, int jobs,
                        const std::function<bool(std::uint64_t)>& sink,
                        std::uint64_t work_budget) {
  validate_order(n);
  if (K < 1 || K > n - 1) throw std::invalid_argument("stream_rows: 1 <= K <= n-1");
  EngineSetup cfg;
  cfg.n = n;
  cfg.keff = effective_shifts(n, K);
  cfg.halve = false;
  cfg.work_budget = work_budget;
  cfg.jobs = std::max(1, jobs);
  cfg.raw_sink = &sink;

  bool budget = false, cancelled = false;
  EngineTotals totals = run_engine(cfg, budget, cancelled);
  StreamStats st;
  st.rows = totals.hits;
  st.work = totals.work;
  st.budget_exhausted = budget;
  st.complete = !cancelled && !budget;
  return st;
}

StreamStats corpus_with_prefix(int n, int K,
                               const std::function<bool(const SignRow&)>& sink,
                               int jobs, std::uint64_t work_budget) {
  validate_order(n);
  if (K < 1 || K > n - 1) throw std::invalid_argument("corpus_with_prefix: 1 <= K <= n-1");
  EngineSetup cfg;
  cfg.n = n;
  cfg.keff = effective_shifts(n, K);
  cfg.group = SymmetryGroup::all();
  cfg.halve = true;
  cfg.work_budget = work_budget;
  cfg.jobs = std::max(1, jobs);
  cfg.canonical_sink = &sink;

  bool budget = false, cancelled = false;
  EngineTotals totals = run_engine(cfg, budget, cancelled);
  StreamStats st;
  st.rows = totals.hits * 2;
  st.work = totals.work;
  st.budget_exhausted = budget;
  st.complete = !cancelled && !budget;
  return st;
}

namespace {

// does any row of order n satisfy paf(1..K) = 0?
bool any_row_with_prefix(int n, int K, int jobs) {
  bool found = false;
  const std::function<bool(std::uint64_t)> sink = [&found](std::uint64_t) {
    found = true;
    return false;  // first hit settles it
  };
  StreamStats st = stream_rows(n, K, jobs, sink);
  if (!found && st.budget_exhausted)
    throw WorkBudgetExceeded("work budget exhausted while probing order " + std::to_string(n));
  return found;
}

}  // namespace

MaxKResult find_max_k(int n, int jobs, std::optional<std::uint64_t> limit) {
  validate_order(n);
  MaxKResult res;
  res.n = n;

  if (!any_row_with_prefix(n, 1, jobs)) {
    // no row reaches prefix 2, so every row attains exactly 1 and the
    // witness set is all canonical rows of order n, generated in
    // lexicographic order; the sweep stops once `limit` rows are collected
    res.k = 1;
    res.count_total = 1ULL << n;
    if (!limit && n > 26)
      throw std::invalid_argument(
          "listing every canonical row of order " + std::to_string(n) +
          " is a 2^n sweep; pass a witness limit");
    const std::uint64_t cap = limit.value_or(~0ULL);
    for (std::uint64_t key = 0; key < (1ULL << n); ++key) {
      std::uint64_t mask = 0;
      for (int j = 0; j < n; ++j)
        if ((key >> (n - 1 - j)) & 1) mask |= 1ULL << j;
      if (canonical_mask(mask, n, SymmetryGroup::all()) != mask) continue;
      if (res.witnesses.size() >= cap) {
        res.truncated = true;  // count_canonical covers the collected rows only
        break;
      }
      ++res.count_canonical;
      res.witnesses.push_back(row_from_mask(mask, n));
    }
    return res;
  }

  int lo = 1, hi = n - 1;  // invariant: prefix-(lo) corpus nonempty
  while (lo < hi) {
    const int mid = (lo + hi + 1) / 2;
    if (any_row_with_prefix(n, mid, jobs))
      lo = mid;
    else
      hi = mid - 1;
  }

  SearchConfig cfg;
  cfg.n = n;
  cfg.shift_budget = lo;
  cfg.jobs = jobs;
  cfg.limit = limit;
  SearchResult sr = enumerate_rows(cfg);
  if (sr.status != SearchStatus::ok)
    throw WorkBudgetExceeded("work budget exhausted while enumerating order " +
                             std::to_string(n));
  res.k = lo + 1;
  res.witnesses = std::move(sr.witnesses);
  res.truncated = sr.truncated;
  res.count_total = sr.count_total;
  res.count_canonical = sr.count_canonical;
  return res;
}

RangeReport verify_conjecture_range(int n_max, int jobs) {
  if (n_max < 4 || n_max > max_search_order)
    throw std::invalid_argument("verify_conjecture_range: 4 <= n_max <= " +
                                std::to_string(max_search_order));
  RangeReport report;
  report.n_max = n_max;
  for (int n = 4; n <= n_max; ++n) {
    OrderReport entry;
    entry.n = n;
    const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
    if (r * r != n) {
      entry.verdict = OrderVerdict::skipped_by_sum;
      report.orders.push_back(std::move(entry));
      continue;
    }
    SearchConfig cfg;
    cfg.n = n;
    cfg.shift_budget = n - 1;
    cfg.filters.row_sum_square = true;
    cfg.jobs = jobs;
    SearchResult sr = enumerate_rows(cfg);
    if (sr.status != SearchStatus::ok)
      throw WorkBudgetExceeded("work budget exhausted while verifying order " +
                               std::to_string(n));
    entry.count_total = sr.count_total;
    entry.count_canonical = sr.count_canonical;
    entry.witnesses = std::move(sr.witnesses);
    entry.verdict = sr.count_total > 0 ? OrderVerdict::exists : OrderVerdict::none;
    report.orders.push_back(std::move(entry));
  }
  return report;
}

const char* verdict_name(OrderVerdict v) {
  switch (v) {
    case OrderVerdict::exists: return "EXISTS";
    case OrderVerdict::none: return "NONE";
    case OrderVerdict::skipped_by_sum: return "SKIPPED-BY-SUM";
  }
  return "?";
}

}  // namespace circhad
