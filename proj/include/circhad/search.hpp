#ifndef CIRCHAD_SEARCH_HPP
#define CIRCHAD_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circhad/sign_row.hpp"

namespace circhad {

// Thrown by operations that cannot report a partial result (probes, range
// verification) when the work budget runs out. enumerate_rows() instead
// reports SearchStatus::failed_work_budget with the partial counts.
struct WorkBudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Largest order the bitmask engine accepts. Full searches at n = 32 are
// routine on a workstation; beyond that the work budget is the real limit.
inline constexpr int max_search_order = 40;

// Work budget unit: one position assignment in the prefix-extension tree.
inline constexpr std::uint64_t default_work_budget = 1'000'000'000'000ULL;

struct SearchFilters {
  // Require row_sum^2 == n. Implied by full orthogonality, so it is only
  // legal when shift_budget == n-1; partial-prefix searches must not use it.
  bool row_sum_square = false;
  std::optional<int> alpha1;  // keep only rows with this 1-alternating count
};

struct SearchConfig {
  int n = 0;
  int shift_budget = 1;  // K: require paf(s) == 0 for s = 1..K; K = n-1 is full Hadamard
  SymmetryGroup symmetry = SymmetryGroup::all();
  SearchFilters filters;
  int jobs = 1;
  std::optional<std::uint64_t> limit;  // cap on reported witnesses, applied after canonical sort
  std::uint64_t work_budget = default_work_budget;
};

enum class SearchStatus { ok, failed_work_budget };

struct SearchResult {
  int n = 0;
  int shift_budget = 0;
  SymmetryGroup symmetry;
  SearchStatus status = SearchStatus::ok;
  std::vector<SignRow> witnesses;  // canonical forms, lexicographically sorted
  bool truncated = false;          // witnesses cut to `limit` (counts stay exact)
  std::uint64_t count_total = 0;   // satisfying rows before symmetry reduction
  std::uint64_t count_canonical = 0;
  int max_k_overall = 0;  // largest orthogonal prefix among the witnesses; 0 when none
  std::map<int, std::uint64_t> alpha1_distribution;  // over canonical witnesses
  std::uint64_t nodes_visited = 0;  // complete candidate rows reached by the pruned search
  double duration_seconds = 0.0;    // diagnostic only, never part of serialized payloads
};

// Exact, exhaustive enumeration of all 2^n rows with paf(1..K) = 0,
// reported up to the configured symmetry. Depth-first prefix extension; a
// partial assignment is cut as soon as some partial autocorrelation can no
// longer reach zero (magnitude or parity versus the undecided terms).
// Deterministic: same inputs give byte-identical results for any job count.
SearchResult enumerate_rows(const SearchConfig& config);

// Row as bitmask: bit j set = entry j is +1.
std::uint64_t mask_from_row(const SignRow& row);
SignRow row_from_mask(std::uint64_t mask, int n);

struct StreamStats {
  std::uint64_t rows = 0;      // rows delivered
  std::uint64_t work = 0;      // assignments performed
  bool complete = true;        // false when cancelled by the sink or the budget
  bool budget_exhausted = false;
};

// Stream every row with paf(1..K) = 0 (no symmetry reduction) to the sink
// as a bitmask. The sink is serialized but the delivery order is
// unspecified when jobs > 1. Sink returning false cancels the search.
StreamStats stream_rows(int n, int K, int jobs,
                        const std::function<bool(std::uint64_t)>& sink,
                        std::uint64_t work_budget = default_work_budget);

// Canonical representatives (full symmetry group) with paf(1..K) = 0,
// streamed in unspecified order.
StreamStats corpus_with_prefix(int n, int K,
                               const std::function<bool(const SignRow&)>& sink,
                               int jobs = 1,
                               std::uint64_t work_budget = default_work_budget);

struct MaxKResult {
  int n = 0;
  int k = 0;  // maximum orthogonal prefix over all rows of order n
  std::vector<SignRow> witnesses;  // canonical rows attaining k, sorted
  bool truncated = false;
  std::uint64_t count_total = 0;
  std::uint64_t count_canonical = 0;
};

MaxKResult find_max_k(int n, int jobs = 1,
                      std::optional<std::uint64_t> limit = std::nullopt);

enum class OrderVerdict { exists, none, skipped_by_sum };

struct OrderReport {
  int n = 0;
  OrderVerdict verdict = OrderVerdict::none;
  std::uint64_t count_total = 0;
  std::uint64_t count_canonical = 0;
  std::vector<SignRow> witnesses;
};

struct RangeReport {
  int n_max = 0;
  std::vector<OrderReport> orders;
};

// Desk verification of the nonexistence conjecture: for every order
// 4 <= n <= n_max, either no integer row sum satisfies sum^2 = n
// (SKIPPED-BY-SUM) or the order is searched exhaustively. n = 4 reports
// the known matrix.
RangeReport verify_conjecture_range(int n_max, int jobs = 1);

const char* verdict_name(OrderVerdict v);

}  // namespace circhad

#endif
