#ifndef CIRCHAD_SIGN_ROW_HPP
#define CIRCHAD_SIGN_ROW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace circhad {

enum class Alphabet { plus_minus, zero_one };

// A circular sequence of +1/-1 entries. Index arithmetic is mod n, so
// entry(j) is defined for every integer j. Immutable after construction.
class SignRow {
public:
  explicit SignRow(std::vector<std::int8_t> entries);

  // '+'/'-' or '1'/'0' with '1' -> +1, '0' -> -1. Reports 1-based position
  // of the first illegal character.
  static SignRow parse(std::string_view text, Alphabet a = Alphabet::plus_minus);

  int size() const { return static_cast<int>(entries_.size()); }
  int entry(long long j) const;            // circular index
  int operator[](int j) const { return entries_[static_cast<std::size_t>(j)]; }

  std::string str(Alphabet a = Alphabet::plus_minus) const;

  bool operator==(const SignRow&) const = default;

  const std::vector<std::int8_t>& entries() const { return entries_; }

private:
  std::vector<std::int8_t> entries_;
};

// Lexicographic order on entries with -1 < +1 (not ASCII order of the text).
bool lex_less(const SignRow& a, const SignRow& b);

// Periodic autocorrelation: sum over j of entry(j)*entry(j+s). Requires
// 0 <= s < n. paf(row, 0) == n, and paf(row, s) == n (mod 2).
int paf(const SignRow& row, int s);

// Number of positions where the row agrees with its s-shift; equals
// (n + paf(row, s)) / 2. Requires 1 <= s < n.
int agreement_count(const SignRow& row, int s);
int disagreement_count(const SignRow& row, int s);

int row_sum(const SignRow& row);

SignRow rotate(const SignRow& row, int k);   // entry j moves to position j+k
SignRow negate(const SignRow& row);
SignRow reverse(const SignRow& row);

struct SymmetryGroup {
  bool rotation = false;
  bool negation = false;
  bool reversal = false;

  bool empty() const { return !rotation && !negation && !reversal; }
  static SymmetryGroup all() { return {true, true, true}; }

  // "rotation,negation,reversal", "all", "none"
  static SymmetryGroup parse(std::string_view text);
  std::string str() const;

  bool operator==(const SymmetryGroup&) const = default;
};

// Lexicographically smallest image of the row under the group generated by
// the selected operations. Idempotent and constant on orbits. Requires a
// nonempty group.
SignRow canonical_form(const SignRow& row, SymmetryGroup group);

// Largest k <= n such that paf(row, d) == 0 for all 1 <= d <= k-1; the
// first k rows of the circulant with this defining row are then mutually
// orthogonal. Returns n when every shift vanishes.
int max_orthogonal_prefix(const SignRow& row);

bool is_circulant_hadamard(const SignRow& row);

// Order-level facts: m = n/4 when 4 | n; h with m = h^2 when m is an odd
// perfect square. A circulant Hadamard matrix of order n > 1 requires
// n = 4m = 4h^2 with h odd, so "conjecture relevant" means n = 1 or h set.
struct OrderProfile {
  int n = 0;
  std::optional<int> m;
  std::optional<int> h;
  bool conjecture_relevant = false;

  bool operator==(const OrderProfile&) const = default;
};

OrderProfile order_profile(int n);

}  // namespace circhad

#endif
