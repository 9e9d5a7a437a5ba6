#ifndef CIRCHAD_IDENTITIES_HPP
#define CIRCHAD_IDENTITIES_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "circhad/block_structure.hpp"
#include "circhad/sign_row.hpp"

namespace circhad {

// Shift-4 accounting detail attached to the lemma-5 report.
struct Lemma5Breakdown {
  int measured_agreement4 = 0;  // agreement_count(row, 4)
  std::array<int, 6> alpha1_types{};
  std::array<int, 3> alpha2_types{};

  bool operator==(const Lemma5Breakdown&) const = default;
};

// Result of checking one block-census identity. The checker never throws on
// a falsified identity; holds == preconditions_met && lhs == rhs. Shape
// errors (wrong order, degenerate row) do throw.
struct LemmaReport {
  int lemma_id = 0;
  std::vector<int> required_paf;  // paf(1), paf(2), ... up to the lemma's shift
  bool preconditions_met = false;
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
  BlockCensus detail;
  std::optional<Lemma5Breakdown> breakdown;  // lemma 5 only

  bool operator==(const LemmaReport&) const = default;
};

// Lemma 1: paf(1) = 0  <=>  |B| = n/2.
LemmaReport check_lemma1(const SignRow& row);
// Lemma 2: paf(1) = paf(2) = 0  =>  |B_1| = n/4.
LemmaReport check_lemma2(const SignRow& row);
// Lemma 3: paf(1..3) = 0  =>  |B_2| + alpha1 = n/4.
LemmaReport check_lemma3(const SignRow& row);
// Lemma 4: paf(1..3) = 0  =>  alpha1 + alpha_{2,>=3} = alpha2 + alpha_{>=3}.
LemmaReport check_lemma4(const SignRow& row);
// Lemma 5: paf(1..4) = 0  =>  2|B_2| + 2|B_3| =
//   (a1^2 + 2 a1^3) + (2 a1^4 + 3 a1^5 + 4 a1^6) + (a2^2 + 2 a2^3).
// Requires n > 4; throws UnclassifiableSequence when a type is unresolvable.
LemmaReport check_lemma5(const SignRow& row);

LemmaReport check_lemma(int lemma_id, const SignRow& row);

// The canonical row configurations from the alpha1-exclusion proofs.
enum class CaseKind {
  alpha1_eq_1_pre,          // the (m+2)-block precedes the 1-alternating run
  alpha1_eq_1_post,         // the (m+2)-block follows it
  alpha1_eq_1_split,        // the (m+2)-block sits between k1 and k2 = m-1-k1 2-blocks
  alpha1_eq_m,              // m 1-blocks and m 3-blocks, alternating
  alpha1_eq_m_minus_1_a,    // the unique 2-block between two 1-alternating runs
  alpha1_eq_m_minus_1_b,    // the unique 2-block bordering the 4-block
};

struct ConstructionSpec {
  CaseKind kind;
  int m = 0;
  int k1 = 0;  // split case only; requires 1 <= k1 <= m-2

  static CaseKind parse_kind(std::string_view name);
  std::string kind_name() const;
};

// Realizes the case's block profile with alternating signs starting at +1;
// total length 4m. Throws on an inconsistent spec.
SignRow construct_case(const ConstructionSpec& spec);

// The shift-4 scalar product each case forces: 4m-12 (pre/post and m-1
// case b), 4m-16 (split and m-1 case a), 4m (alpha1 = m). Contract:
// paf(construct_case(spec), 4) == predicted_paf4(spec).
int predicted_paf4(const ConstructionSpec& spec);

enum class ExclusionReason { alpha1_eq_1, alpha1_eq_2, alpha1_eq_m_minus_1, alpha1_eq_m };

struct ExclusionVerdict {
  bool excluded = false;
  std::optional<ExclusionReason> reason;

  bool operator==(const ExclusionVerdict&) const = default;

  std::string str() const;
};

// Applies only what the alpha1 exclusion results prove: alpha1 in
// {1, 2, m-1, m} rules the row out for m > 10; for m <= 10 the only
// remaining case is alpha1 = 2 at m = 9 (m must be an odd square, m = 1
// is the order-4 matrix). Everything else is UNDECIDED.
ExclusionVerdict exclusion_filter(const BlockCensus& census, const OrderProfile& profile);

}  // namespace circhad

#endif
