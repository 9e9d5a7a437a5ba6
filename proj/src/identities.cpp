#include "circhad/identities.hpp"

#include <stdexcept>

namespace circhad {

namespace {

// Shared shape checks + paf preconditions for lemmas 1..4.
LemmaReport start_report(int lemma_id, const SignRow& row, int max_shift) {
  const int n = row.size();
  if (n % 4 != 0)
    throw std::invalid_argument("lemma " + std::to_string(lemma_id) + ": order " +
                                std::to_string(n) + " not divisible by 4");
  if (max_shift >= n)
    throw std::invalid_argument("lemma " + std::to_string(lemma_id) + ": order " +
                                std::to_string(n) + " too small for shift " +
                                std::to_string(max_shift));
  LemmaReport r;
  r.lemma_id = lemma_id;
  r.preconditions_met = true;
  for (int s = 1; s <= max_shift; ++s) {
    r.required_paf.push_back(paf(row, s));
    if (r.required_paf.back() != 0) r.preconditions_met = false;
  }
  return r;
}

}  // namespace

LemmaReport check_lemma1(const SignRow& row) {
  LemmaReport r = start_report(1, row, 1);
  r.detail = census(decompose(row));
  r.lhs = r.detail.total;
  r.rhs = row.size() / 2;
  r.holds = r.preconditions_met && r.lhs == r.rhs;
  return r;
}

LemmaReport check_lemma2(const SignRow& row) {
  LemmaReport r = start_report(2, row, 2);
  r.detail = census(decompose(row));
  r.lhs = r.detail.count(1);
  r.rhs = row.size() / 4;
  r.holds = r.preconditions_met && r.lhs == r.rhs;
  return r;
}

LemmaReport check_lemma3(const SignRow& row) {
  LemmaReport r = start_report(3, row, 3);
  r.detail = census(decompose(row));
  r.lhs = r.detail.count(2) + r.detail.alpha1;
  r.rhs = row.size() / 4;
  r.holds = r.preconditions_met && r.lhs == r.rhs;
  return r;
}

LemmaReport check_lemma4(const SignRow& row) {
  LemmaReport r = start_report(4, row, 3);
  r.detail = census(decompose(row));
  r.lhs = r.detail.alpha1 + r.detail.alpha_2_geq3;
  r.rhs = r.detail.alpha2 + r.detail.alpha_geq3;
  r.holds = r.preconditions_met && r.lhs == r.rhs;
  return r;
}

LemmaReport check_lemma5(const SignRow& row) {
  if (row.size() <= 4)
    throw std::invalid_argument("lemma 5: requires n > 4 (shift 4 wraps otherwise)");
  LemmaReport r = start_report(5, row, 4);
  r.detail = census(decompose(row));
  if (!r.detail.alpha1_types || !r.detail.alpha2_types)
    throw UnclassifiableSequence("lemma 5: unclassifiable sequence in row " +
                                 row.str());
  const auto& t1 = *r.detail.alpha1_types;
  const auto& t2 = *r.detail.alpha2_types;
  r.lhs = 2LL * r.detail.count(2) + 2LL * r.detail.count(3);
  r.rhs = (t1[1] + 2LL * t1[2]) + (2LL * t1[3] + 3LL * t1[4] + 4LL * t1[5]) +
          (t2[1] + 2LL * t2[2]);
  r.holds = r.preconditions_met && r.lhs == r.rhs;
  Lemma5Breakdown b;
  b.measured_agreement4 = agreement_count(row, 4);
  b.alpha1_types = t1;
  b.alpha2_types = t2;
  r.breakdown = b;
  return r;
}

LemmaReport check_lemma(int lemma_id, const SignRow& row) {
  switch (lemma_id) {
    case 1: return check_lemma1(row);
    case 2: return check_lemma2(row);
    case 3: return check_lemma3(row);
    case 4: return check_lemma4(row);
    case 5: return check_lemma5(row);
    default:
      throw std::invalid_argument("lemma id must be 1..5");
  }
}

CaseKind ConstructionSpec::parse_kind(std::string_view name) {
  if (name == "alpha1-eq-1-pre") return CaseKind::alpha1_eq_1_pre;
  if (name == "alpha1-eq-1-post") return CaseKind::alpha1_eq_1_post;
  if (name == "alpha1-eq-1-split") return CaseKind::alpha1_eq_1_split;
  if (name == "alpha1-eq-m") return CaseKind::alpha1_eq_m;
  if (name == "alpha1-eq-m-minus-1-a") return CaseKind::alpha1_eq_m_minus_1_a;
  if (name == "alpha1-eq-m-minus-1-b") return CaseKind::alpha1_eq_m_minus_1_b;
  throw std::invalid_argument("unknown construction case '" + std::string(name) + "'");
}

std::string ConstructionSpec::kind_name() const {
  switch (kind) {
    case CaseKind::alpha1_eq_1_pre: return "alpha1-eq-1-pre";
    case CaseKind::alpha1_eq_1_post: return "alpha1-eq-1-post";
    case CaseKind::alpha1_eq_1_split: return "alpha1-eq-1-split";
    case CaseKind::alpha1_eq_m: return "alpha1-eq-m";
    case CaseKind::alpha1_eq_m_minus_1_a: return "alpha1-eq-m-minus-1-a";
    case CaseKind::alpha1_eq_m_minus_1_b: return "alpha1-eq-m-minus-1-b";
  }
  return "?";
}

namespace {

void validate_spec(const ConstructionSpec& spec) {
  const int m = spec.m;
  switch (spec.kind) {
    case CaseKind::alpha1_eq_1_pre:
    case CaseKind::alpha1_eq_1_post:
    case CaseKind::alpha1_eq_m:
      if (m < 2) throw std::invalid_argument("construction requires m >= 2");
      break;
    case CaseKind::alpha1_eq_1_split:
      if (m < 3) throw std::invalid_argument("split case requires m >= 3");
      if (spec.k1 < 1 || spec.k1 > m - 2)
        throw std::invalid_argument("split case requires 1 <= k1 <= m-2 (k1 = " +
                                    std::to_string(spec.k1) + ", m = " + std::to_string(m) + ")");
      break;
    case CaseKind::alpha1_eq_m_minus_1_a:
    case CaseKind::alpha1_eq_m_minus_1_b:
      if (m < 3) throw std::invalid_argument("m-1 cases require m >= 3");
      break;
  }
}

std::vector<int> case_block_sizes(const ConstructionSpec& spec) {
  const int m = spec.m;
  std::vector<int> sizes;
  auto rep = [&sizes](int size, int times) {
    for (int i = 0; i < times; ++i) sizes.push_back(size);
  };
  switch (spec.kind) {
    case CaseKind::alpha1_eq_1_pre:
      sizes.push_back(m + 2); rep(1, m); rep(2, m - 1);
      break;
    case CaseKind::alpha1_eq_1_post:
      sizes.push_back(m + 2); rep(2, m - 1); rep(1, m);
      break;
    case CaseKind::alpha1_eq_1_split:
      rep(1, m); rep(2, spec.k1); sizes.push_back(m + 2); rep(2, m - 1 - spec.k1);
      break;
    case CaseKind::alpha1_eq_m:
      for (int i = 0; i < m; ++i) { sizes.push_back(1); sizes.push_back(3); }
      break;
    case CaseKind::alpha1_eq_m_minus_1_a:
      // 1-pair, then the adjacent >=3-pair (4-block + one 3-block), then
      // single 1-blocks separated by 3-blocks, then the lone 2-block.
      rep(1, 2); sizes.push_back(4); sizes.push_back(3);
      for (int i = 0; i < m - 3; ++i) { sizes.push_back(1); sizes.push_back(3); }
      sizes.push_back(1); sizes.push_back(2);
      break;
    case CaseKind::alpha1_eq_m_minus_1_b:
      rep(1, 2); sizes.push_back(4); sizes.push_back(2);
      for (int i = 0; i < m - 2; ++i) { sizes.push_back(1); sizes.push_back(3); }
      break;
  }
  return sizes;
}

}  // namespace

SignRow construct_case(const ConstructionSpec& spec) {
  validate_spec(spec);
  std::vector<std::int8_t> e;
  e.reserve(static_cast<std::size_t>(4 * spec.m));
  std::int8_t sign = 1;
  for (int size : case_block_sizes(spec)) {
    for (int i = 0; i < size; ++i) e.push_back(sign);
    sign = static_cast<std::int8_t>(-sign);
  }
  return SignRow(std::move(e));
}

int predicted_paf4(const ConstructionSpec& spec) {
  validate_spec(spec);
  const int m = spec.m;
  switch (spec.kind) {
    case CaseKind::alpha1_eq_1_pre:
    case CaseKind::alpha1_eq_1_post: return 4 * m - 12;
    case CaseKind::alpha1_eq_1_split: return 4 * m - 16;
    case CaseKind::alpha1_eq_m: return 4 * m;
    case CaseKind::alpha1_eq_m_minus_1_a: return 4 * m - 16;  // disagreement 8
    case CaseKind::alpha1_eq_m_minus_1_b: return 4 * m - 12;  // disagreement 6
  }
  throw std::logic_error("unreachable");
}

std::string ExclusionVerdict::str() const {
  if (!excluded) return "UNDECIDED";
  switch (*reason) {
    case ExclusionReason::alpha1_eq_1: return "EXCLUDED(alpha1=1)";
    case ExclusionReason::alpha1_eq_2: return "EXCLUDED(alpha1=2)";
    case ExclusionReason::alpha1_eq_m_minus_1: return "EXCLUDED(alpha1=m-1)";
    case ExclusionReason::alpha1_eq_m: return "EXCLUDED(alpha1=m)";
  }
  return "?";
}

ExclusionVerdict exclusion_filter(const BlockCensus& census, const OrderProfile& profile) {
  if (!profile.m)
    throw std::invalid_argument("exclusion_filter: order profile has no m (n not divisible by 4)");
  const int m = *profile.m;
  const int a1 = census.alpha1;
  if (m > 10) {
    if (a1 == 1) return {true, ExclusionReason::alpha1_eq_1};
    if (a1 == 2) return {true, ExclusionReason::alpha1_eq_2};
    if (a1 == m - 1) return {true, ExclusionReason::alpha1_eq_m_minus_1};
    if (a1 == m) return {true, ExclusionReason::alpha1_eq_m};
  } else if (a1 == 2 && m == 9) {
    return {true, ExclusionReason::alpha1_eq_2};
  }
  return {false, std::nullopt};
}

}  // namespace circhad
