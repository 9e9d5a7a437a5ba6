#ifndef CIRCHAD_ANALYSIS_HPP
#define CIRCHAD_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "circhad/block_structure.hpp"
#include "circhad/identities.hpp"
#include "circhad/search.hpp"
#include "circhad/sign_row.hpp"

namespace circhad {

// One lemma checker outcome inside an analysis: either a report, or the
// reason the checker does not apply to this row (wrong order, degenerate,
// unclassifiable).
struct LemmaEntry {
  int lemma_id = 0;
  bool applicable = false;
  std::string reason;  // only when !applicable
  std::optional<LemmaReport> report;

  bool operator==(const LemmaEntry&) const = default;
};

struct ExclusionEntry {
  bool applicable = false;
  std::string reason;  // only when !applicable
  std::optional<ExclusionVerdict> verdict;

  bool operator==(const ExclusionEntry&) const = default;
};

// Everything the analyzer knows about one row. Serialization round-trips:
// document_from_json(to_json(doc)) == doc.
struct AnalysisDocument {
  SignRow row;
  OrderProfile order;
  int sum = 0;
  std::vector<int> paf_table;  // paf(s) for s = 1..n-1
  int max_prefix = 0;
  bool hadamard = false;
  bool degenerate = false;
  std::vector<Block> blocks;
  int block_offset = 0;
  std::optional<BlockCensus> census;  // absent for degenerate rows
  std::vector<LemmaEntry> lemmas;     // lemmas 1..5 in order
  ExclusionEntry exclusion;

  bool operator==(const AnalysisDocument&) const = default;
};

AnalysisDocument analyze(const SignRow& row);

nlohmann::json to_json(const AnalysisDocument& doc);
AnalysisDocument document_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SearchResult& result);
nlohmann::json lemma_entries_json(const SignRow& row, const std::vector<LemmaEntry>& entries);
nlohmann::json to_json(const ConstructionSpec& spec, const SignRow& row,
                       int predicted, int measured);
nlohmann::json to_json(const RangeReport& report);
nlohmann::json to_json(const MaxKResult& result);

// Lemma checkers wrapped so shape errors become not-applicable entries.
std::vector<LemmaEntry> checked_lemmas(const SignRow& row, const std::vector<int>& ids);

}  // namespace circhad

#endif
