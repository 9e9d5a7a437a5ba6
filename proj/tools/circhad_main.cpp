// circhad: block-structure analysis, census identity checking, and
// symmetry-reduced exhaustive search for circulant +-1 rows.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "circhad/analysis.hpp"
#include "circhad/block_structure.hpp"
#include "circhad/identities.hpp"
#include "circhad/search.hpp"
#include "circhad/sign_row.hpp"

namespace {

using circhad::Alphabet;
using circhad::SignRow;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_falsified = 1;
constexpr int exit_invalid = 2;
constexpr int exit_resource = 3;

struct RowInput {
  std::string row_text;
  std::string file;
  std::string alphabet = "plus-minus";

  Alphabet alph() const {
    if (alphabet == "plus-minus") return Alphabet::plus_minus;
    if (alphabet == "zero-one") return Alphabet::zero_one;
    throw std::invalid_argument("alphabet must be plus-minus or zero-one");
  }

  std::vector<SignRow> rows() const {
    std::vector<SignRow> out;
    if (!row_text.empty() && !file.empty())
      throw std::invalid_argument("give either an inline row or --file, not both");
    if (!row_text.empty()) {
      out.push_back(SignRow::parse(row_text, alph()));
      return out;
    }
    if (file.empty()) throw std::invalid_argument("no row given (inline or --file)");
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open '" + file + "'");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        out.push_back(SignRow::parse(line, alph()));
      } catch (const std::exception& ex) {
        throw std::invalid_argument(file + ":" + std::to_string(lineno) + ": " + ex.what());
      }
    }
    if (out.empty()) throw std::invalid_argument("'" + file + "' contains no rows");
    return out;
  }
};

void print_lemma_line(std::ostream& os, const circhad::LemmaEntry& e) {
  os << "lemma " << e.lemma_id << ": ";
  if (!e.applicable) {
    os << "not applicable (" << e.reason << ")\n";
    return;
  }
  const auto& r = *e.report;
  if (r.holds)
    os << "holds";
  else if (!r.preconditions_met)
    os << "preconditions not met";
  else
    os << "FALSIFIED";
  os << "  lhs=" << r.lhs << " rhs=" << r.rhs << "  paf(1..)=[";
  for (std::size_t i = 0; i < r.required_paf.size(); ++i)
    os << (i ? "," : "") << r.required_paf[i];
  os << "]\n";
}

void print_analysis(std::ostream& os, const circhad::AnalysisDocument& doc) {
  os << "row                : " << doc.row.str() << "  (" << doc.row.str(Alphabet::zero_one)
     << ")\n";
  os << "order              : n=" << doc.order.n;
  if (doc.order.m) os << "  m=" << *doc.order.m;
  if (doc.order.h) os << "  h=" << *doc.order.h;
  os << (doc.order.conjecture_relevant ? "  [conjecture-relevant]" : "") << "\n";
  os << "row sum            : " << doc.sum << "\n";
  os << "paf(1..n-1)        :";
  for (int v : doc.paf_table) os << " " << v;
  os << "\n";
  os << "max orth. prefix   : " << doc.max_prefix << "\n";
  os << "circulant Hadamard : " << (doc.hadamard ? "yes" : "no") << "\n";
  if (doc.degenerate) {
    os << "blocks             : degenerate (constant row; census skipped)\n";
    return;
  }
  os << "blocks (offset " << doc.block_offset << ")  :";
  for (const auto& b : doc.blocks)
    os << " " << (b.sign > 0 ? '+' : '-') << b.length << "@" << b.start;
  os << "\n";
  const auto& c = *doc.census;
  os << "census             : |B|=" << c.total << "  sizes:";
  for (const auto& [size, count] : c.by_size) os << " " << size << ":" << count;
  os << "  alpha1=" << c.alpha1 << " alpha2=" << c.alpha2 << " alpha≥3=" << c.alpha_geq3
     << " alpha2,≥3=" << c.alpha_2_geq3 << "\n";
  for (const auto& e : doc.lemmas) print_lemma_line(os, e);
  os << "exclusion          : "
     << (doc.exclusion.applicable ? doc.exclusion.verdict->str()
                                  : "not applicable (" + doc.exclusion.reason + ")")
     << "\n";
}

int run_analyze(const RowInput& input, bool as_json) {
  const auto rows = input.rows();
  const bool batch = !input.file.empty();  // files always yield a JSON array
  json arr = json::array();
  for (const SignRow& row : rows) {
    const auto doc = circhad::analyze(row);
    if (as_json)
      arr.push_back(circhad::to_json(doc));
    else {
      print_analysis(std::cout, doc);
      if (rows.size() > 1) std::cout << "\n";
    }
  }
  if (as_json) std::cout << (batch ? arr : arr[0]).dump(2) << "\n";
  return exit_ok;
}

int run_lemmas(const RowInput& input, std::vector<int> ids, bool as_json) {
  if (ids.empty()) ids = {1, 2, 3, 4, 5};
  for (int id : ids)
    if (id < 1 || id > 5) throw std::invalid_argument("--lemma takes values 1..5");
  const auto rows = input.rows();
  const bool batch = !input.file.empty();
  bool falsified = false;
  json arr = json::array();
  for (const SignRow& row : rows) {
    const auto entries = circhad::checked_lemmas(row, ids);
    for (const auto& e : entries)
      if (e.applicable && e.report->preconditions_met && !e.report->holds) falsified = true;
    if (as_json)
      arr.push_back(circhad::lemma_entries_json(row, entries));
    else {
      std::cout << row.str() << "\n";
      for (const auto& e : entries) print_lemma_line(std::cout, e);
      if (rows.size() > 1) std::cout << "\n";
    }
  }
  if (as_json) std::cout << (batch ? arr : arr[0]).dump(2) << "\n";
  return falsified ? exit_falsified : exit_ok;
}

int run_construct(const std::string& case_name, int m, std::optional<int> k1, bool as_json) {
  circhad::ConstructionSpec spec;
  spec.kind = circhad::ConstructionSpec::parse_kind(case_name);
  spec.m = m;
  if (spec.kind == circhad::CaseKind::alpha1_eq_1_split) {
    if (!k1) throw std::invalid_argument("the split case requires --k1");
    spec.k1 = *k1;
  } else if (k1) {
    throw std::invalid_argument("--k1 applies to the split case only");
  }
  const SignRow row = circhad::construct_case(spec);
  const int predicted = circhad::predicted_paf4(spec);
  const int measured = circhad::paf(row, 4);
  if (as_json) {
    std::cout << circhad::to_json(spec, row, predicted, measured).dump(2) << "\n";
  } else {
    std::cout << row.str() << "\n";
    std::cout << "predicted paf(4) = " << predicted << "\n";
    std::cout << "measured  paf(4) = " << measured << "\n";
    std::cout << (predicted == measured ? "MATCH" : "MISMATCH") << "\n";
  }
  return predicted == measured ? exit_ok : exit_falsified;
}

int run_search(const circhad::SearchConfig& cfg, bool as_json) {
  const auto result = circhad::enumerate_rows(cfg);
  std::cerr << "search n=" << cfg.n << " K=" << cfg.shift_budget << " took "
            << result.duration_seconds << " s\n";
  if (as_json) {
    std::cout << circhad::to_json(result).dump(2) << "\n";
  } else {
    for (const SignRow& w : result.witnesses) std::cout << w.str() << "\n";
    std::cout << "status          : "
              << (result.status == circhad::SearchStatus::ok ? "OK" : "FAILED-WORK-BUDGET")
              << "\n";
    std::cout << "count_total     : " << result.count_total << "\n";
    std::cout << "count_canonical : " << result.count_canonical
              << (result.truncated ? "  (witness list truncated)" : "") << "\n";
    std::cout << "max_k_overall   : " << result.max_k_overall << "\n";
    std::cout << "nodes_visited   : " << result.nodes_visited << "\n";
    std::cout << "alpha1 counts   :";
    for (const auto& [a1, count] : result.alpha1_distribution)
      std::cout << " " << a1 << ":" << count;
    std::cout << "\n";
  }
  return result.status == circhad::SearchStatus::ok ? exit_ok : exit_resource;
}

int run_verify_ryser(int n_max, int jobs, bool as_json) {
  const auto report = circhad::verify_conjecture_range(n_max, jobs);
  if (as_json) {
    std::cout << circhad::to_json(report).dump(2) << "\n";
    return exit_ok;
  }
  for (const auto& o : report.orders) {
    std::cout << "n=" << o.n << ": " << circhad::verdict_name(o.verdict);
    if (o.verdict != circhad::OrderVerdict::skipped_by_sum) {
      std::cout << "  (count_total=" << o.count_total
                << ", count_canonical=" << o.count_canonical;
      if (!o.witnesses.empty()) {
        std::cout << ", witnesses:";
        for (const auto& w : o.witnesses) std::cout << " " << w.str();
      }
      std::cout << ")";
    }
    std::cout << "\n";
  }
  return exit_ok;
}

int run_max_k(int n, int jobs, std::optional<std::uint64_t> limit, bool as_json) {
  const auto result = circhad::find_max_k(n, jobs, limit);
  if (as_json) {
    std::cout << circhad::to_json(result).dump(2) << "\n";
    return exit_ok;
  }
  std::cout << "max k for n=" << n << ": " << result.k << "\n";
  std::cout << "count_total=" << result.count_total
            << " count_canonical=" << result.count_canonical
            << (result.truncated ? " (witness list truncated)" : "") << "\n";
  for (const auto& w : result.witnesses) std::cout << w.str() << "\n";
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block structure, census identities and exhaustive search for circulant +-1 rows"};
  app.require_subcommand(1);

  // analyze
  RowInput an_input;
  bool an_json = false;
  auto* analyze = app.add_subcommand("analyze", "full analysis document for a row");
  analyze->add_option("row", an_input.row_text, "row text, e.g. -+++ or 0111");
  analyze->add_option("--file", an_input.file, "file with one row per line");
  analyze->add_option("--alphabet", an_input.alphabet, "plus-minus (default) or zero-one");
  analyze->add_flag("--json", an_json, "machine-readable output");

  // lemmas
  RowInput lm_input;
  bool lm_json = false;
  std::vector<int> lm_ids;
  auto* lemmas = app.add_subcommand("lemmas", "check the census identities on a row");
  lemmas->add_option("row", lm_input.row_text, "row text");
  lemmas->add_option("--file", lm_input.file, "file with one row per line");
  lemmas->add_option("--alphabet", lm_input.alphabet, "plus-minus (default) or zero-one");
  lemmas->add_option("--lemma", lm_ids, "restrict to these identities (1..5)")
      ->type_size(1)
      ->delimiter(',');
  lemmas->add_flag("--json", lm_json, "machine-readable output");

  // construct
  std::string ct_case;
  int ct_m = 0;
  std::optional<int> ct_k1;
  bool ct_json = false;
  auto* construct = app.add_subcommand("construct", "build a proof-case row, check paf(4)");
  construct->add_option("--case", ct_case,
                        "alpha1-eq-1-pre|alpha1-eq-1-post|alpha1-eq-1-split|alpha1-eq-m|"
                        "alpha1-eq-m-minus-1-a|alpha1-eq-m-minus-1-b")
      ->required();
  construct->add_option("--m", ct_m, "order parameter, n = 4m")->required();
  construct->add_option("--k1", ct_k1, "split position (split case only)");
  construct->add_flag("--json", ct_json, "machine-readable output");

  // search
  circhad::SearchConfig sc;
  std::string sc_symmetry = "all";
  std::optional<std::uint64_t> sc_limit;
  bool sc_json = false, sc_sum_filter = false;
  std::optional<int> sc_alpha1;
  auto* search = app.add_subcommand("search", "enumerate rows with paf(1..K) = 0");
  search->add_option("--n", sc.n, "order (2.." + std::to_string(circhad::max_search_order) + ")")
      ->required();
  search->add_option("--k", sc.shift_budget, "shift budget K (1..n-1)")->required();
  search->add_option("--symmetry", sc_symmetry,
                     "rotation,negation,reversal | all (default) | none");
  search->add_option("--jobs", sc.jobs, "worker threads (default 1)");
  search->add_option("--limit", sc_limit, "cap on reported witnesses");
  search->add_flag("--sum-filter", sc_sum_filter, "require row_sum^2 = n (K = n-1 only)");
  search->add_option("--alpha1", sc_alpha1, "keep rows with this alpha1 only");
  search->add_option("--work-budget", sc.work_budget, "resource cap in assignments");
  search->add_flag("--json", sc_json, "machine-readable output");

  // verify-ryser
  int vr_nmax = 0, vr_jobs = 1;
  bool vr_json = false;
  auto* ryser = app.add_subcommand("verify-ryser", "desk-verify nonexistence up to n-max");
  ryser->add_option("--n-max", vr_nmax, "largest order to check")->required();
  ryser->add_option("--jobs", vr_jobs, "worker threads (default 1)");
  ryser->add_flag("--json", vr_json, "machine-readable output");

  // max-k
  int mk_n = 0, mk_jobs = 1;
  std::optional<std::uint64_t> mk_limit;
  bool mk_json = false;
  auto* maxk = app.add_subcommand("max-k", "maximum orthogonal prefix over all rows");
  maxk->add_option("--n", mk_n, "order")->required();
  maxk->add_option("--jobs", mk_jobs, "worker threads (default 1)");
  maxk->add_option("--limit", mk_limit, "cap on reported witnesses");
  maxk->add_flag("--json", mk_json, "machine-readable output");

  // Rows like "-+++" collide with option syntax, so a bare "--" hands the
  // rest of the line over verbatim: exactly one row literal may follow it.
  std::vector<std::string> args;
  std::string tail_row;
  bool has_tail = false;
  for (int i = 1; i < argc; ++i) {
    const std::string tok = argv[i];
    if (tok == "--") {
      if (i + 2 < argc) {
        std::cerr << "error: at most one row literal may follow --\n";
        return exit_invalid;
      }
      if (i + 1 < argc) {
        tail_row = argv[i + 1];
        has_tail = true;
      }
      break;
    }
    args.push_back(tok);
  }
  std::reverse(args.begin(), args.end());

  try {
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_invalid;
  }

  if (has_tail) {
    RowInput* target = *analyze ? &an_input : *lemmas ? &lm_input : nullptr;
    if (!target) {
      std::cerr << "error: a row literal after -- only applies to analyze and lemmas\n";
      return exit_invalid;
    }
    if (!target->row_text.empty()) {
      std::cerr << "error: row given both inline and after --\n";
      return exit_invalid;
    }
    target->row_text = tail_row;
  }

  try {
    if (*analyze) return run_analyze(an_input, an_json);
    if (*lemmas) return run_lemmas(lm_input, lm_ids, lm_json);
    if (*construct) return run_construct(ct_case, ct_m, ct_k1, ct_json);
    if (*search) {
      sc.symmetry = circhad::SymmetryGroup::parse(sc_symmetry);
      sc.filters.row_sum_square = sc_sum_filter;
      sc.filters.alpha1 = sc_alpha1;
      sc.limit = sc_limit;
      return run_search(sc, sc_json);
    }
    if (*ryser) return run_verify_ryser(vr_nmax, vr_jobs, vr_json);
    if (*maxk) return run_max_k(mk_n, mk_jobs, mk_limit, mk_json);
  } catch (const circhad::WorkBudgetExceeded& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_resource;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return exit_invalid;
  }
  return exit_invalid;
}
