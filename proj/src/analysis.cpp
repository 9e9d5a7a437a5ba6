#include "circhad/analysis.hpp"

#include <stdexcept>

namespace circhad {

using nlohmann::json;

std::vector<LemmaEntry> checked_lemmas(const SignRow& row, const std::vector<int>& ids) {
  std::vector<LemmaEntry> out;
  for (int id : ids) {
    LemmaEntry e;
    e.lemma_id = id;
    try {
      e.report = check_lemma(id, row);
      e.applicable = true;
    } catch (const std::exception& ex) {
      e.applicable = false;
      e.reason = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

AnalysisDocument analyze(const SignRow& row) {
  AnalysisDocument doc{.row = row};
  const int n = row.size();
  doc.order = order_profile(n);
  doc.sum = row_sum(row);
  for (int s = 1; s < n; ++s) doc.paf_table.push_back(paf(row, s));
  doc.max_prefix = max_orthogonal_prefix(row);
  doc.hadamard = is_circulant_hadamard(row);

  const BlockDecomposition d = decompose(row);
  doc.degenerate = d.degenerate;
  doc.blocks = d.blocks;
  doc.block_offset = d.offset;
  if (!d.degenerate) doc.census = census(d);

  doc.lemmas = checked_lemmas(row, {1, 2, 3, 4, 5});

  if (doc.census && doc.order.m) {
    doc.exclusion.applicable = true;
    doc.exclusion.verdict = exclusion_filter(*doc.census, doc.order);
  } else {
    doc.exclusion.applicable = false;
    doc.exclusion.reason = doc.degenerate ? "degenerate decomposition (constant row)"
                                          : "order not divisible by 4";
  }
  return doc;
}

namespace {

json order_json(const OrderProfile& p) {
  json j;
  j["n"] = p.n;
  j["m"] = p.m ? json(*p.m) : json(nullptr);
  j["h"] = p.h ? json(*p.h) : json(nullptr);
  j["conjecture_relevant"] = p.conjecture_relevant;
  return j;
}

OrderProfile order_from_json(const json& j) {
  OrderProfile p;
  p.n = j.at("n").get<int>();
  if (!j.at("m").is_null()) p.m = j.at("m").get<int>();
  if (!j.at("h").is_null()) p.h = j.at("h").get<int>();
  p.conjecture_relevant = j.at("conjecture_relevant").get<bool>();
  return p;
}

json census_json(const BlockCensus& c) {
  json by_size = json::object();
  for (const auto& [size, count] : c.by_size) by_size[std::to_string(size)] = count;
  json j;
  j["total"] = c.total;
  j["by_size"] = by_size;
  j["alpha1"] = c.alpha1;
  j["alpha2"] = c.alpha2;
  j["alpha_geq3"] = c.alpha_geq3;
  j["alpha_2_geq3"] = c.alpha_2_geq3;
  j["alpha1_types"] = c.alpha1_types ? json(*c.alpha1_types) : json(nullptr);
  j["alpha2_types"] = c.alpha2_types ? json(*c.alpha2_types) : json(nullptr);
  return j;
}

BlockCensus census_from_json(const json& j) {
  BlockCensus c;
  c.total = j.at("total").get<int>();
  for (const auto& [key, value] : j.at("by_size").items())
    c.by_size[std::stoi(key)] = value.get<int>();
  c.alpha1 = j.at("alpha1").get<int>();
  c.alpha2 = j.at("alpha2").get<int>();
  c.alpha_geq3 = j.at("alpha_geq3").get<int>();
  c.alpha_2_geq3 = j.at("alpha_2_geq3").get<int>();
  if (!j.at("alpha1_types").is_null())
    c.alpha1_types = j.at("alpha1_types").get<std::array<int, 6>>();
  if (!j.at("alpha2_types").is_null())
    c.alpha2_types = j.at("alpha2_types").get<std::array<int, 3>>();
  return c;
}

json lemma_entry_json(const LemmaEntry& e) {
  json j;
  j["lemma"] = e.lemma_id;
  j["applicable"] = e.applicable;
  if (!e.applicable) {
    j["reason"] = e.reason;
    return j;
  }
  const LemmaReport& r = *e.report;
  j["required_paf"] = r.required_paf;
  j["preconditions_met"] = r.preconditions_met;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["holds"] = r.holds;
  j["census"] = census_json(r.detail);
  if (r.breakdown) {
    json b;
    b["measured_agreement4"] = r.breakdown->measured_agreement4;
    b["alpha1_types"] = r.breakdown->alpha1_types;
    b["alpha2_types"] = r.breakdown->alpha2_types;
    j["breakdown"] = b;
  }
  return j;
}

LemmaEntry lemma_entry_from_json(const json& j) {
  LemmaEntry e;
  e.lemma_id = j.at("lemma").get<int>();
  e.applicable = j.at("applicable").get<bool>();
  if (!e.applicable) {
    e.reason = j.at("reason").get<std::string>();
    return e;
  }
  LemmaReport r;
  r.lemma_id = e.lemma_id;
  r.required_paf = j.at("required_paf").get<std::vector<int>>();
  r.preconditions_met = j.at("preconditions_met").get<bool>();
  r.lhs = j.at("lhs").get<long long>();
  r.rhs = j.at("rhs").get<long long>();
  r.holds = j.at("holds").get<bool>();
  r.detail = census_from_json(j.at("census"));
  if (j.contains("breakdown")) {
    Lemma5Breakdown b;
    b.measured_agreement4 = j.at("breakdown").at("measured_agreement4").get<int>();
    b.alpha1_types = j.at("breakdown").at("alpha1_types").get<std::array<int, 6>>();
    b.alpha2_types = j.at("breakdown").at("alpha2_types").get<std::array<int, 3>>();
    r.breakdown = b;
  }
  e.report = std::move(r);
  return e;
}

json exclusion_json(const ExclusionEntry& e) {
  json j;
  j["applicable"] = e.applicable;
  if (!e.applicable) {
    j["reason"] = e.reason;
    return j;
  }
  j["verdict"] = e.verdict->str();
  return j;
}

ExclusionEntry exclusion_from_json(const json& j) {
  ExclusionEntry e;
  e.applicable = j.at("applicable").get<bool>();
  if (!e.applicable) {
    e.reason = j.at("reason").get<std::string>();
    return e;
  }
  const std::string v = j.at("verdict").get<std::string>();
  ExclusionVerdict verdict;
  if (v != "UNDECIDED") {
    verdict.excluded = true;
    if (v == "EXCLUDED(alpha1=1)") verdict.reason = ExclusionReason::alpha1_eq_1;
    else if (v == "EXCLUDED(alpha1=2)") verdict.reason = ExclusionReason::alpha1_eq_2;
    else if (v == "EXCLUDED(alpha1=m-1)") verdict.reason = ExclusionReason::alpha1_eq_m_minus_1;
    else if (v == "EXCLUDED(alpha1=m)") verdict.reason = ExclusionReason::alpha1_eq_m;
    else throw std::invalid_argument("unknown exclusion verdict '" + v + "'");
  }
  e.verdict = verdict;
  return e;
}

json row_json(const SignRow& row) {
  json j;
  j["plus_minus"] = row.str(Alphabet::plus_minus);
  j["zero_one"] = row.str(Alphabet::zero_one);
  j["n"] = row.size();
  return j;
}

}  // namespace

json to_json(const AnalysisDocument& doc) {
  json j;
  j["schema"] = "circhad.analyze/1";
  j["row"] = row_json(doc.row);
  j["order"] = order_json(doc.order);
  j["row_sum"] = doc.sum;
  j["paf"] = doc.paf_table;
  j["max_orthogonal_prefix"] = doc.max_prefix;
  j["is_circulant_hadamard"] = doc.hadamard;
  j["degenerate"] = doc.degenerate;
  json blocks = json::array();
  for (const Block& b : doc.blocks)
    blocks.push_back(json{{"sign", b.sign}, {"length", b.length}, {"start", b.start}});
  j["blocks"] = json{{"offset", doc.block_offset}, {"items", blocks}};
  j["census"] = doc.census ? census_json(*doc.census) : json(nullptr);
  json lemmas = json::array();
  for (const LemmaEntry& e : doc.lemmas) lemmas.push_back(lemma_entry_json(e));
  j["lemmas"] = lemmas;
  j["exclusion"] = exclusion_json(doc.exclusion);
  return j;
}

AnalysisDocument document_from_json(const json& j) {
  AnalysisDocument doc{.row = SignRow::parse(j.at("row").at("plus_minus").get<std::string>())};
  doc.order = order_from_json(j.at("order"));
  doc.sum = j.at("row_sum").get<int>();
  doc.paf_table = j.at("paf").get<std::vector<int>>();
  doc.max_prefix = j.at("max_orthogonal_prefix").get<int>();
  doc.hadamard = j.at("is_circulant_hadamard").get<bool>();
  doc.degenerate = j.at("degenerate").get<bool>();
  doc.block_offset = j.at("blocks").at("offset").get<int>();
  for (const auto& bj : j.at("blocks").at("items"))
    doc.blocks.push_back(Block{bj.at("sign").get<int>(), bj.at("length").get<int>(),
                               bj.at("start").get<int>()});
  if (!j.at("census").is_null()) doc.census = census_from_json(j.at("census"));
  for (const auto& ej : j.at("lemmas")) doc.lemmas.push_back(lemma_entry_from_json(ej));
  doc.exclusion = exclusion_from_json(j.at("exclusion"));
  return doc;
}

json to_json(const SearchResult& r) {
  json j;
  j["schema"] = "circhad.search/1";
  j["n"] = r.n;
  j["shift_budget"] = r.shift_budget;
  json sym = json::array();
  if (r.symmetry.rotation) sym.push_back("rotation");
  if (r.symmetry.negation) sym.push_back("negation");
  if (r.symmetry.reversal) sym.push_back("reversal");
  j["symmetry"] = sym;
  j["status"] = r.status == SearchStatus::ok ? "OK" : "FAILED-WORK-BUDGET";
  j["count_total"] = r.count_total;
  j["count_canonical"] = r.count_canonical;
  j["max_k_overall"] = r.max_k_overall;
  j["nodes_visited"] = r.nodes_visited;
  json dist = json::object();
  for (const auto& [a1, count] : r.alpha1_distribution) dist[std::to_string(a1)] = count;
  j["alpha1_distribution"] = dist;
  json wit = json::array();
  for (const SignRow& w : r.witnesses) wit.push_back(w.str());
  j["witnesses"] = wit;
  j["witnesses_truncated"] = r.truncated;
  return j;
}

json lemma_entries_json(const SignRow& row, const std::vector<LemmaEntry>& entries) {
  json j;
  j["schema"] = "circhad.lemmas/1";
  j["row"] = row_json(row);
  json reports = json::array();
  for (const LemmaEntry& e : entries) reports.push_back(lemma_entry_json(e));
  j["reports"] = reports;
  return j;
}

json to_json(const ConstructionSpec& spec, const SignRow& row, int predicted, int measured) {
  json j;
  j["schema"] = "circhad.construct/1";
  j["case"] = spec.kind_name();
  j["m"] = spec.m;
  j["k1"] = spec.kind == CaseKind::alpha1_eq_1_split ? json(spec.k1) : json(nullptr);
  j["row"] = row.str();
  j["n"] = row.size();
  j["predicted_paf4"] = predicted;
  j["measured_paf4"] = measured;
  j["match"] = predicted == measured;
  return j;
}

json to_json(const RangeReport& report) {
  json j;
  j["schema"] = "circhad.verify-ryser/1";
  j["n_max"] = report.n_max;
  json orders = json::array();
  for (const OrderReport& o : report.orders) {
    json oj;
    oj["n"] = o.n;
    oj["verdict"] = verdict_name(o.verdict);
    if (o.verdict == OrderVerdict::skipped_by_sum) {
      oj["count_total"] = json(nullptr);
      oj["count_canonical"] = json(nullptr);
      oj["witnesses"] = json(nullptr);
    } else {
      oj["count_total"] = o.count_total;
      oj["count_canonical"] = o.count_canonical;
      json wit = json::array();
      for (const SignRow& w : o.witnesses) wit.push_back(w.str());
      oj["witnesses"] = wit;
    }
    orders.push_back(oj);
  }
  j["orders"] = orders;
  return j;
}

json to_json(const MaxKResult& r) {
  json j;
  j["schema"] = "circhad.max-k/1";
  j["n"] = r.n;
  j["max_k"] = r.k;
  j["count_total"] = r.count_total;
  j["count_canonical"] = r.count_canonical;
  json wit = json::array();
  for (const SignRow& w : r.witnesses) wit.push_back(w.str());
  j["witnesses"] = wit;
  j["witnesses_truncated"] = r.truncated;
  return j;
}

}  // namespace circhad
