#include "circhad/sign_row.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace circhad {

SignRow::SignRow(std::vector<std::int8_t> entries) : entries_(std::move(entries)) {
  if (entries_.empty())
    throw std::invalid_argument("SignRow: empty entry list");
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i] != 1 && entries_[i] != -1)
      throw std::invalid_argument("SignRow: entry at position " + std::to_string(i + 1) +
                                  " is not +1 or -1");
}

SignRow SignRow::parse(std::string_view text, Alphabet a) {
  if (text.empty())
    throw std::invalid_argument("parse_row: empty input");
  std::vector<std::int8_t> e;
  e.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    int v;
    if (a == Alphabet::plus_minus)
      v = (c == '+') ? 1 : (c == '-') ? -1 : 0;
    else
      v = (c == '1') ? 1 : (c == '0') ? -1 : 0;
    if (v == 0)
      throw std::invalid_argument("parse_row: illegal character '" + std::string(1, c) +
                                  "' at position " + std::to_string(i + 1));
    e.push_back(static_cast<std::int8_t>(v));
  }
  return SignRow(std::move(e));
}

int SignRow::entry(long long j) const {
  const long long n = size();
  long long r = j % n;
  if (r < 0) r += n;
  return entries_[static_cast<std::size_t>(r)];
}

std::string SignRow::str(Alphabet a) const {
  std::string s;
  s.reserve(entries_.size());
  for (auto v : entries_)
    s.push_back(a == Alphabet::plus_minus ? (v > 0 ? '+' : '-') : (v > 0 ? '1' : '0'));
  return s;
}

bool lex_less(const SignRow& a, const SignRow& b) {
  // -1 < +1, then shorter-is-smaller on ties
  const int n = std::min(a.size(), b.size());
  for (int j = 0; j < n; ++j)
    if (a[j] != b[j]) return a[j] < b[j];
  return a.size() < b.size();
}

static void check_shift(const SignRow& row, int s, int lo) {
  if (s < lo || s >= row.size())
    throw std::invalid_argument("shift " + std::to_string(s) + " out of range [" +
                                std::to_string(lo) + ", " + std::to_string(row.size()) + ")");
}

int paf(const SignRow& row, int s) {
  check_shift(row, s, 0);
  const int n = row.size();
  int acc = 0;
  for (int j = 0; j < n; ++j)
    acc += row[j] * row[(j + s) % n];
  return acc;
}

int agreement_count(const SignRow& row, int s) {
  check_shift(row, s, 1);
  return (row.size() + paf(row, s)) / 2;
}

int disagreement_count(const SignRow& row, int s) {
  return row.size() - agreement_count(row, s);
}

int row_sum(const SignRow& row) {
  int acc = 0;
  for (int j = 0; j < row.size(); ++j) acc += row[j];
  return acc;
}

SignRow rotate(const SignRow& row, int k) {
  const int n = row.size();
  if (k < 0 || k >= n)
    throw std::invalid_argument("rotate: k out of range");
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j)
    e[static_cast<std::size_t>((j + k) % n)] = static_cast<std::int8_t>(row[j]);
  return SignRow(std::move(e));
}

SignRow negate(const SignRow& row) {
  std::vector<std::int8_t> e(row.entries());
  for (auto& v : e) v = static_cast<std::int8_t>(-v);
  return SignRow(std::move(e));
}

SignRow reverse(const SignRow& row) {
  std::vector<std::int8_t> e(row.entries());
  std::reverse(e.begin(), e.end());
  return SignRow(std::move(e));
}

SymmetryGroup SymmetryGroup::parse(std::string_view text) {
  if (text == "all") return all();
  if (text == "none") return {};
  SymmetryGroup g;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item == "rotation") g.rotation = true;
    else if (item == "negation") g.negation = true;
    else if (item == "reversal") g.reversal = true;
    else
      throw std::invalid_argument("unknown symmetry '" + item +
                                  "' (expected rotation, negation, reversal, all, none)");
  }
  return g;
}

std::string SymmetryGroup::str() const {
  if (empty()) return "none";
  std::string s;
  auto add = [&s](const char* name) {
    if (!s.empty()) s += ',';
    s += name;
  };
  if (rotation) add("rotation");
  if (negation) add("negation");
  if (reversal) add("reversal");
  return s;
}

SignRow canonical_form(const SignRow& row, SymmetryGroup group) {
  if (group.empty())
    throw std::invalid_argument("canonical_form: empty symmetry group");
  // Every element of the generated group factors as rot^r . rev^b . neg^a.
  SignRow best = row;
  bool first = true;
  const int n = row.size();
  const int rmax = group.rotation ? n : 1;
  for (int r = 0; r < rmax; ++r) {
    SignRow base = (r == 0) ? row : rotate(row, r);
    for (int b = 0; b <= (group.reversal ? 1 : 0); ++b) {
      SignRow mid = (b == 0) ? base : reverse(base);
      for (int a = 0; a <= (group.negation ? 1 : 0); ++a) {
        SignRow cand = (a == 0) ? mid : negate(mid);
        if (first || lex_less(cand, best)) {
          best = std::move(cand);
          first = false;
        }
      }
    }
  }
  return best;
}

int max_orthogonal_prefix(const SignRow& row) {
  const int n = row.size();
  int k = 1;
  while (k < n && paf(row, k) == 0) ++k;
  return k;
}

bool is_circulant_hadamard(const SignRow& row) {
  const int n = row.size();
  for (int s = 1; s < n; ++s)
    if (paf(row, s) != 0) return false;
  return true;
}

OrderProfile order_profile(int n) {
  if (n < 1)
    throw std::invalid_argument("order_profile: n must be positive");
  OrderProfile p;
  p.n = n;
  if (n % 4 == 0) {
    p.m = n / 4;
    const int m = *p.m;
    if (m % 2 == 1) {
      const int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(m))));
      if (r * r == m) p.h = r;
    }
  }
  p.conjecture_relevant = (n == 1) || p.h.has_value();
  return p;
}

}  // namespace circhad
