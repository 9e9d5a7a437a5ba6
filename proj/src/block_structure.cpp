#include "circhad/block_structure.hpp"

#include <string>

namespace circhad {

const Block& BlockDecomposition::block(int i) const {
  const int b = block_count();
  int r = i % b;
  if (r < 0) r += b;
  return blocks[static_cast<std::size_t>(r)];
}

BlockDecomposition decompose(const SignRow& row) {
  const int n = row.size();
  BlockDecomposition d{row, {}, 0, false};

  std::vector<int> starts;  // positions where a new block begins
  for (int j = 0; j < n; ++j)
    if (row.entry(j - 1) != row[j]) starts.push_back(j);

  if (starts.empty()) {
    d.degenerate = true;
    d.blocks.push_back(Block{row[0], n, 0});
    return d;
  }

  d.offset = starts[0];
  const int b = static_cast<int>(starts.size());
  for (int i = 0; i < b; ++i) {
    const int st = starts[static_cast<std::size_t>(i)];
    const int nx = starts[static_cast<std::size_t>((i + 1) % b)];
    int len = (nx - st) % n;
    if (len <= 0) len += n;
    d.blocks.push_back(Block{row[st], len, st});
  }
  return d;
}

SizeClass size_class(int block_length) {
  if (block_length <= 0)
    throw std::invalid_argument("size_class: nonpositive block length");
  return block_length == 1 ? SizeClass::one
       : block_length == 2 ? SizeClass::two
                           : SizeClass::geq3;
}

static bool in_kind(int length, AlternatingKind kind) {
  switch (kind) {
    case AlternatingKind::one: return length == 1;
    case AlternatingKind::two: return length == 2;
    case AlternatingKind::geq3: return length >= 3;
  }
  return false;
}

static void require_proper(const BlockDecomposition& d) {
  if (d.degenerate)
    throw std::invalid_argument("degenerate decomposition (constant row)");
}

std::vector<AlternatingSequence> alternating_sequences(const BlockDecomposition& d,
                                                       AlternatingKind kind) {
  require_proper(d);
  const int b = d.block_count();
  std::vector<AlternatingSequence> out;

  std::vector<char> match(static_cast<std::size_t>(b));
  bool all = true, none = true;
  for (int i = 0; i < b; ++i) {
    match[static_cast<std::size_t>(i)] = in_kind(d.blocks[static_cast<std::size_t>(i)].length, kind);
    if (match[static_cast<std::size_t>(i)]) none = false;
    else all = false;
  }
  if (none) return out;
  if (all) {
    out.push_back(AlternatingSequence{kind, 0, b, std::nullopt, std::nullopt});
    return out;
  }

  // anchor at a non-matching block so wrapped runs come out whole
  int anchor = 0;
  while (match[static_cast<std::size_t>(anchor)]) ++anchor;
  for (int k = 0; k < b; ++k) {
    const int i = (anchor + k) % b;
    if (!match[static_cast<std::size_t>(i)] || match[static_cast<std::size_t>((i + b - 1) % b)])
      continue;
    int len = 0;
    while (match[static_cast<std::size_t>((i + len) % b)]) ++len;
    AlternatingSequence seq{kind, i, len, std::nullopt, std::nullopt};
    seq.left_context = size_class(d.block(i - 1).length);
    seq.right_context = size_class(d.block(i + len).length);
    out.push_back(seq);
  }
  return out;
}

int BlockCensus::count(int k) const {
  auto it = by_size.find(k);
  return it == by_size.end() ? 0 : it->second;
}

int BlockCensus::geq(int k) const {
  int acc = 0;
  for (auto it = by_size.lower_bound(k); it != by_size.end(); ++it) acc += it->second;
  return acc;
}

static int span_contribution(const BlockDecomposition& d, int first_block, int nblocks) {
  const int n = d.n();
  if (n <= 4)
    throw std::invalid_argument("shift4_contribution: requires n > 4");
  int acc = 0;
  for (int t = 0; t < nblocks; ++t) {
    const Block& bl = d.block(first_block + t);
    for (int q = 0; q < bl.length; ++q) {
      const int j = (bl.start + q) % n;
      if (d.row[j] == d.row[(j + 4) % n]) ++acc;
    }
  }
  return acc;
}

int shift4_contribution(const BlockDecomposition& d, const AlternatingSequence& seq) {
  require_proper(d);
  return span_contribution(d, seq.first_block, seq.length);
}

int shift4_contribution(const BlockDecomposition& d, const Block& b) {
  require_proper(d);
  if (b.length < 3)
    throw std::invalid_argument("shift4_contribution: block must be in B_{>=3}");
  if (d.n() <= 4)
    throw std::invalid_argument("shift4_contribution: requires n > 4");
  int acc = 0;
  for (int q = 0; q < b.length; ++q) {
    const int j = (b.start + q) % d.n();
    if (d.row[j] == d.row[(j + 4) % d.n()]) ++acc;
  }
  return acc;
}

int classify_two_alt(const AlternatingSequence& seq) {
  if (seq.kind != AlternatingKind::two)
    throw std::invalid_argument("classify_two_alt: not a 2-alternating sequence");
  if (!seq.contexts_resolved())
    throw UnclassifiableSequence("classify_two_alt: contexts unresolved (run covers every block)");
  const int big = (*seq.left_context == SizeClass::geq3 ? 1 : 0) +
                  (*seq.right_context == SizeClass::geq3 ? 1 : 0);
  return 3 - big;  // both >=3 -> 1, mixed -> 2, both 1-alternating -> 3
}

int classify_one_alt(const AlternatingSequence& seq, int contribution) {
  if (seq.kind != AlternatingKind::one)
    throw std::invalid_argument("classify_one_alt: not a 1-alternating sequence");
  const int l = seq.length;
  const int c = contribution;
  if (l == 1 && c == 3) return 1;
  if (l == 1 && c == 2) return 2;
  if (c == l) return 4;  // also covers l = 1, c = 1
  if (c == l - 1) return 5;
  if (c == l - 2 && c >= 0) return 6;
  throw UnclassifiableSequence("classify_one_alt: unclassifiable (length " + std::to_string(l) +
                               ", contribution " + std::to_string(c) + ")");
}

int accounting_contribution(const AlternatingSequence& seq) {
  if (seq.kind != AlternatingKind::one)
    throw std::invalid_argument("accounting_contribution: not a 1-alternating sequence");
  if (!seq.contexts_resolved())
    throw UnclassifiableSequence(
        "accounting_contribution: contexts unresolved (run covers every block)");
  const int big = (*seq.left_context == SizeClass::geq3 ? 1 : 0) +
                  (*seq.right_context == SizeClass::geq3 ? 1 : 0);
  return seq.length == 1 ? 1 + big : seq.length - 2 + big;
}

BlockCensus census(const BlockDecomposition& d) {
  require_proper(d);
  BlockCensus c;
  c.total = d.block_count();
  for (const Block& b : d.blocks) ++c.by_size[b.length];

  const auto ones = alternating_sequences(d, AlternatingKind::one);
  const auto twos = alternating_sequences(d, AlternatingKind::two);
  const auto bigs = alternating_sequences(d, AlternatingKind::geq3);
  c.alpha1 = static_cast<int>(ones.size());
  c.alpha2 = static_cast<int>(twos.size());
  c.alpha_geq3 = static_cast<int>(bigs.size());

  const int b = d.block_count();
  for (int i = 0; i < b; ++i) {
    const int s1 = d.blocks[static_cast<std::size_t>(i)].length;
    const int s2 = d.block(i + 1).length;
    if ((s1 == 2 && s2 >= 3) || (s1 >= 3 && s2 == 2)) ++c.alpha_2_geq3;
  }

  if (d.n() > 4) {
    bool ok1 = true;
    std::array<int, 6> t1{};
    for (const auto& s : ones) {
      if (!s.contexts_resolved()) { ok1 = false; break; }
      ++t1[static_cast<std::size_t>(classify_one_alt(s, accounting_contribution(s)) - 1)];
    }
    if (ok1) c.alpha1_types = t1;

    bool ok2 = true;
    std::array<int, 3> t2{};
    for (const auto& s : twos) {
      if (!s.contexts_resolved()) { ok2 = false; break; }
      ++t2[static_cast<std::size_t>(classify_two_alt(s) - 1)];
    }
    if (ok2) c.alpha2_types = t2;
  }
  return c;
}

}  // namespace circhad
