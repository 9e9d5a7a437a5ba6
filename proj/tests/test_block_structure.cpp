#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circhad/block_structure.hpp"

using namespace circhad;

namespace {

SignRow random_row(std::mt19937_64& rng, int n) {
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (auto& v : e) v = (rng() & 1) ? 1 : -1;
  return SignRow(std::move(e));
}

SignRow nth_row(std::uint64_t x, int n) {
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) e[static_cast<std::size_t>(j)] = ((x >> j) & 1) ? 1 : -1;
  return SignRow(std::move(e));
}

std::vector<int> sizes_of(const BlockDecomposition& d) {
  std::vector<int> out;
  for (const Block& b : d.blocks) out.push_back(b.length);
  return out;
}

// reference count of equal columns at shift s, straight from the definition
int direct_agreement(const SignRow& r, int s) {
  int acc = 0;
  for (int j = 0; j < r.size(); ++j)
    if (r[j] == r.entry(j + s)) ++acc;
  return acc;
}

}  // namespace

TEST_CASE("decompose basic shapes") {
  const BlockDecomposition d = decompose(SignRow::parse("-+++"));
  CHECK(!d.degenerate);
  CHECK(d.offset == 0);
  REQUIRE(d.block_count() == 2);
  CHECK(d.blocks[0] == Block{-1, 1, 0});
  CHECK(d.blocks[1] == Block{1, 3, 1});

  const BlockDecomposition c = decompose(SignRow::parse("++++"));
  CHECK(c.degenerate);
  REQUIRE(c.block_count() == 1);
  CHECK(c.blocks[0] == Block{1, 4, 0});

  CHECK(sizes_of(decompose(SignRow::parse("++--++--"))) == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("decompose starts after a sign change even mid-row") {
  // the wrap block ++|++ merges across the seam
  const BlockDecomposition d = decompose(SignRow::parse("++-++"));
  CHECK(d.offset == 2);
  REQUIRE(d.block_count() == 2);
  CHECK(d.blocks[0] == Block{-1, 1, 2});
  CHECK(d.blocks[1] == Block{1, 4, 3});
  CHECK(d.blocks.front().sign != d.blocks.back().sign);
}

TEST_CASE("decompose invariants on random rows") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    const SignRow row = random_row(rng, n);
    const BlockDecomposition d = decompose(row);
    int total = 0;
    for (int i = 0; i < d.block_count(); ++i) {
      const Block& b = d.blocks[static_cast<std::size_t>(i)];
      total += b.length;
      for (int q = 0; q < b.length; ++q) CHECK(row.entry(b.start + q) == b.sign);
      if (!d.degenerate) {
        CHECK(d.block(i + 1).sign == -b.sign);
        CHECK(row.entry(b.start - 1) == -b.sign);
      }
    }
    CHECK(total == n);
    if (!d.degenerate) {
      CHECK(d.block_count() % 2 == 0);
      CHECK(d.blocks.front().sign != d.blocks.back().sign);
      CHECK(d.blocks.front().start == d.offset);
    }
  }
}

TEST_CASE("census examples") {
  const BlockCensus a = census(decompose(SignRow::parse("-+++")));
  CHECK(a.total == 2);
  CHECK(a.count(1) == 1);
  CHECK(a.count(3) == 1);
  CHECK(a.alpha1 == 1);
  CHECK(a.alpha2 == 0);
  CHECK(a.alpha_geq3 == 1);
  CHECK(a.alpha_2_geq3 == 0);
  CHECK(a.geq(1) == 2);
  CHECK(a.geq(3) == 1);
  CHECK(a.geq(4) == 0);

  const BlockCensus b = census(decompose(SignRow::parse("+---+---")));
  CHECK(b.total == 4);
  CHECK(b.count(1) == 2);
  CHECK(b.count(3) == 2);
  CHECK(b.alpha1 == 2);
  CHECK(b.alpha_geq3 == 2);
  CHECK(b.alpha_2_geq3 == 0);

  // circular adjacency joins the first and last 2-blocks into one run
  const BlockCensus c = census(decompose(SignRow::parse("++-+--")));
  CHECK(c.total == 4);
  CHECK(c.count(1) == 2);
  CHECK(c.count(2) == 2);
  CHECK(c.alpha1 == 1);
  CHECK(c.alpha2 == 1);
  CHECK(c.alpha_2_geq3 == 0);

  CHECK_THROWS_AS(census(decompose(SignRow::parse("++++"))), std::invalid_argument);
}

TEST_CASE("alternating sequences") {
  {
    const auto d = decompose(SignRow::parse("+-+---"));
    const auto runs = alternating_sequences(d, AlternatingKind::one);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].length == 3);
    CHECK(runs[0].contexts_resolved());
    CHECK(*runs[0].left_context == SizeClass::geq3);
    CHECK(*runs[0].right_context == SizeClass::geq3);
  }
  {
    // every block is a 2-block: one wrapped run, contexts unresolved
    const auto d = decompose(SignRow::parse("++--++--"));
    const auto runs = alternating_sequences(d, AlternatingKind::two);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].length == 4);
    CHECK(!runs[0].contexts_resolved());
    CHECK(alternating_sequences(d, AlternatingKind::one).empty());
  }
  {
    const auto d = decompose(SignRow::parse("-+++"));
    const auto runs = alternating_sequences(d, AlternatingKind::geq3);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].length == 1);
  }
  CHECK_THROWS_AS(alternating_sequences(decompose(SignRow::parse("----")), AlternatingKind::one),
                  std::invalid_argument);
}

TEST_CASE("alternating runs partition their class") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 30);
    const SignRow row = random_row(rng, n);
    const auto d = decompose(row);
    if (d.degenerate) continue;
    const BlockCensus c = census(d);
    int members1 = 0, members2 = 0, members3 = 0;
    for (const auto& s : alternating_sequences(d, AlternatingKind::one)) members1 += s.length;
    for (const auto& s : alternating_sequences(d, AlternatingKind::two)) members2 += s.length;
    for (const auto& s : alternating_sequences(d, AlternatingKind::geq3)) members3 += s.length;
    CHECK(members1 == c.count(1));
    CHECK(members2 == c.count(2));
    CHECK(members3 == c.geq(3));
    // maximality: context blocks are outside the class
    for (const auto& s : alternating_sequences(d, AlternatingKind::two)) {
      if (!s.contexts_resolved()) continue;
      CHECK(*s.left_context != SizeClass::two);
      CHECK(*s.right_context != SizeClass::two);
    }
  }
}

TEST_CASE("classify_two_alt") {
  {
    // 2-run bounded by >=3-blocks on both sides: +++ -- +++ ---...
    const auto d = decompose(SignRow::parse("+++--+++---"));
    const auto runs = alternating_sequences(d, AlternatingKind::two);
    REQUIRE(runs.size() == 1);
    CHECK(classify_two_alt(runs[0]) == 1);
  }
  {
    // each 2-run here has a 1-run on one side and a >=3-block on the other
    const auto d = decompose(SignRow::parse("+-++--++++--"));
    const auto runs = alternating_sequences(d, AlternatingKind::two);
    REQUIRE(runs.size() == 2);
    for (const auto& r : runs) CHECK(classify_two_alt(r) == 2);
  }
  {
    // between two 1-runs
    const auto d = decompose(SignRow::parse("+-++-+--"));
    const auto runs = alternating_sequences(d, AlternatingKind::two);
    bool saw_type3 = false;
    for (const auto& r : runs)
      if (classify_two_alt(r) == 3) saw_type3 = true;
    CHECK(saw_type3);
  }
  {
    const auto d = decompose(SignRow::parse("++--++--"));
    const auto runs = alternating_sequences(d, AlternatingKind::two);
    CHECK_THROWS_AS(classify_two_alt(runs[0]), UnclassifiableSequence);
  }
}

TEST_CASE("shift4 contribution spec rows") {
  const auto d = decompose(SignRow::parse("+---+---"));
  const auto ones = alternating_sequences(d, AlternatingKind::one);
  REQUIRE(ones.size() == 2);
  CHECK(shift4_contribution(d, ones[0]) == 1);
  CHECK(shift4_contribution(d, ones[1]) == 1);
  int big_total = 0;
  for (const Block& b : d.blocks)
    if (b.length >= 3) {
      CHECK(shift4_contribution(d, b) == 3);
      big_total += shift4_contribution(d, b);
    }
  CHECK(big_total + 2 == agreement_count(d.row, 4));

  CHECK_THROWS_AS(shift4_contribution(decompose(SignRow::parse("-+++")),
                                      alternating_sequences(decompose(SignRow::parse("-+++")),
                                                            AlternatingKind::one)[0]),
                  std::invalid_argument);
}

TEST_CASE("shift4 contributions partition agreement(4)") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 36);
    const SignRow row = random_row(rng, n);
    const auto d = decompose(row);
    if (d.degenerate) continue;
    int total = 0;
    for (const auto& s : alternating_sequences(d, AlternatingKind::one))
      total += shift4_contribution(d, s);
    for (const auto& s : alternating_sequences(d, AlternatingKind::two))
      total += shift4_contribution(d, s);
    for (const Block& b : d.blocks)
      if (b.length >= 3) total += shift4_contribution(d, b);
    CHECK(total == agreement_count(row, 4));
  }
}

TEST_CASE("classify_one_alt table") {
  auto seq = [](int len) {
    return AlternatingSequence{AlternatingKind::one, 0, len, SizeClass::geq3, SizeClass::geq3};
  };
  CHECK(classify_one_alt(seq(1), 3) == 1);
  CHECK(classify_one_alt(seq(1), 2) == 2);
  CHECK(classify_one_alt(seq(1), 1) == 4);  // resolved toward type 4
  CHECK(classify_one_alt(seq(1), 0) == 5);
  CHECK(classify_one_alt(seq(5), 5) == 4);
  CHECK(classify_one_alt(seq(5), 4) == 5);
  CHECK(classify_one_alt(seq(5), 3) == 6);
  CHECK(classify_one_alt(seq(2), 0) == 6);
  CHECK_THROWS_AS(classify_one_alt(seq(3), 0), UnclassifiableSequence);
  CHECK_THROWS_AS(classify_one_alt(seq(1), 4), UnclassifiableSequence);
  CHECK_THROWS_AS(classify_one_alt(seq(2), 3), UnclassifiableSequence);
  CHECK_THROWS_AS(classify_one_alt(seq(5), 1), UnclassifiableSequence);
  AlternatingSequence two{AlternatingKind::two, 0, 1, SizeClass::geq3, SizeClass::geq3};
  CHECK_THROWS_AS(classify_one_alt(two, 1), std::invalid_argument);
}

TEST_CASE("accounting contribution follows the contexts") {
  {
    // lone 1-blocks between 3-blocks
    const auto d = decompose(SignRow::parse("+++-+++-"));
    for (const auto& s : alternating_sequences(d, AlternatingKind::one)) {
      CHECK(accounting_contribution(s) == 3);
      CHECK(classify_one_alt(s, accounting_contribution(s)) == 1);
    }
  }
  {
    // lone 1-blocks between 2-blocks
    const auto d = decompose(SignRow::parse("++-++-"));
    for (const auto& s : alternating_sequences(d, AlternatingKind::one)) {
      CHECK(accounting_contribution(s) == 1);
      CHECK(classify_one_alt(s, accounting_contribution(s)) == 4);
    }
  }
  {
    // run of two between a 2-block and a 5-block
    const auto d = decompose(SignRow::parse("++-+-----"));
    const auto runs = alternating_sequences(d, AlternatingKind::one);
    REQUIRE(runs.size() == 1);
    CHECK(runs[0].length == 2);
    CHECK(accounting_contribution(runs[0]) == 1);  // length - 2 + one big side
    CHECK(classify_one_alt(runs[0], 1) == 5);
  }
}

TEST_CASE("census type counts add up") {
  std::mt19937_64 rng(17);
  int with_types = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 28);
    const SignRow row = random_row(rng, n);
    const auto d = decompose(row);
    if (d.degenerate) continue;
    const BlockCensus c = census(d);
    int sum_sizes = 0;
    for (const auto& [size, count] : c.by_size) sum_sizes += size * count;
    CHECK(sum_sizes == n);
    CHECK(c.geq(1) == c.total);
    if (c.alpha1_types) {
      ++with_types;
      int t = 0;
      for (int v : *c.alpha1_types) t += v;
      CHECK(t == c.alpha1);
    }
    if (c.alpha2_types) {
      int t = 0;
      for (int v : *c.alpha2_types) t += v;
      CHECK(t == c.alpha2);
    }
  }
  CHECK(with_types > 100);  // the classifiable case dominates
}

TEST_CASE("universal accounting identities, exhaustive small orders") {
  for (int n = 3; n <= 12; ++n) {
    for (std::uint64_t x = 0; x < (1ULL << n); ++x) {
      const SignRow row = nth_row(x, n);
      const auto d = decompose(row);
      if (d.degenerate) continue;
      const BlockCensus c = census(d);

      CHECK(direct_agreement(row, 1) == n - c.total);

      int sum2 = 0, sum3 = 0;
      for (const auto& [size, count] : c.by_size) {
        if (size >= 2) sum2 += (size - 2) * count;
        if (size >= 3) sum3 += (size - 3) * count;
      }
      CHECK(direct_agreement(row, 2) == c.count(1) + sum2);

      if (n >= 4 && c.count(1) < c.total) {
        // the fully alternating row is the one case where the 1-run wraps the
        // whole circle and the 2*alpha1 boundary accounting does not apply
        CHECK(direct_agreement(row, 3) == sum3 + c.count(2) + 2 * c.alpha1);
      }

      if (n >= 4) {
        const auto ones = alternating_sequences(d, AlternatingKind::one);
        const auto twos = alternating_sequences(d, AlternatingKind::two);
        const auto bigs = alternating_sequences(d, AlternatingKind::geq3);
        bool resolved = true;
        for (const auto& s : ones) resolved = resolved && s.contexts_resolved();
        for (const auto& s : twos) resolved = resolved && s.contexts_resolved();
        for (const auto& s : bigs) resolved = resolved && s.contexts_resolved();
        if (resolved) {
          int lhs = c.alpha_2_geq3;
          for (const auto& s : ones) lhs += s.length - 1;
          for (const auto& s : twos) lhs += s.length - 1;
          for (const auto& s : bigs) lhs += 3 * s.length - 1;
          CHECK(n - direct_agreement(row, 3) == lhs);
        }
      }

      // alpha1 = alpha_{>=2} when both classes occur
      if (c.count(1) > 0 && c.count(1) < c.total) {
        int geq2_runs = 0;
        const int b = c.total;
        for (int i = 0; i < b; ++i)
          if (d.block(i).length >= 2 && d.block(i - 1).length == 1) ++geq2_runs;
        CHECK(c.alpha1 == geq2_runs);
      }
    }
  }
}

TEST_CASE("census invariant under rotation, negation and reversal") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 28);
    const SignRow row = random_row(rng, n);
    if (decompose(row).degenerate) continue;
    const BlockCensus base = census(decompose(row));
    const int k = static_cast<int>(rng() % n);
    const BlockCensus rot = census(decompose(rotate(row, k)));
    const BlockCensus neg = census(decompose(negate(row)));
    const BlockCensus rev = census(decompose(reverse(row)));
    for (const BlockCensus* c : {&rot, &neg, &rev}) {
      CHECK(c->by_size == base.by_size);
      CHECK(c->total == base.total);
      CHECK(c->alpha1 == base.alpha1);
      CHECK(c->alpha2 == base.alpha2);
      CHECK(c->alpha_geq3 == base.alpha_geq3);
      CHECK(c->alpha_2_geq3 == base.alpha_2_geq3);
      CHECK(c->alpha1_types == base.alpha1_types);
      CHECK(c->alpha2_types == base.alpha2_types);
    }
  }
}
