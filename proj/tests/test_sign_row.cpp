#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "circhad/sign_row.hpp"

using namespace circhad;

namespace {

SignRow random_row(std::mt19937_64& rng, int n) {
  std::vector<std::int8_t> e(static_cast<std::size_t>(n));
  for (auto& v : e) v = (rng() & 1) ? 1 : -1;
  return SignRow(std::move(e));
}

}  // namespace

TEST_CASE("parse and format") {
  const SignRow r = SignRow::parse("-+++");
  CHECK(r.size() == 4);
  CHECK(r[0] == -1);
  CHECK(r[1] == 1);
  CHECK(r.str() == "-+++");
  CHECK(r.str(Alphabet::zero_one) == "0111");

  const SignRow z = SignRow::parse("1111", Alphabet::zero_one);
  CHECK(z == SignRow::parse("++++"));
  CHECK(SignRow::parse("0110", Alphabet::zero_one) == SignRow::parse("-++-"));

  CHECK_THROWS_WITH_AS(SignRow::parse("+-x"),
                       doctest::Contains("position 3"), std::invalid_argument);
  CHECK_THROWS_AS(SignRow::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(SignRow::parse("+1"), std::invalid_argument);
  CHECK_THROWS_AS(SignRow::parse("01", Alphabet::plus_minus), std::invalid_argument);
}

TEST_CASE("circular indexing") {
  const SignRow r = SignRow::parse("-+++");
  CHECK(r.entry(0) == -1);
  CHECK(r.entry(4) == -1);
  CHECK(r.entry(-1) == 1);
  CHECK(r.entry(7) == 1);
}

TEST_CASE("paf") {
  CHECK(paf(SignRow::parse("-+++"), 1) == 0);
  CHECK(paf(SignRow::parse("++++"), 1) == 4);
  CHECK(paf(SignRow::parse("+---+---"), 4) == 8);
  CHECK(paf(SignRow::parse("-+++"), 0) == 4);
  CHECK_THROWS_AS(paf(SignRow::parse("-+++"), 4), std::invalid_argument);
  CHECK_THROWS_AS(paf(SignRow::parse("-+++"), -1), std::invalid_argument);
}

TEST_CASE("agreement and disagreement") {
  CHECK(agreement_count(SignRow::parse("-+++"), 1) == 2);
  CHECK(agreement_count(SignRow::parse("++++"), 2) == 4);
  CHECK(agreement_count(SignRow::parse("+---+---"), 3) == 4);
  CHECK(disagreement_count(SignRow::parse("-+++"), 1) == 2);
  CHECK(disagreement_count(SignRow::parse("++++"), 1) == 0);
  CHECK(disagreement_count(SignRow::parse("+---+---"), 4) == 0);
  CHECK_THROWS_AS(agreement_count(SignRow::parse("-+++"), 0), std::invalid_argument);
}

TEST_CASE("row sum") {
  CHECK(row_sum(SignRow::parse("-+++")) == 2);
  CHECK(row_sum(SignRow::parse("++++")) == 4);
  CHECK(row_sum(SignRow::parse("+---+---")) == -4);
}

TEST_CASE("symmetry operations") {
  CHECK(rotate(SignRow::parse("-+++"), 1) == SignRow::parse("+-++"));
  CHECK(rotate(SignRow::parse("-+++"), 0) == SignRow::parse("-+++"));
  CHECK(negate(SignRow::parse("-+++")) == SignRow::parse("+---"));
  CHECK(reverse(SignRow::parse("+-++")) == SignRow::parse("++-+"));
  CHECK_THROWS_AS(rotate(SignRow::parse("-+++"), 4), std::invalid_argument);
  CHECK_THROWS_AS(rotate(SignRow::parse("-+++"), -1), std::invalid_argument);
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(SignRow::parse("+-++"), {.rotation = true}) == SignRow::parse("-+++"));
  CHECK(canonical_form(SignRow::parse("-+++"), {.rotation = true, .negation = true}) ==
        SignRow::parse("---+"));
  CHECK(canonical_form(SignRow::parse("++++"), SymmetryGroup::all()) == SignRow::parse("----"));
  CHECK_THROWS_AS(canonical_form(SignRow::parse("++++"), SymmetryGroup{}),
                  std::invalid_argument);
}

TEST_CASE("canonical form is idempotent and orbit-constant") {
  std::mt19937_64 rng(20250810);
  const SymmetryGroup groups[] = {
      {.rotation = true},
      {.negation = true},
      {.reversal = true},
      {.rotation = true, .negation = true},
      {.rotation = true, .reversal = true},
      {.negation = true, .reversal = true},
      SymmetryGroup::all(),
  };
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const SignRow row = random_row(rng, n);
    for (const auto& g : groups) {
      const SignRow c = canonical_form(row, g);
      CHECK(canonical_form(c, g) == c);
      CHECK(!lex_less(row, c));  // canonical is minimal on the orbit
      // a random group element must not change the canonical form
      SignRow image = row;
      if (g.rotation) image = rotate(image, static_cast<int>(rng() % n));
      if (g.negation && (rng() & 1)) image = negate(image);
      if (g.reversal && (rng() & 1)) image = reverse(image);
      CHECK(canonical_form(image, g) == c);
    }
  }
}

TEST_CASE("symmetry group parsing") {
  CHECK(SymmetryGroup::parse("all") == SymmetryGroup::all());
  CHECK(SymmetryGroup::parse("none") == SymmetryGroup{});
  CHECK(SymmetryGroup::parse("rotation,reversal") ==
        SymmetryGroup{.rotation = true, .reversal = true});
  CHECK(SymmetryGroup::parse("negation").str() == "negation");
  CHECK(SymmetryGroup::all().str() == "rotation,negation,reversal");
  CHECK(SymmetryGroup{}.str() == "none");
  for (const char* text : {"rotation", "rotation,negation", "rotation,negation,reversal"})
    CHECK(SymmetryGroup::parse(SymmetryGroup::parse(text).str()) == SymmetryGroup::parse(text));
  CHECK_THROWS_AS(SymmetryGroup::parse("sideways"), std::invalid_argument);
}

TEST_CASE("max orthogonal prefix and hadamard predicate") {
  CHECK(max_orthogonal_prefix(SignRow::parse("-+++")) == 4);
  CHECK(max_orthogonal_prefix(SignRow::parse("++++")) == 1);
  CHECK(max_orthogonal_prefix(SignRow::parse("+---+---")) == 4);
  CHECK(is_circulant_hadamard(SignRow::parse("-+++")));
  CHECK(!is_circulant_hadamard(SignRow::parse("++++")));
  CHECK(!is_circulant_hadamard(SignRow::parse("+---+---")));
}

TEST_CASE("order profile") {
  const OrderProfile p4 = order_profile(4);
  CHECK(p4.m == 1);
  CHECK(p4.h == 1);
  CHECK(p4.conjecture_relevant);

  const OrderProfile p36 = order_profile(36);
  CHECK(p36.m == 9);
  CHECK(p36.h == 3);
  CHECK(p36.conjecture_relevant);

  const OrderProfile p16 = order_profile(16);
  CHECK(p16.m == 4);
  CHECK(!p16.h.has_value());
  CHECK(!p16.conjecture_relevant);

  CHECK(order_profile(1).conjecture_relevant);
  CHECK(!order_profile(5).m.has_value());
  CHECK(order_profile(100).conjecture_relevant);   // m = 25 = 5^2, 5 odd
  CHECK(!order_profile(64).conjecture_relevant);   // m = 16 even
  CHECK_THROWS_AS(order_profile(0), std::invalid_argument);
}

TEST_CASE("paf symmetries and counting identities on random rows") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 40);
    const SignRow row = random_row(rng, n);
    for (int s = 1; s < n; ++s) {
      CHECK(paf(row, s) == paf(row, n - s));
      CHECK(agreement_count(row, s) + disagreement_count(row, s) == n);
      CHECK(2 * agreement_count(row, s) == n + paf(row, s));
    }
    const int s = 1 + static_cast<int>(rng() % (n - 1));
    const int k = static_cast<int>(rng() % n);
    CHECK(paf(rotate(row, k), s) == paf(row, s));
    CHECK(paf(negate(row), s) == paf(row, s));
    CHECK(paf(reverse(row), s) == paf(row, s));
    CHECK(max_orthogonal_prefix(rotate(row, k)) == max_orthogonal_prefix(row));
    CHECK(max_orthogonal_prefix(negate(row)) == max_orthogonal_prefix(row));
    CHECK(max_orthogonal_prefix(reverse(row)) == max_orthogonal_prefix(row));
    CHECK(is_circulant_hadamard(rotate(row, k)) == is_circulant_hadamard(row));
  }
}

TEST_CASE("degenerate small orders are accepted") {
  const SignRow one = SignRow::parse("+");
  CHECK(one.size() == 1);
  CHECK(row_sum(one) == 1);
  CHECK(max_orthogonal_prefix(one) == 1);
  CHECK(is_circulant_hadamard(one));  // no shifts to violate
  const SignRow two = SignRow::parse("+-");
  CHECK(paf(two, 1) == -2);
  CHECK(max_orthogonal_prefix(two) == 1);
}
