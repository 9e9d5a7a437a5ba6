#ifndef CIRCHAD_BLOCK_STRUCTURE_HPP
#define CIRCHAD_BLOCK_STRUCTURE_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "circhad/sign_row.hpp"

namespace circhad {

// Maximal run of equal-sign entries under circular adjacency.
struct Block {
  int sign = 0;    // +1 or -1
  int length = 0;  // >= 1
  int start = 0;   // index of the first position, in original row coordinates

  bool operator==(const Block&) const = default;
};

// The circular list of blocks, rotated so the listing begins at a sign
// change; the listed first and last blocks then carry opposite signs.
// Constant rows have no sign change and are flagged degenerate.
struct BlockDecomposition {
  SignRow row;
  std::vector<Block> blocks;
  int offset = 0;          // start index of blocks[0]
  bool degenerate = false;

  int n() const { return row.size(); }
  int block_count() const { return static_cast<int>(blocks.size()); }
  const Block& block(int i) const;  // circular block index
};

BlockDecomposition decompose(const SignRow& row);

enum class AlternatingKind { one, two, geq3 };

// Size class of a neighboring block: 1, 2 or >=3.
enum class SizeClass { one = 1, two = 2, geq3 = 3 };

SizeClass size_class(int block_length);

// Maximal circular run of blocks all in one size class. Contexts are the
// size classes of the blocks adjacent to the run; they are unset exactly
// when the run covers every block of the row.
struct AlternatingSequence {
  AlternatingKind kind;
  int first_block = 0;  // index into BlockDecomposition::blocks
  int length = 0;       // number of member blocks
  std::optional<SizeClass> left_context;
  std::optional<SizeClass> right_context;

  bool contexts_resolved() const { return left_context && right_context; }
};

// All maximal runs of the requested class; a run may wrap the listing
// boundary, and if every block matches one run of length block_count()
// is returned. Refuses degenerate decompositions.
std::vector<AlternatingSequence> alternating_sequences(const BlockDecomposition& d,
                                                       AlternatingKind kind);

struct UnclassifiableSequence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Counted statistics of a decomposition. alpha1_types / alpha2_types are
// populated only when n > 4 and every sequence of the class has resolvable
// contexts (the shift-4 type taxonomy is meaningless otherwise).
struct BlockCensus {
  std::map<int, int> by_size;  // k -> |B_k|
  int total = 0;
  int alpha1 = 0;
  int alpha2 = 0;
  int alpha_geq3 = 0;
  int alpha_2_geq3 = 0;  // adjacent {2-block, >=3-block} pairs
  std::optional<std::array<int, 6>> alpha1_types;  // [0] = type 1 ... [5] = type 6
  std::optional<std::array<int, 3>> alpha2_types;

  int count(int k) const;  // |B_k|
  int geq(int k) const;    // |B_{>=k}|

  bool operator==(const BlockCensus&) const = default;
};

BlockCensus census(const BlockDecomposition& d);

// Columns j inside the structure's span (positions of its member blocks)
// with entry(j) == entry(j+4). Summed over the position partition
// {1-alternating runs} u {2-alternating runs} u {individual >=3-blocks}
// this reproduces agreement_count(row, 4) exactly. Requires n > 4.
int shift4_contribution(const BlockDecomposition& d, const AlternatingSequence& seq);
int shift4_contribution(const BlockDecomposition& d, const Block& b);

// 2-alternating sequence types: 1 = >=3-blocks on both sides, 2 = a
// 1-alternating sequence on one side and a >=3-block on the other,
// 3 = 1-alternating sequences on both sides.
int classify_two_alt(const AlternatingSequence& seq);

// 1-alternating sequence types from the sequence length and its shift-4
// accounting contribution c: fixed contributions 3, 2 give types 1, 2
// (length-1 sequences); c = l, l-1, l-2 give types 4, 5, 6. The (l=1, c=1)
// case is resolved to type 4; types 3 and 4 enter the shift-4 identity with
// the same coefficient, so the choice is immaterial there. Any other c
// throws UnclassifiableSequence.
int classify_one_alt(const AlternatingSequence& seq, int contribution);

// The shift-4 accounting value of a 1-alternating sequence, calibrated so
// that the block-census identity at shift 4 balances: with g >=3-class
// contexts (g in {0,1,2}), a length-1 sequence accounts for 1+g columns and
// a longer one for length-2+g. Throws when the contexts are unresolved.
int accounting_contribution(const AlternatingSequence& seq);

}  // namespace circhad

#endif
