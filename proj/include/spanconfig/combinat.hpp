#pragma once

// Compositions, batches, set sequences, ordered set partitions, coinversion
// codes, skip sequences, nonskip monomials and the nonstandard free
// symmetric-group action on words.

#include <cstdint>
#include <utility>
#include <vector>

#include "spanconfig/errors.hpp"

namespace spanconfig {

// Word over the nonnegative integers: exponent vectors, coinversion codes,
// skip sequences, weak compositions.
using IntWord = std::vector<int>;

// A composition alpha = (alpha_1,...,alpha_r) with 1 <= alpha_i <= k.
class Composition {
 public:
  Composition(std::vector<int> parts, int k);

  const std::vector<int>& parts() const { return parts_; }
  int k() const { return k_; }
  int length() const { return static_cast<int>(parts_.size()); }  // r
  int total() const { return n_; }                                // n = |alpha|
  int part(int i) const { return parts_.at(i); }                  // 0-based

  // Offset of batch i in [0,n): batch i covers [offset(i), offset(i)+part(i)).
  int offset(int i) const;
  // Batch index (0-based) containing 0-based position p.
  int batch_of(int pos) const;
  bool is_constant() const;
  // alpha! = prod alpha_i!
  long long factorial_product() const;

  bool operator==(const Composition& o) const {
    return k_ == o.k_ && parts_ == o.parts_;
  }

 private:
  std::vector<int> parts_;
  int k_;
  int n_;
};

// Half-open index intervals partitioning [0,n) into the batches of alpha.
struct BatchRanges {
  std::vector<std::pair<int, int>> ranges;
};

BatchRanges batches(const Composition& alpha);

// Sequence (I_1,...,I_r) of nonempty subsets of [k], stored as bitmasks
// (bit e-1 represents the element e). k <= 16.
class SetSequence {
 public:
  SetSequence(std::vector<uint32_t> masks, int k);
  static SetSequence from_sets(const std::vector<std::vector<int>>& sets, int k);

  int k() const { return k_; }
  int length() const { return static_cast<int>(masks_.size()); }
  uint32_t mask(int t) const { return masks_.at(t); }
  const std::vector<uint32_t>& masks() const { return masks_; }
  std::vector<int> set(int t) const;  // sorted 1-based elements
  Composition type() const;
  // Union of the first t sets (t = 0..r).
  uint32_t initial_union(int t) const;

  bool operator==(const SetSequence& o) const {
    return k_ == o.k_ && masks_ == o.masks_;
  }
  bool operator<(const SetSequence& o) const {
    return masks_ < o.masks_;
  }

 private:
  std::vector<uint32_t> masks_;
  int k_;
};

bool covers(const SetSequence& s);

// Column t is the indicator vector of I_t; k rows, r columns.
std::vector<std::vector<int>> set_sequence_matrix(const SetSequence& s);
// Inverse; rejects matrices with a zero column.
SetSequence set_sequence_from_matrix(const std::vector<std::vector<int>>& m);

// All set sequences in [k] of type alpha, in lexicographic order of the
// per-position sorted element lists.
std::vector<SetSequence> enumerate_set_sequences(const Composition& alpha);

// Ordered set partition (B_1 | ... | B_k) of [n]: disjoint nonempty sorted
// blocks with union [n].
class OrderedSetPartition {
 public:
  explicit OrderedSetPartition(std::vector<std::vector<int>> blocks);

  int num_blocks() const { return static_cast<int>(blocks_.size()); }  // k
  int size() const { return n_; }                                      // n
  const std::vector<int>& block(int j) const { return blocks_.at(j); } // 0-based
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_of(int letter) const;  // 0-based block index of 1-based letter

  bool operator==(const OrderedSetPartition& o) const {
    return blocks_ == o.blocks_;
  }

 private:
  std::vector<std::vector<int>> blocks_;
  int n_;
};

// Does sigma lie in OP_{alpha,k}: k blocks, batch letters in distinct blocks.
bool in_op_family(const OrderedSetPartition& sigma, const Composition& alpha);

// All of OP_{alpha,k} in lexicographic order of block-assignment words
// (w_i = block of letter i). Empty when n < k.
std::vector<OrderedSetPartition> enumerate_op(const Composition& alpha);

// Coinversion code of sigma in OP_{n,k}; entries lie in [0,k-1].
IntWord coinversion_code(const OrderedSetPartition& sigma);

// True iff c is in the image of the coinversion code: c in [0,k-1]^n and no
// reverse skip word gamma(S)* with |S| = n-k+1 satisfies gamma(S)* <= c
// componentwise.
bool is_valid_code(const IntWord& c, int k);

// Inverse of coinversion_code by staged insertion. Throws InvalidCode when
// the precondition fails.
OrderedSetPartition iota_insert(const IntWord& c, int k);

// Coinversion labels of a sequence of possibly-empty blocks: the j+1 empty
// blocks are labeled 0..j right to left, then the nonempty blocks are
// labeled j+1..k-1 left to right.
std::vector<int> coinversion_labels(const std::vector<std::vector<int>>& blocks);

// Skip sequence gamma(S) of S subseteq [n] (1-based, sorted): gamma_i = i-j+1
// if i = s_j, else 0.
IntWord skip_sequence(const std::vector<int>& S, int n);
// gamma(S)* = (gamma_n,...,gamma_1); read as exponents this is the reverse
// skip monomial x(S)* = x_1^{gamma_n} ... x_n^{gamma_1}.
IntWord reverse_skip(const std::vector<int>& S, int n);

// Subsets of [n] of the given size, as sorted 1-based lists, lexicographic.
// A negative size is treated as zero so that the degenerate n < k cases of
// the nonskip/ideal definitions stay coherent (the empty set contributes the
// monomial 1).
std::vector<std::vector<int>> subsets_of_size(int n, int size);

// alpha-nonskip test for an exponent vector of length n = |alpha|:
// no x(S)* with |S| = n-k+1 divides the monomial, and the j-th variable of
// each batch has exponent < k-j+1.
bool is_alpha_nonskip(const IntWord& expo, const Composition& alpha);

// All alpha-nonskip exponent vectors, lexicographic.
std::vector<IntWord> enumerate_nonskip(const Composition& alpha);

// The nonstandard action of the adjacent transposition s_i (1 <= i <= n-1):
// (a_i, a_{i+1}) -> (a_{i+1}, a_i - 1) if a_i > a_{i+1},
//                   (a_{i+1} + 1, a_i) otherwise.
IntWord unusual_act(int i, const IntWord& w);

// Applies s_{word[0]} . (s_{word[1]} . (... . w)).
IntWord unusual_act_word(const std::vector<int>& word, const IntWord& w);

// The unique strictly decreasing word in the orbit of w, reached by
// repeatedly acting at the leftmost weak ascent (each such step raises the
// word lexicographically, and only strictly decreasing words are fixed).
IntWord orbit_decreasing_rep(const IntWord& w);

// Word b_1...b_m over {0,...,n}: first letter positive, each of 1..n exactly
// once, zeros elsewhere.
class PaddedWord {
 public:
  explicit PaddedWord(std::vector<int> letters);
  const std::vector<int>& letters() const { return letters_; }
  int n() const { return n_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool operator==(const PaddedWord& o) const { return letters_ == o.letters_; }

 private:
  std::vector<int> letters_;
  int n_;
};

// Inversion code (i_1,...,i_n): i_j counts letters from {0,...,j-1} to the
// right of the letter j.
IntWord inversion_encode(const PaddedWord& b);
// Two-sided inverse of inversion_encode; produces the word with minimal
// padding realizing the code.
PaddedWord inversion_decode(const IntWord& code);

// Is every batch of w strictly decreasing.
bool alpha_decreasing(const IntWord& w, const Composition& alpha);

// Replays the staged insertions sigma^(0)..sigma^(r): each batch must enter
// blocks of strictly decreasing coinversion label (labels taken with respect
// to the previous stage).
bool is_alpha_compatible(const OrderedSetPartition& sigma, const Composition& alpha);

// Generators of the parabolic subgroup S_alpha: the 1-based positions p such
// that p and p+1 lie in the same batch.
std::vector<int> parabolic_generators(const Composition& alpha);

long long binomial(int n, int d);
// Stirling numbers of the second kind via the standard recurrence.
long long stirling2(int n, int k);

}  // namespace spanconfig
