#pragma once

// Exact rational matrices, permuted column reduced echelon form, the mixed
// reduction factorization A = u B g, pattern matrices, unipotent patterns,
// northwest ranks and jump sets.

#include <set>
#include <utility>
#include <vector>

#include "spanconfig/combinat.hpp"
#include "spanconfig/rational.hpp"

namespace spanconfig {

class RatMatrix {
 public:
  RatMatrix(int rows, int cols);
  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<std::vector<Rat>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& at(int i, int j);
  const Rat& at(int i, int j) const;

  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const;

  // Columns [c0, c1) as a rows x (c1-c0) matrix.
  RatMatrix column_slice(int c0, int c1) const;
  void assign_column_slice(int c0, const RatMatrix& block);

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

int rank(const RatMatrix& m);
Rat determinant(const RatMatrix& m);
RatMatrix inverse(const RatMatrix& m);  // throws RankDeficient if singular
// Dimension of the kernel (as a map on column vectors): cols - rank.
int nullspace_dimension(const RatMatrix& m);

// k x n matrix whose alpha-blocks all have full column rank.
class BlockMatrix {
 public:
  BlockMatrix(RatMatrix m, Composition alpha);  // throws BlockRankDeficient
  const RatMatrix& matrix() const { return m_; }
  const Composition& alpha() const { return alpha_; }
  RatMatrix block(int t) const;

 private:
  RatMatrix m_;
  Composition alpha_;
};

struct PiCrefResult {
  RatMatrix b;              // = a * g, the unique pi-CREF
  RatMatrix g;              // invertible d x d column transform
  std::vector<int> pivots;  // 1-based pivot rows, in pi-priority order
};

// Column-reduces a (k x d, rank d) scanning rows in the order
// pi(1),...,pi(k). pi is one-line notation on [k].
PiCrefResult pi_cref(const RatMatrix& a, const std::vector<int>& pi);

// Determinant of the d x d submatrix of a on the given 1-based rows.
Rat maximal_minor(const RatMatrix& a, const std::vector<int>& rows);

// Checks that every non-pivot entry (r,s) of the pi-CREF of a equals
// +-Delta_J(a)/Delta_I(a), where J replaces the pivot row of column s by r.
bool minor_recovery_check(const RatMatrix& a, const std::vector<int>& pi);

// pi^(t) lists [k] minus the union of I_1..I_{t-1} increasing, then that
// union increasing.
std::vector<std::vector<int>> permutation_sequence(const SetSequence& s);

// Strictly-lower-triangular star positions of U(I): (row j, col i), j > i,
// with i newly pivoted at some stage t and j outside the union through t.
class UnipotentPattern {
 public:
  UnipotentPattern(int k, std::set<std::pair<int, int>> positions);
  int k() const { return k_; }
  const std::set<std::pair<int, int>>& positions() const { return pos_; }  // 1-based
  int star_count() const { return static_cast<int>(pos_.size()); }
  // Does a unit lower triangular matrix fit the pattern.
  bool conforms(const RatMatrix& u) const;

 private:
  int k_;
  std::set<std::pair<int, int>> pos_;
};

UnipotentPattern unipotent_pattern(const SetSequence& s);

enum class PatternCell { Zero, One, Star };

struct PatternMatrix {
  int k;
  Composition alpha;
  SetSequence source;
  std::vector<std::vector<PatternCell>> cells;  // k x n

  int star_count() const;
  bool has_zero_row() const;
};

PatternMatrix pattern_matrix(const SetSequence& s);

// True iff b arises from PM(s) by substituting scalars for the stars.
bool fits_pattern(const RatMatrix& b, const SetSequence& s);

struct MixedReductionResult {
  SetSequence seq;
  RatMatrix u;  // k x k unit lower triangular, conforming to U(seq)
  RatMatrix b;  // fits PM(seq)
  RatMatrix g;  // block diagonal in L_alpha; u * b * g == input
  bool covers_k;
};

// Per-stage snapshots of the working matrix, for stability checks.
struct MixedReductionTrace {
  std::vector<RatMatrix> after_stage;
};

MixedReductionResult mixed_reduce(const BlockMatrix& a,
                                  MixedReductionTrace* trace = nullptr);

// Rank of the northwest i x j submatrix (i, j are 1-based counts).
int nw_rank(const RatMatrix& a, int i, int j);

// J_t = rows where the northwest rank at column alpha_1+...+alpha_t
// increments, returned as k-bit masks.
std::vector<uint32_t> jump_sets(const BlockMatrix& a);

}  // namespace spanconfig
