#pragma once

// Affine paving cells of the Grassmann product and of the spanning
// configuration space inside it: dimensions, Poincare polynomials, Betti
// numbers, rank formulas and the permutation character on covering
// sequences.

#include <vector>

#include "spanconfig/combinat.hpp"
#include "spanconfig/linalg.hpp"

namespace spanconfig {

struct Cell {
  SetSequence seq;
  int stars_pm;  // stars in PM(seq)
  int stars_u;   // stars in U(seq)
  bool covering;
  std::vector<uint32_t> jump;  // initial unions of seq, as masks

  int dim() const { return stars_pm + stars_u; }
};

struct PavingReport {
  Composition alpha;
  int dim_gr;                      // sum alpha_i (k - alpha_i)
  std::vector<Cell> cells;         // paving order
  std::vector<long long> poincare_gr;  // coefficient of q^c = cells of codim c
  std::vector<long long> poincare_x;   // covering cells only
};

// One cell per set sequence of type alpha. The order sorts non-covering
// cells first, then by the jump sequence's rank profiles (a linear extension
// of the componentwise rank order), then by decreasing dimension, then by
// the sequence encoding.
PavingReport enumerate_cells(const Composition& alpha);

// Number of covering cells, by enumeration.
long long total_rank(const Composition& alpha);

// Number of k x r 0,1-matrices with column sums alpha and no zero row:
// sum_s (-1)^s C(k,s) prod_i C(k-s, alpha_i).
long long count_covering_matrices(const Composition& alpha);

// Cross-checks total_rank == count_covering_matrices == |OP|/alpha! ==
// sum(invariant_hilbert) and poincare_x == invariant_hilbert degreewise.
bool rank_consistency(const Composition& alpha, int max_n = 8);

// For constant alpha = (d,...,d): number of covering set sequences fixed by
// the subscript permutation pi (one-line, 1-based). Throws NonConstantAlpha.
long long sr_fixed_count(const Composition& alpha, const std::vector<int>& pi);

}  // namespace spanconfig
