#include "spanconfig/cohomology.hpp"

#include <algorithm>
#include <bit>

#include "spanconfig/polyalg.hpp"

namespace spanconfig {

namespace {

// Rank profile of a jump mask: (|J ∩ [1]|, ..., |J ∩ [k]|). Componentwise
// order on the concatenated profiles extends the closure partial order on
// strata.
std::vector<int> rank_profile(uint32_t mask, int k) {
  std::vector<int> out(k);
  int acc = 0;
  for (int i = 1; i <= k; ++i) {
    if (mask & (1u << (i - 1))) ++acc;
    out[i - 1] = acc;
  }
  return out;
}

}  // namespace

PavingReport enumerate_cells(const Composition& alpha) {
  const int k = alpha.k();
  int dim_gr = 0;
  for (int p : alpha.parts()) dim_gr += p * (k - p);

  std::vector<Cell> cells;
  for (const SetSequence& seq : enumerate_set_sequences(alpha)) {
    Cell c{seq, pattern_matrix(seq).star_count(),
           unipotent_pattern(seq).star_count(), covers(seq), {}};
    for (int t = 1; t <= seq.length(); ++t) c.jump.push_back(seq.initial_union(t));
    cells.push_back(std::move(c));
  }

  std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) {
    if (a.covering != b.covering) return !a.covering;  // non-covering first
    std::vector<int> pa, pb;
    for (size_t t = 0; t < a.jump.size(); ++t) {
      auto ra = rank_profile(a.jump[t], k), rb = rank_profile(b.jump[t], k);
      pa.insert(pa.end(), ra.begin(), ra.end());
      pb.insert(pb.end(), rb.begin(), rb.end());
    }
    if (pa != pb) return pa < pb;
    if (a.dim() != b.dim()) return a.dim() > b.dim();
    return a.seq < b.seq;
  });

  PavingReport report{alpha, dim_gr, std::move(cells),
                      std::vector<long long>(dim_gr + 1, 0),
                      std::vector<long long>(dim_gr + 1, 0)};
  for (const Cell& c : report.cells) {
    const int codim = dim_gr - c.dim();
    ++report.poincare_gr[codim];
    if (c.covering) ++report.poincare_x[codim];
  }
  while (report.poincare_gr.size() > 1 && report.poincare_gr.back() == 0)
    report.poincare_gr.pop_back();
  while (report.poincare_x.size() > 1 && report.poincare_x.back() == 0)
    report.poincare_x.pop_back();
  return report;
}

long long total_rank(const Composition& alpha) {
  long long count = 0;
  for (const SetSequence& seq : enumerate_set_sequences(alpha))
    if (covers(seq)) ++count;
  return count;
}

long long count_covering_matrices(const Composition& alpha) {
  const int k = alpha.k();
  long long total = 0;
  for (int s = 0; s <= k; ++s) {
    long long prod = binomial(k, s);
    for (int p : alpha.parts()) prod *= binomial(k - s, p);
    total += (s % 2 == 0) ? prod : -prod;
  }
  return total;
}

bool rank_consistency(const Composition& alpha, int max_n) {
  if (alpha.total() > max_n)
    throw BoundExceeded("rank_consistency bound exceeded");
  const long long cells = total_rank(alpha);
  if (cells != count_covering_matrices(alpha)) return false;

  const long long op = static_cast<long long>(enumerate_op(alpha).size());
  if (op % alpha.factorial_product() != 0) return false;
  if (cells != op / alpha.factorial_product()) return false;

  const std::vector<long long> inv = invariant_hilbert(alpha);
  long long inv_total = 0;
  for (long long c : inv) inv_total += c;
  if (inv_total != cells) return false;

  std::vector<long long> px = enumerate_cells(alpha).poincare_x;
  std::vector<long long> iv = inv;
  while (!px.empty() && px.back() == 0) px.pop_back();
  while (!iv.empty() && iv.back() == 0) iv.pop_back();
  if (cells == 0) return px.empty() || (px.size() == 1 && px[0] == 0);
  return px == iv;
}

long long sr_fixed_count(const Composition& alpha, const std::vector<int>& pi) {
  if (!alpha.is_constant())
    throw NonConstantAlpha("sr_fixed_count needs a constant dimension vector");
  const int r = alpha.length();
  if (static_cast<int>(pi.size()) != r)
    throw InvalidArgument("permutation length != r");
  std::vector<bool> seen(r + 1, false);
  for (int v : pi) {
    if (v < 1 || v > r || seen[v]) throw InvalidArgument("not a permutation of [r]");
    seen[v] = true;
  }
  long long count = 0;
  for (const SetSequence& seq : enumerate_set_sequences(alpha)) {
    if (!covers(seq)) continue;
    bool fixed = true;
    for (int t = 0; t < r; ++t)
      if (seq.mask(pi[t] - 1) != seq.mask(t)) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

}  // namespace spanconfig
