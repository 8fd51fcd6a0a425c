#include "spanconfig/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace spanconfig {

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw InvalidArgument("matrix dimensions must be positive");
  a_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rat>>& rows) {
  if (rows.empty() || rows[0].empty()) throw InvalidArgument("empty matrix");
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols())
      throw DimensionMismatch("ragged matrix rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Rat& RatMatrix::at(int i, int j) {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw IndexOutOfRange("matrix index");
  return a_[static_cast<size_t>(i) * cols_ + j];
}

const Rat& RatMatrix::at(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
    throw IndexOutOfRange("matrix index");
  return a_[static_cast<size_t>(i) * cols_ + j];
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shapes");
  RatMatrix out(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int l = 0; l < cols_; ++l) {
      const Rat& x = at(i, l);
      if (x == 0) continue;
      for (int j = 0; j < o.cols_; ++j) out.at(i, j) += x * o.at(l, j);
    }
  return out;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

RatMatrix RatMatrix::column_slice(int c0, int c1) const {
  if (c0 < 0 || c1 > cols_ || c0 >= c1) throw IndexOutOfRange("column slice");
  RatMatrix out(rows_, c1 - c0);
  for (int i = 0; i < rows_; ++i)
    for (int j = c0; j < c1; ++j) out.at(i, j - c0) = at(i, j);
  return out;
}

void RatMatrix::assign_column_slice(int c0, const RatMatrix& block) {
  if (block.rows() != rows_ || c0 + block.cols() > cols_)
    throw DimensionMismatch("column slice assignment");
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < block.cols(); ++j) at(i, c0 + j) = block.at(i, j);
}

namespace {

// Row-reduces a copy; returns the rank.
int gauss_rank(RatMatrix m) {
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c) == 0) continue;
      Rat f = m.at(i, c) / m.at(r, c);
      for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

}  // namespace

int rank(const RatMatrix& m) { return gauss_rank(m); }

int nullspace_dimension(const RatMatrix& m) { return m.cols() - gauss_rank(m); }

Rat determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square");
  RatMatrix a = m;
  Rat det(1);
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(c, j));
      det = -det;
    }
    det *= a.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a.at(i, c) == 0) continue;
      Rat f = a.at(i, c) / a.at(c, c);
      for (int j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return det;
}

RatMatrix inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square");
  const int n = m.rows();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (a.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw RankDeficient("singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(c, j));
        std::swap(inv.at(piv, j), inv.at(c, j));
      }
    Rat d = a.at(c, c);
    for (int j = 0; j < n; ++j) {
      a.at(c, j) /= d;
      inv.at(c, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a.at(i, c) == 0) continue;
      Rat f = a.at(i, c);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(c, j);
        inv.at(i, j) -= f * inv.at(c, j);
      }
    }
  }
  return inv;
}

BlockMatrix::BlockMatrix(RatMatrix m, Composition alpha)
    : m_(std::move(m)), alpha_(std::move(alpha)) {
  if (m_.rows() != alpha_.k()) throw DimensionMismatch("row count != k");
  if (m_.cols() != alpha_.total()) throw DimensionMismatch("column count != |alpha|");
  for (int t = 0; t < alpha_.length(); ++t)
    if (rank(block(t)) != alpha_.part(t)) throw BlockRankDeficient(t + 1);
}

RatMatrix BlockMatrix::block(int t) const {
  const int off = alpha_.offset(t);
  return m_.column_slice(off, off + alpha_.part(t));
}

namespace {

void check_permutation(const std::vector<int>& pi, int k) {
  if (static_cast<int>(pi.size()) != k)
    throw InvalidArgument("permutation length != k");
  std::vector<bool> seen(k + 1, false);
  for (int v : pi) {
    if (v < 1 || v > k || seen[v]) throw InvalidArgument("not a permutation of [k]");
    seen[v] = true;
  }
}

}  // namespace

PiCrefResult pi_cref(const RatMatrix& a, const std::vector<int>& pi) {
  const int k = a.rows(), d = a.cols();
  if (d > k) throw DimensionMismatch("pi_cref needs d <= k");
  check_permutation(pi, k);
  RatMatrix b = a;
  RatMatrix g = RatMatrix::identity(d);
  std::vector<int> pivots;
  int c = 0;
  for (int p = 0; p < k && c < d; ++p) {
    const int row = pi[p] - 1;
    int src = -1;
    for (int j = c; j < d; ++j)
      if (b.at(row, j) != 0) {
        src = j;
        break;
      }
    if (src < 0) continue;
    if (src != c)
      for (int i = 0; i < k; ++i) std::swap(b.at(i, src), b.at(i, c));
    if (src != c)
      for (int i = 0; i < d; ++i) std::swap(g.at(i, src), g.at(i, c));
    Rat piv = b.at(row, c);
    for (int i = 0; i < k; ++i) b.at(i, c) /= piv;
    for (int i = 0; i < d; ++i) g.at(i, c) /= piv;
    for (int j = 0; j < d; ++j) {
      if (j == c || b.at(row, j) == 0) continue;
      Rat f = b.at(row, j);
      for (int i = 0; i < k; ++i) b.at(i, j) -= f * b.at(i, c);
      for (int i = 0; i < d; ++i) g.at(i, j) -= f * g.at(i, c);
    }
    pivots.push_back(row + 1);
    ++c;
  }
  if (c < d) throw RankDeficient("matrix has column rank < d");
  return PiCrefResult{std::move(b), std::move(g), std::move(pivots)};
}

Rat maximal_minor(const RatMatrix& a, const std::vector<int>& rows) {
  const int d = a.cols();
  if (static_cast<int>(rows.size()) != d)
    throw BadSubsetSize("row subset size must equal the column count");
  RatMatrix sub(d, d);
  for (int i = 0; i < d; ++i) {
    const int r = rows[i] - 1;
    if (r < 0 || r >= a.rows()) throw IndexOutOfRange("row subset element");
    for (int j = 0; j < d; ++j) sub.at(i, j) = a.at(r, j);
  }
  return determinant(sub);
}

bool minor_recovery_check(const RatMatrix& a, const std::vector<int>& pi) {
  PiCrefResult res = pi_cref(a, pi);
  std::vector<int> I = res.pivots;  // column s has pivot row I[s]
  std::vector<int> I_sorted = I;
  std::sort(I_sorted.begin(), I_sorted.end());
  const Rat dI = maximal_minor(a, I_sorted);
  if (dI == 0) return false;
  for (int r = 1; r <= a.rows(); ++r) {
    if (std::find(I.begin(), I.end(), r) != I.end()) continue;
    for (int s = 0; s < a.cols(); ++s) {
      std::vector<int> J = I_sorted;
      J.erase(std::find(J.begin(), J.end(), I[s]));
      J.push_back(r);
      std::sort(J.begin(), J.end());
      const Rat q = maximal_minor(a, J) / dI;
      const Rat& entry = res.b.at(r - 1, s);
      if (entry != q && entry != -q) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> permutation_sequence(const SetSequence& s) {
  std::vector<std::vector<int>> out;
  for (int t = 0; t < s.length(); ++t) {
    const uint32_t u = s.initial_union(t);
    std::vector<int> pi;
    for (int e = 1; e <= s.k(); ++e)
      if (!(u & (1u << (e - 1)))) pi.push_back(e);
    for (int e = 1; e <= s.k(); ++e)
      if (u & (1u << (e - 1))) pi.push_back(e);
    out.push_back(std::move(pi));
  }
  return out;
}

UnipotentPattern::UnipotentPattern(int k, std::set<std::pair<int, int>> positions)
    : k_(k), pos_(std::move(positions)) {
  for (auto [i, j] : pos_)
    if (!(1 <= j && j < i && i <= k_))
      throw InvalidArgument("unipotent pattern positions must be strictly lower");
}

bool UnipotentPattern::conforms(const RatMatrix& u) const {
  if (u.rows() != k_ || u.cols() != k_) return false;
  for (int i = 0; i < k_; ++i)
    for (int j = 0; j < k_; ++j) {
      if (i == j) {
        if (u.at(i, j) != 1) return false;
      } else if (j > i || !pos_.count({i + 1, j + 1})) {
        if (u.at(i, j) != 0) return false;
      }
    }
  return true;
}

UnipotentPattern unipotent_pattern(const SetSequence& s) {
  std::set<std::pair<int, int>> pos;
  for (int t = 0; t < s.length(); ++t) {
    const uint32_t before = s.initial_union(t);
    const uint32_t through = s.initial_union(t + 1);
    for (int i = 1; i <= s.k(); ++i) {
      const uint32_t bit = 1u << (i - 1);
      if (!(s.mask(t) & bit) || (before & bit)) continue;  // i newly pivoted at t
      for (int j = i + 1; j <= s.k(); ++j)
        if (!(through & (1u << (j - 1)))) pos.insert({j, i});
    }
  }
  return UnipotentPattern(s.k(), std::move(pos));
}

int PatternMatrix::star_count() const {
  int c = 0;
  for (const auto& row : cells)
    for (PatternCell x : row)
      if (x == PatternCell::Star) ++c;
  return c;
}

bool PatternMatrix::has_zero_row() const {
  for (const auto& row : cells) {
    bool all_zero = true;
    for (PatternCell x : row)
      if (x != PatternCell::Zero) all_zero = false;
    if (all_zero) return true;
  }
  return false;
}

PatternMatrix pattern_matrix(const SetSequence& s) {
  const Composition alpha = s.type();
  const int k = s.k();
  const int n = alpha.total();
  PatternMatrix pm{k, alpha, s,
                   std::vector<std::vector<PatternCell>>(
                       k, std::vector<PatternCell>(n, PatternCell::Zero))};
  const auto perms = permutation_sequence(s);
  for (int t = 0; t < s.length(); ++t) {
    const int off = alpha.offset(t);
    const uint32_t before = s.initial_union(t);
    const uint32_t through = s.initial_union(t + 1);
    std::vector<int> priority(k + 1, 0);  // priority[row] = position in pi^(t)
    for (int p = 0; p < k; ++p) priority[perms[t][p]] = p;
    // Pivot rows of I_t ordered by pi^(t)-priority give the column order.
    std::vector<int> cols = s.set(t);
    std::sort(cols.begin(), cols.end(),
              [&](int x, int y) { return priority[x] < priority[y]; });
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
      const int ip = cols[c];  // pivot row of this column
      const bool new_pivot = !(before & (1u << (ip - 1)));
      for (int j = 1; j <= k; ++j) {
        PatternCell cell;
        if (j == ip) {
          cell = PatternCell::One;
        } else if (s.mask(t) & (1u << (j - 1))) {
          cell = PatternCell::Zero;  // other pivot rows are cleared
        } else if (priority[j] < priority[ip]) {
          cell = PatternCell::Zero;  // above the pivot in priority order
        } else {
          cell = PatternCell::Star;
          // Extra zeroing: below a new pivot, rows outside the union so far.
          if (new_pivot && j > ip && !(through & (1u << (j - 1))))
            cell = PatternCell::Zero;
        }
        pm.cells[j - 1][off + c] = cell;
      }
    }
  }
  return pm;
}

bool fits_pattern(const RatMatrix& b, const SetSequence& s) {
  const PatternMatrix pm = pattern_matrix(s);
  if (b.rows() != pm.k || b.cols() != pm.alpha.total())
    throw DimensionMismatch("matrix shape does not match the pattern");
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      if (pm.cells[i][j] == PatternCell::Zero && b.at(i, j) != 0) return false;
      if (pm.cells[i][j] == PatternCell::One && b.at(i, j) != 1) return false;
    }
  return true;
}

MixedReductionResult mixed_reduce(const BlockMatrix& a, MixedReductionTrace* trace) {
  const Composition& alpha = a.alpha();
  const int k = alpha.k();
  RatMatrix b = a.matrix();
  RatMatrix u = RatMatrix::identity(k);
  RatMatrix g_out = RatMatrix::identity(alpha.total());
  std::vector<uint32_t> masks;
  uint32_t union_mask = 0;
  for (int t = 0; t < alpha.length(); ++t) {
    // pi^(t): rows outside the running union first, in increasing order.
    std::vector<int> pi;
    for (int e = 1; e <= k; ++e)
      if (!(union_mask & (1u << (e - 1)))) pi.push_back(e);
    for (int e = 1; e <= k; ++e)
      if (union_mask & (1u << (e - 1))) pi.push_back(e);

    const int off = alpha.offset(t);
    PiCrefResult cref = [&] {
      try {
        return pi_cref(b.column_slice(off, off + alpha.part(t)), pi);
      } catch (const RankDeficient&) {
        throw BlockRankDeficient(t + 1);
      }
    }();
    b.assign_column_slice(off, cref.b);
    // Overall column transform: A = u B g requires the inverse block here.
    const RatMatrix ginv = inverse(cref.g);
    for (int i = 0; i < alpha.part(t); ++i)
      for (int j = 0; j < alpha.part(t); ++j)
        g_out.at(off + i, off + j) = ginv.at(i, j);

    uint32_t pivot_mask = 0;
    for (int p : cref.pivots) pivot_mask |= 1u << (p - 1);
    masks.push_back(pivot_mask);
    const uint32_t through = union_mask | pivot_mask;

    // Clear entries below newly pivoted rows in rows outside the union;
    // u picks up the cleared value so that u * B_new == B_old rowwise.
    for (int c = 0; c < static_cast<int>(cref.pivots.size()); ++c) {
      const int ip = cref.pivots[c];
      if (union_mask & (1u << (ip - 1))) continue;  // old pivot row
      for (int j = ip + 1; j <= k; ++j) {
        if (through & (1u << (j - 1))) continue;
        const Rat v = b.at(j - 1, off + c);
        if (v == 0) continue;
        for (int col = 0; col < b.cols(); ++col)
          b.at(j - 1, col) -= v * b.at(ip - 1, col);
        u.at(j - 1, ip - 1) = v;
      }
    }
    union_mask = through;
    if (trace) trace->after_stage.push_back(b);
  }
  SetSequence seq(std::move(masks), k);
  const bool cov = covers(seq);
  return MixedReductionResult{std::move(seq), std::move(u), std::move(b),
                              std::move(g_out), cov};
}

int nw_rank(const RatMatrix& a, int i, int j) {
  if (i < 1 || i > a.rows() || j < 1 || j > a.cols())
    throw IndexOutOfRange("northwest corner");
  RatMatrix sub(i, j);
  for (int r = 0; r < i; ++r)
    for (int c = 0; c < j; ++c) sub.at(r, c) = a.at(r, c);
  return rank(sub);
}

std::vector<uint32_t> jump_sets(const BlockMatrix& a) {
  const Composition& alpha = a.alpha();
  std::vector<uint32_t> out;
  for (int t = 0; t < alpha.length(); ++t) {
    const int col = alpha.offset(t) + alpha.part(t);
    uint32_t mask = 0;
    int prev = 0;
    for (int i = 1; i <= alpha.k(); ++i) {
      const int r = nw_rank(a.matrix(), i, col);
      if (r > prev) mask |= 1u << (i - 1);
      prev = r;
    }
    out.push_back(mask);
  }
  return out;
}

}  // namespace spanconfig
