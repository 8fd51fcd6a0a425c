#include "spanconfig/combinat.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

namespace spanconfig {

Composition::Composition(std::vector<int> parts, int k)
    : parts_(std::move(parts)), k_(k) {
  if (k_ < 1 || k_ > 16) throw InvalidArgument("k must lie in [1,16]");
  if (parts_.empty()) throw InvalidArgument("composition needs at least one part");
  n_ = 0;
  for (int p : parts_) {
    if (p < 1 || p > k_)
      throw InvalidArgument("composition part out of range [1,k]");
    n_ += p;
  }
}

int Composition::offset(int i) const {
  if (i < 0 || i >= length()) throw IndexOutOfRange("batch index");
  return std::accumulate(parts_.begin(), parts_.begin() + i, 0);
}

int Composition::batch_of(int pos) const {
  if (pos < 0 || pos >= n_) throw IndexOutOfRange("position");
  int acc = 0;
  for (int i = 0; i < length(); ++i) {
    acc += parts_[i];
    if (pos < acc) return i;
  }
  throw IndexOutOfRange("position");
}

bool Composition::is_constant() const {
  return std::all_of(parts_.begin(), parts_.end(),
                     [&](int p) { return p == parts_[0]; });
}

long long Composition::factorial_product() const {
  long long f = 1;
  for (int p : parts_)
    for (int i = 2; i <= p; ++i) f *= i;
  return f;
}

BatchRanges batches(const Composition& alpha) {
  BatchRanges b;
  int at = 0;
  for (int p : alpha.parts()) {
    b.ranges.emplace_back(at, at + p);
    at += p;
  }
  return b;
}

SetSequence::SetSequence(std::vector<uint32_t> masks, int k)
    : masks_(std::move(masks)), k_(k) {
  if (k_ < 1 || k_ > 16) throw InvalidArgument("k must lie in [1,16]");
  if (masks_.empty()) throw InvalidArgument("set sequence needs length >= 1");
  const uint32_t full = (1u << k_) - 1;
  for (uint32_t m : masks_) {
    if (m == 0) throw InvalidArgument("set sequence entries must be nonempty");
    if (m & ~full) throw InvalidArgument("set sequence element exceeds k");
  }
}

SetSequence SetSequence::from_sets(const std::vector<std::vector<int>>& sets, int k) {
  std::vector<uint32_t> masks;
  for (const auto& s : sets) {
    uint32_t m = 0;
    for (int e : s) {
      if (e < 1 || e > k) throw InvalidArgument("set element out of [1,k]");
      m |= 1u << (e - 1);
    }
    masks.push_back(m);
  }
  return SetSequence(std::move(masks), k);
}

std::vector<int> SetSequence::set(int t) const {
  std::vector<int> out;
  uint32_t m = mask(t);
  for (int e = 1; e <= k_; ++e)
    if (m & (1u << (e - 1))) out.push_back(e);
  return out;
}

Composition SetSequence::type() const {
  std::vector<int> parts;
  for (uint32_t m : masks_) parts.push_back(std::popcount(m));
  return Composition(parts, k_);
}

uint32_t SetSequence::initial_union(int t) const {
  if (t < 0 || t > length()) throw IndexOutOfRange("initial union index");
  uint32_t u = 0;
  for (int s = 0; s < t; ++s) u |= masks_[s];
  return u;
}

bool covers(const SetSequence& s) {
  return s.initial_union(s.length()) == (1u << s.k()) - 1;
}

std::vector<std::vector<int>> set_sequence_matrix(const SetSequence& s) {
  std::vector<std::vector<int>> m(s.k(), std::vector<int>(s.length(), 0));
  for (int t = 0; t < s.length(); ++t)
    for (int e = 1; e <= s.k(); ++e)
      if (s.mask(t) & (1u << (e - 1))) m[e - 1][t] = 1;
  return m;
}

SetSequence set_sequence_from_matrix(const std::vector<std::vector<int>>& m) {
  if (m.empty() || m[0].empty()) throw InvalidArgument("empty matrix");
  const int k = static_cast<int>(m.size());
  const int r = static_cast<int>(m[0].size());
  std::vector<uint32_t> masks(r, 0);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(m[i].size()) != r)
      throw DimensionMismatch("ragged matrix");
    for (int t = 0; t < r; ++t) {
      if (m[i][t] != 0 && m[i][t] != 1)
        throw InvalidArgument("matrix entries must be 0 or 1");
      if (m[i][t]) masks[t] |= 1u << i;
    }
  }
  for (uint32_t c : masks)
    if (c == 0) throw InvalidArgument("matrix has a zero column");
  return SetSequence(std::move(masks), k);
}

namespace {

// Size-d subsets of [k] as masks, in lex order of the sorted element lists.
std::vector<uint32_t> subset_masks(int k, int d) {
  std::vector<uint32_t> out;
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 1);
  if (d == 0) return {0u};
  if (d > k) return {};
  while (true) {
    uint32_t m = 0;
    for (int e : pick) m |= 1u << (e - 1);
    out.push_back(m);
    int i = d - 1;
    while (i >= 0 && pick[i] == k - (d - 1 - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<SetSequence> enumerate_set_sequences(const Composition& alpha) {
  std::vector<std::vector<uint32_t>> choices;
  for (int t = 0; t < alpha.length(); ++t)
    choices.push_back(subset_masks(alpha.k(), alpha.part(t)));
  std::vector<SetSequence> out;
  std::vector<uint32_t> cur(alpha.length());
  std::vector<size_t> idx(alpha.length(), 0);
  while (true) {
    for (int t = 0; t < alpha.length(); ++t) cur[t] = choices[t][idx[t]];
    out.emplace_back(cur, alpha.k());
    int t = alpha.length() - 1;
    while (t >= 0 && ++idx[t] == choices[t].size()) idx[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

OrderedSetPartition::OrderedSetPartition(std::vector<std::vector<int>> blocks)
    : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw InvalidArgument("ordered set partition needs blocks");
  std::set<int> seen;
  n_ = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw InvalidArgument("empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 1) throw InvalidArgument("letters are positive");
      if (!seen.insert(x).second) throw InvalidArgument("repeated letter");
      ++n_;
    }
  }
  if (*seen.rbegin() != n_) throw InvalidArgument("letters must form [n]");
}

int OrderedSetPartition::block_of(int letter) const {
  for (int j = 0; j < num_blocks(); ++j)
    if (std::binary_search(blocks_[j].begin(), blocks_[j].end(), letter))
      return j;
  throw IndexOutOfRange("letter not present");
}

bool in_op_family(const OrderedSetPartition& sigma, const Composition& alpha) {
  if (sigma.num_blocks() != alpha.k()) return false;
  if (sigma.size() != alpha.total()) return false;
  for (auto [lo, hi] : batches(alpha).ranges) {
    std::set<int> blocks_used;
    for (int pos = lo; pos < hi; ++pos)
      if (!blocks_used.insert(sigma.block_of(pos + 1)).second) return false;
  }
  return true;
}

std::vector<OrderedSetPartition> enumerate_op(const Composition& alpha) {
  const int n = alpha.total();
  const int k = alpha.k();
  std::vector<OrderedSetPartition> out;
  if (n < k) return out;
  std::vector<int> assign(n, 0);  // assign[i] = 0-based block of letter i+1
  while (true) {
    bool ok = true;
    uint32_t used = 0;
    for (int i = 0; i < n && ok; ++i) used |= 1u << assign[i];
    ok = (used == (1u << k) - 1);
    if (ok) {
      for (auto [lo, hi] : batches(alpha).ranges) {
        uint32_t batch_used = 0;
        for (int pos = lo; pos < hi; ++pos) {
          uint32_t bit = 1u << assign[pos];
          if (batch_used & bit) {
            ok = false;
            break;
          }
          batch_used |= bit;
        }
        if (!ok) break;
      }
    }
    if (ok) {
      std::vector<std::vector<int>> blocks(k);
      for (int i = 0; i < n; ++i) blocks[assign[i]].push_back(i + 1);
      out.emplace_back(std::move(blocks));
    }
    int i = n - 1;
    while (i >= 0 && assign[i] == k - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }
  return out;
}

IntWord coinversion_code(const OrderedSetPartition& sigma) {
  const int n = sigma.size();
  const int k = sigma.num_blocks();
  std::vector<int> min_of(k);
  for (int j = 0; j < k; ++j) min_of[j] = sigma.block(j).front();
  IntWord c(n, 0);
  for (int i = 1; i <= n; ++i) {
    const int j = sigma.block_of(i);
    int later_bigger = 0;
    for (int j2 = j + 1; j2 < k; ++j2)
      if (min_of[j2] > i) ++later_bigger;
    c[i - 1] = later_bigger + (i == min_of[j] ? 0 : j);
  }
  return c;
}

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
  if (size < 0) size = 0;
  if (size > n) return {};
  std::vector<std::vector<int>> out;
  for (uint32_t m : subset_masks(n, size)) {
    std::vector<int> s;
    for (int e = 1; e <= n; ++e)
      if (m & (1u << (e - 1))) s.push_back(e);
    out.push_back(std::move(s));
  }
  return out;
}

IntWord skip_sequence(const std::vector<int>& S, int n) {
  IntWord g(n, 0);
  std::vector<int> sorted = S;
  std::sort(sorted.begin(), sorted.end());
  for (int j = 0; j < static_cast<int>(sorted.size()); ++j) {
    const int s = sorted[j];
    if (s < 1 || s > n) throw IndexOutOfRange("subset element out of [n]");
    g[s - 1] = s - (j + 1) + 1;
  }
  return g;
}

IntWord reverse_skip(const std::vector<int>& S, int n) {
  IntWord g = skip_sequence(S, n);
  std::reverse(g.begin(), g.end());
  return g;
}

bool is_valid_code(const IntWord& c, int k) {
  const int n = static_cast<int>(c.size());
  for (int x : c)
    if (x < 0 || x >= k) return false;
  for (const auto& S : subsets_of_size(n, n - k + 1)) {
    IntWord g = reverse_skip(S, n);
    bool dominated = true;
    for (int i = 0; i < n; ++i)
      if (g[i] > c[i]) {
        dominated = false;
        break;
      }
    if (dominated) return false;
  }
  return true;
}

std::vector<int> coinversion_labels(const std::vector<std::vector<int>>& blocks) {
  const int k = static_cast<int>(blocks.size());
  std::vector<int> label(k, -1);
  int next = 0;
  for (int j = k - 1; j >= 0; --j)
    if (blocks[j].empty()) label[j] = next++;
  for (int j = 0; j < k; ++j)
    if (!blocks[j].empty()) label[j] = next++;
  return label;
}

OrderedSetPartition iota_insert(const IntWord& c, int k) {
  if (!is_valid_code(c, k)) throw InvalidCode("not a coinversion code");
  const int n = static_cast<int>(c.size());
  std::vector<std::vector<int>> blocks(k);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> label = coinversion_labels(blocks);
    int target = -1;
    for (int j = 0; j < k; ++j)
      if (label[j] == c[i - 1]) target = j;
    if (target < 0) throw InvalidCode("insertion label missing");
    blocks[target].push_back(i);
  }
  for (const auto& b : blocks)
    if (b.empty()) throw InvalidCode("insertion left an empty block");
  return OrderedSetPartition(std::move(blocks));
}

bool is_alpha_nonskip(const IntWord& expo, const Composition& alpha) {
  const int n = alpha.total();
  const int k = alpha.k();
  if (static_cast<int>(expo.size()) != n)
    throw LengthMismatch("exponent vector length != |alpha|");
  for (int i = 0; i < alpha.length(); ++i) {
    const int off = alpha.offset(i);
    for (int j = 1; j <= alpha.part(i); ++j)
      if (expo[off + j - 1] >= k - j + 1) return false;
  }
  for (const auto& S : subsets_of_size(n, n - k + 1)) {
    IntWord g = reverse_skip(S, n);
    bool divides = true;
    for (int i = 0; i < n; ++i)
      if (g[i] > expo[i]) {
        divides = false;
        break;
      }
    if (divides) return false;
  }
  return true;
}

std::vector<IntWord> enumerate_nonskip(const Composition& alpha) {
  const int n = alpha.total();
  const int k = alpha.k();
  std::vector<int> cap(n);  // exponent of each variable is < cap
  for (int i = 0; i < alpha.length(); ++i) {
    const int off = alpha.offset(i);
    for (int j = 1; j <= alpha.part(i); ++j) cap[off + j - 1] = k - j + 1;
  }
  std::vector<IntWord> out;
  IntWord e(n, 0);
  while (true) {
    if (is_alpha_nonskip(e, alpha)) out.push_back(e);
    int i = n - 1;
    while (i >= 0 && e[i] == cap[i] - 1) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  return out;
}

IntWord unusual_act(int i, const IntWord& w) {
  const int n = static_cast<int>(w.size());
  if (i < 1 || i >= n) throw IndexOutOfRange("transposition index");
  IntWord out = w;
  const int a = w[i - 1], b = w[i];
  if (a > b) {
    out[i - 1] = b;
    out[i] = a - 1;
  } else {
    out[i - 1] = b + 1;
    out[i] = a;
  }
  return out;
}

IntWord unusual_act_word(const std::vector<int>& word, const IntWord& w) {
  IntWord out = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    out = unusual_act(*it, out);
  return out;
}

IntWord orbit_decreasing_rep(const IntWord& w) {
  IntWord cur = w;
  const int n = static_cast<int>(cur.size());
  // Fixing the leftmost weak ascent strictly raises the word in left-lex
  // order; values stay within the finite orbit, so this terminates.
  while (true) {
    int i = -1;
    for (int p = 1; p < n; ++p)
      if (cur[p - 1] <= cur[p]) {
        i = p;
        break;
      }
    if (i < 0) return cur;
    cur = unusual_act(i, cur);
  }
}

PaddedWord::PaddedWord(std::vector<int> letters) : letters_(std::move(letters)) {
  if (letters_.empty() || letters_[0] <= 0)
    throw InvalidArgument("padded word must start with a positive letter");
  int maxv = 0;
  for (int x : letters_) {
    if (x < 0) throw InvalidArgument("padded word letters are >= 0");
    maxv = std::max(maxv, x);
  }
  n_ = maxv;
  std::vector<int> count(n_ + 1, 0);
  for (int x : letters_) ++count[x];
  for (int v = 1; v <= n_; ++v)
    if (count[v] != 1)
      throw InvalidArgument("each positive letter must appear exactly once");
}

IntWord inversion_encode(const PaddedWord& b) {
  const auto& w = b.letters();
  const int m = b.length();
  IntWord code(b.n(), 0);
  for (int j = 1; j <= b.n(); ++j) {
    int pos = -1;
    for (int p = 0; p < m; ++p)
      if (w[p] == j) pos = p;
    int cnt = 0;
    for (int p = pos + 1; p < m; ++p)
      if (w[p] < j) ++cnt;
    code[j - 1] = cnt;
  }
  return code;
}

PaddedWord inversion_decode(const IntWord& code) {
  const int n = static_cast<int>(code.size());
  if (n == 0) throw InvalidArgument("empty inversion code");
  int zeros = 0;
  for (int j = 1; j <= n; ++j) {
    if (code[j - 1] < 0) throw InvalidArgument("negative inversion code entry");
    zeros = std::max(zeros, code[j - 1] - j + 1);
  }
  // Insert letters smallest to largest; every symbol already placed counts,
  // so letter j goes with exactly code[j-1] symbols after it.
  std::vector<int> w(zeros, 0);
  for (int j = 1; j <= n; ++j) {
    const int len = static_cast<int>(w.size());
    const int after = code[j - 1];
    if (after > len) throw InvalidArgument("unrealizable inversion code");
    w.insert(w.begin() + (len - after), j);
  }
  return PaddedWord(std::move(w));
}

bool alpha_decreasing(const IntWord& w, const Composition& alpha) {
  if (static_cast<int>(w.size()) != alpha.total())
    throw LengthMismatch("word length != |alpha|");
  for (auto [lo, hi] : batches(alpha).ranges)
    for (int p = lo + 1; p < hi; ++p)
      if (w[p - 1] <= w[p]) return false;
  return true;
}

bool is_alpha_compatible(const OrderedSetPartition& sigma, const Composition& alpha) {
  if (!in_op_family(sigma, alpha))
    throw InvalidArgument("sigma not in OP_{alpha,k}");
  const int k = alpha.k();
  std::vector<std::vector<int>> stage(k);  // sigma^(i-1)
  for (auto [lo, hi] : batches(alpha).ranges) {
    std::vector<int> label = coinversion_labels(stage);
    int prev = k;  // labels are < k
    for (int pos = lo; pos < hi; ++pos) {
      const int letter = pos + 1;
      const int lab = label[sigma.block_of(letter)];
      if (lab >= prev) return false;
      prev = lab;
    }
    for (int pos = lo; pos < hi; ++pos)
      stage[sigma.block_of(pos + 1)].push_back(pos + 1);
  }
  return true;
}

std::vector<int> parabolic_generators(const Composition& alpha) {
  std::vector<int> gens;
  for (auto [lo, hi] : batches(alpha).ranges)
    for (int p = lo + 1; p < hi; ++p) gens.push_back(p);  // 1-based s_p with p = lo+1..hi-1
  return gens;
}

long long binomial(int n, int d) {
  if (d < 0 || d > n) return 0;
  long long r = 1;
  for (int i = 1; i <= d; ++i) r = r * (n - d + i) / i;
  return r;
}

long long stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0 || k > n) return 0;
  std::vector<std::vector<long long>> s(n + 1, std::vector<long long>(k + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= std::min(i, k); ++j)
      s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
  return s[n][k];
}

}  // namespace spanconfig
