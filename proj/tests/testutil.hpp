#pragma once

// Shared helpers and independent oracles for the test suites. Oracles here
// must not share code paths with the library routines they check.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "spanconfig/combinat.hpp"
#include "spanconfig/linalg.hpp"
#include "spanconfig/verify.hpp"

namespace spanconfig::testutil {

// Cofactor-expansion determinant, independent of the Gaussian routine.
inline Rat cofactor_det(const RatMatrix& m) {
  const int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Rat acc(0);
  for (int j = 0; j < n; ++j) {
    if (m.at(0, j) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    const Rat term = m.at(0, j) * cofactor_det(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

// Stirling numbers of the second kind by brute force over block assignments.
inline long long brute_stirling2(int n, int k) {
  if (n == 0 && k == 0) return 1;
  if (n <= 0 || k <= 0) return 0;
  long long count = 0;
  std::vector<int> assign(n, 0);
  while (true) {
    std::set<int> used(assign.begin(), assign.end());
    if (static_cast<int>(used.size()) == k) {
      // Count each unordered partition once: block labels must appear in
      // first-use order 0,1,2,...
      std::vector<int> first_use;
      for (int a : assign)
        if (std::find(first_use.begin(), first_use.end(), a) == first_use.end())
          first_use.push_back(a);
      bool canonical = true;
      for (size_t i = 0; i < first_use.size(); ++i)
        if (first_use[i] != static_cast<int>(i)) canonical = false;
      if (canonical) ++count;
    }
    int i = n - 1;
    while (i >= 0 && assign[i] == k - 1) assign[i--] = 0;
    if (i < 0) break;
    ++assign[i];
  }
  return count;
}

// Covering 0,1-matrix count by brute force over column-subset tuples.
inline long long brute_covering_matrices(const Composition& alpha) {
  const int k = alpha.k();
  std::vector<std::vector<uint32_t>> choices;
  for (int t = 0; t < alpha.length(); ++t) {
    std::vector<uint32_t> masks;
    for (uint32_t m = 1; m < (1u << k); ++m) {
      int bits = 0;
      for (int b = 0; b < k; ++b)
        if (m & (1u << b)) ++bits;
      if (bits == alpha.part(t)) masks.push_back(m);
    }
    choices.push_back(std::move(masks));
  }
  long long count = 0;
  std::vector<size_t> idx(alpha.length(), 0);
  while (true) {
    uint32_t un = 0;
    for (int t = 0; t < alpha.length(); ++t) un |= choices[t][idx[t]];
    if (un == (1u << k) - 1) ++count;
    int t = alpha.length() - 1;
    while (t >= 0 && ++idx[t] == choices[t].size()) idx[t--] = 0;
    if (t < 0) break;
  }
  return count;
}

// All compositions with parts in [1,k] and total n, lexicographic.
inline std::vector<std::vector<int>> compositions_of(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = 1; p <= std::min(k, rest); ++p) {
      cur.push_back(p);
      self(self, rest - p);
      cur.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

// All words of the given length with entries in [0, max_entry].
inline std::vector<IntWord> all_words(int length, int max_entry) {
  std::vector<IntWord> out;
  IntWord w(length, 0);
  while (true) {
    out.push_back(w);
    int i = length - 1;
    while (i >= 0 && w[i] == max_entry) w[i--] = 0;
    if (i < 0) break;
    ++w[i];
  }
  return out;
}

// Orbit of a word under the nonstandard action, by closure under all
// generators.
inline std::set<IntWord> unusual_orbit(const IntWord& w) {
  const int n = static_cast<int>(w.size());
  std::set<IntWord> seen{w};
  std::vector<IntWord> frontier{w};
  while (!frontier.empty()) {
    std::vector<IntWord> next;
    for (const IntWord& v : frontier)
      for (int i = 1; i < n; ++i) {
        IntWord u = unusual_act(i, v);
        if (seen.insert(u).second) next.push_back(u);
      }
    frontier = std::move(next);
  }
  return seen;
}

// Reduced word (list of adjacent transposition indices) for a permutation in
// one-line notation, by bubble sort.
inline std::vector<int> reduced_word(std::vector<int> pi) {
  std::vector<int> word;
  const int n = static_cast<int>(pi.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i + 1 < n; ++i)
      if (pi[i] > pi[i + 1]) {
        std::swap(pi[i], pi[i + 1]);
        word.push_back(i + 1);
        changed = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

// Letter-permutation action of a parabolic element on an ordered set
// partition: relabel letter x to perm[x-1].
inline OrderedSetPartition relabel(const OrderedSetPartition& sigma,
                                   const std::vector<int>& perm) {
  std::vector<std::vector<int>> blocks(sigma.num_blocks());
  for (int j = 0; j < sigma.num_blocks(); ++j)
    for (int x : sigma.block(j)) blocks[j].push_back(perm[x - 1]);
  return OrderedSetPartition(std::move(blocks));
}

// All elements of the parabolic subgroup S_alpha as one-line permutations of
// [n], by taking products of per-batch permutations.
inline std::vector<std::vector<int>> parabolic_elements(const Composition& alpha) {
  std::vector<std::vector<int>> result{std::vector<int>(alpha.total())};
  std::iota(result[0].begin(), result[0].end(), 1);
  for (auto [lo, hi] : batches(alpha).ranges) {
    std::vector<int> batch_letters;
    for (int p = lo; p < hi; ++p) batch_letters.push_back(p + 1);
    std::vector<std::vector<int>> perms;
    std::vector<int> arr = batch_letters;
    do {
      perms.push_back(arr);
    } while (std::next_permutation(arr.begin(), arr.end()));
    std::vector<std::vector<int>> next;
    for (const auto& base : result)
      for (const auto& p : perms) {
        std::vector<int> combined = base;
        for (size_t i = 0; i < p.size(); ++i) combined[batch_letters[i] - 1] = p[i];
        next.push_back(std::move(combined));
      }
    result = std::move(next);
  }
  return result;
}

}  // namespace spanconfig::testutil
