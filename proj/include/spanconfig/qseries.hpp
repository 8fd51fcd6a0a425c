#pragma once

// Gaussian binomial and q-multinomial coefficients by the product formula.
// Kept free of any cell-enumeration code so the paving tests have an
// independent oracle.

#include <vector>

#include "spanconfig/errors.hpp"

namespace spanconfig {

using QPoly = std::vector<long long>;  // coefficient of q^i at index i

inline QPoly qpoly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Exact division; throws if the remainder is nonzero.
inline QPoly qpoly_div(const QPoly& a, const QPoly& b) {
  QPoly rem = a, out;
  while (!rem.empty() && rem.back() == 0) rem.pop_back();
  QPoly d = b;
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw InvalidArgument("division by zero polynomial");
  if (rem.empty()) return {0};
  if (rem.size() < d.size()) throw InvalidArgument("inexact q-polynomial division");
  out.assign(rem.size() - d.size() + 1, 0);
  for (int i = static_cast<int>(out.size()) - 1; i >= 0; --i) {
    if (rem[i + d.size() - 1] % d.back() != 0)
      throw InvalidArgument("inexact q-polynomial division");
    const long long c = rem[i + d.size() - 1] / d.back();
    out[i] = c;
    for (size_t j = 0; j < d.size(); ++j) rem[i + j] -= c * d[j];
  }
  for (long long c : rem)
    if (c != 0) throw InvalidArgument("inexact q-polynomial division");
  return out;
}

// [m]_q = 1 + q + ... + q^{m-1}
inline QPoly q_integer(int m) {
  if (m < 0) throw InvalidArgument("negative q-integer");
  if (m == 0) return {0};
  return QPoly(m, 1);
}

// [n choose d]_q = prod_{i=1}^{d} [n-d+i]_q / [i]_q
inline QPoly q_binomial(int n, int d) {
  if (d < 0 || d > n) return {0};
  QPoly out{1};
  for (int i = 1; i <= d; ++i) out = qpoly_mul(out, q_integer(n - d + i));
  for (int i = 1; i <= d; ++i) out = qpoly_div(out, q_integer(i));
  return out;
}

// [k; a_1,...,a_r]_q with a_1 + ... + a_r = k, as iterated q-binomials.
inline QPoly q_multinomial(int k, const std::vector<int>& parts) {
  int total = 0;
  for (int p : parts) total += p;
  if (total != k) throw InvalidArgument("q-multinomial parts must sum to k");
  QPoly out{1};
  int rest = k;
  for (int p : parts) {
    out = qpoly_mul(out, q_binomial(rest, p));
    rest -= p;
  }
  return out;
}

inline void qpoly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace spanconfig
