#include "spanconfig/polyalg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <tuple>

#include "spanconfig/linalg.hpp"

namespace spanconfig {

bool neglex_less(const IntWord& a, const IntWord& b) {
  if (a.size() != b.size()) throw LengthMismatch("neglex on unequal lengths");
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool NeglexLess::operator()(const IntWord& a, const IntWord& b) const {
  return neglex_less(a, b);
}

bool monomial_divides(const IntWord& a, const IntWord& b) {
  if (a.size() != b.size()) throw LengthMismatch("divisibility on unequal lengths");
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

IntWord monomial_mul(const IntWord& a, const IntWord& b) {
  IntWord out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

IntWord monomial_div(const IntWord& a, const IntWord& b) {
  IntWord out = a;
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] -= b[i];
    if (out[i] < 0) throw InvalidArgument("monomial quotient not exact");
  }
  return out;
}

IntWord monomial_lcm(const IntWord& a, const IntWord& b) {
  IntWord out = a;
  for (size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

int monomial_degree(const IntWord& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

Poly::Poly(int nvars) : n_(nvars) {
  if (nvars < 1) throw InvalidArgument("polynomial needs >= 1 variable");
}

Poly Poly::monomial(const IntWord& e, const Rat& c) {
  Poly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  p.add_term(IntWord(nvars, 0), c);
  return p;
}

const IntWord& Poly::leading_monomial() const {
  if (terms_.empty()) throw Error("leading monomial of zero");
  return terms_.rbegin()->first;
}

const Rat& Poly::leading_coeff() const {
  if (terms_.empty()) throw Error("leading coefficient of zero");
  return terms_.rbegin()->second;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, monomial_degree(e));
  return d;
}

Rat Poly::coeff(const IntWord& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const IntWord& e, const Rat& c) {
  if (static_cast<int>(e.size()) != n_)
    throw LengthMismatch("term length != variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  if (n_ != o.n_) throw LengthMismatch("mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (n_ != o.n_) throw LengthMismatch("mixed variable counts");
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly p = *this;
  p += o;
  return p;
}

Poly Poly::operator-(const Poly& o) const {
  Poly p = *this;
  p -= o;
  return p;
}

Poly Poly::operator-() const {
  Poly p(n_);
  for (const auto& [e, c] : terms_) p.add_term(e, -c);
  return p;
}

Poly Poly::operator*(const Poly& o) const {
  if (n_ != o.n_) throw LengthMismatch("mixed variable counts");
  Poly p(n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) p.add_term(monomial_mul(e1, e2), c1 * c2);
  return p;
}

Poly Poly::operator*(const Rat& c) const {
  Poly p(n_);
  if (c == 0) return p;
  for (const auto& [e, c0] : terms_) p.add_term(e, c0 * c);
  return p;
}

bool Poly::operator==(const Poly& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

Poly Poly::shifted(const IntWord& e, const Rat& c) const {
  Poly p(n_);
  if (c == 0) return p;
  for (const auto& [e0, c0] : terms_) p.add_term(monomial_mul(e0, e), c0 * c);
  return p;
}

Poly Poly::swap_vars(int i) const {
  if (i < 1 || i >= n_) throw IndexOutOfRange("variable swap index");
  Poly p(n_);
  for (const auto& [e, c] : terms_) {
    IntWord e2 = e;
    std::swap(e2[i - 1], e2[i]);
    p.add_term(e2, c);
  }
  return p;
}

Rat Poly::evaluate(const std::vector<Rat>& point) const {
  if (static_cast<int>(point.size()) != n_)
    throw LengthMismatch("evaluation point length");
  Rat total(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < n_; ++i)
      for (int p = 0; p < e[i]; ++p) term *= point[i];
    total += term;
  }
  return total;
}

bool Poly::has_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (c.get_den() != 1) return false;
  return true;
}

Poly elementary(int d, const std::vector<int>& vars, int n) {
  Poly p(n);
  if (d < 0) return p;
  if (d == 0) return Poly::constant(n, Rat(1));
  const int v = static_cast<int>(vars.size());
  if (d > v) return p;
  std::vector<int> pick(d);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    IntWord e(n, 0);
    for (int idx : pick) {
      const int var = vars[idx];
      if (var < 1 || var > n) throw IndexOutOfRange("variable index");
      e[var - 1] += 1;
    }
    p.add_term(e, Rat(1));
    int i = d - 1;
    while (i >= 0 && pick[i] == v - (d - i)) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
  }
  return p;
}

Poly complete_homog(int d, const std::vector<int>& vars, int n) {
  Poly p(n);
  if (d < 0) return p;
  if (d == 0) return Poly::constant(n, Rat(1));
  const int v = static_cast<int>(vars.size());
  if (v == 0) return p;
  // Weakly increasing index multisets of size d.
  std::vector<int> pick(d, 0);
  while (true) {
    IntWord e(n, 0);
    for (int idx : pick) {
      const int var = vars[idx];
      if (var < 1 || var > n) throw IndexOutOfRange("variable index");
      e[var - 1] += 1;
    }
    p.add_term(e, Rat(1));
    int i = d - 1;
    while (i >= 0 && pick[i] == v - 1) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < d; ++j) pick[j] = pick[i];
  }
  return p;
}

IdealSpec ideal_generators(const Composition& alpha) {
  const int n = alpha.total();
  const int k = alpha.k();
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  std::vector<Poly> gens;
  for (int d = n; d >= n - k + 1; --d) {
    if (d < 0) continue;  // e_d = 0 contributes nothing
    gens.push_back(elementary(d, all, n));
  }
  for (int i = 0; i < alpha.length(); ++i) {
    std::vector<int> batch;
    for (int j = 0; j < alpha.part(i); ++j) batch.push_back(alpha.offset(i) + j + 1);
    for (int d = k - alpha.part(i) + 1; d <= k; ++d)
      gens.push_back(complete_homog(d, batch, n));
  }
  return IdealSpec{alpha, std::move(gens)};
}

Poly divided_difference(int i, const Poly& f) {
  const int n = f.nvars();
  if (i < 1 || i >= n) throw IndexOutOfRange("divided difference index");
  // Per term: (x_i^p x_{i+1}^q - x_i^q x_{i+1}^p)/(x_i - x_{i+1}) expands to
  // a signed sum over exponent pairs between q and p.
  Poly out(n);
  for (const auto& [e, c] : f.terms()) {
    const int p = e[i - 1], q = e[i];
    if (p == q) continue;
    const int lo = std::min(p, q), hi = std::max(p, q);
    const Rat sign = (p > q) ? c : -c;
    for (int s = lo; s < hi; ++s) {
      IntWord e2 = e;
      e2[i - 1] = s;
      e2[i] = hi + lo - 1 - s;
      out.add_term(e2, sign);
    }
  }
  return out;
}

Poly isobaric(int i, const Poly& f) {
  IntWord xi(f.nvars(), 0);
  xi[i - 1] = 1;
  return divided_difference(i, f.shifted(xi, Rat(1)));
}

Poly demazure(const IntWord& gamma) {
  const int n = static_cast<int>(gamma.size());
  if (n == 0) throw InvalidArgument("empty weight");
  for (int x : gamma)
    if (x < 0) throw InvalidArgument("weight entries must be >= 0");
  IntWord g = gamma;
  std::vector<int> ops;  // outermost first
  while (true) {
    int asc = -1;
    for (int p = 1; p < n; ++p)
      if (g[p - 1] < g[p]) {
        asc = p;
        break;
      }
    if (asc < 0) break;
    ops.push_back(asc);
    std::swap(g[asc - 1], g[asc]);
  }
  Poly kappa = Poly::monomial(g);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) kappa = isobaric(*it, kappa);
  if (!kappa.has_integer_coeffs())
    throw Error("demazure character has a non-integer coefficient");
  if (kappa.leading_monomial() != gamma || kappa.leading_coeff() != 1)
    throw Error("demazure character has the wrong leading term");
  return kappa;
}

namespace {

Poly make_monic(const Poly& f) {
  return f * (Rat(1) / f.leading_coeff());
}

// Fully reduces f against the list; remainder has no term divisible by any
// leading monomial.
Poly reduce_against(const Poly& f, const std::vector<Poly>& basis) {
  Poly rem(f.nvars());
  Poly cur = f;
  while (!cur.is_zero()) {
    const IntWord lead = cur.leading_monomial();
    const Rat lc = cur.leading_coeff();
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (monomial_divides(g.leading_monomial(), lead)) {
        const IntWord q = monomial_div(lead, g.leading_monomial());
        cur -= g.shifted(q, lc / g.leading_coeff());
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(lead, lc);
      cur.add_term(lead, -lc);
    }
  }
  return rem;
}

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens) {
  std::vector<Poly> basis;
  int n = 0;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    n = g.nvars();
    basis.push_back(make_monic(g));
  }
  if (basis.empty()) throw InvalidArgument("buchberger needs a nonzero generator");

  struct Pair {
    size_t i, j;
    IntWord lcm;
  };
  auto pair_before = [](const Pair& a, const Pair& b) {
    const int da = monomial_degree(a.lcm), db = monomial_degree(b.lcm);
    if (da != db) return da < db;
    if (a.lcm != b.lcm) return neglex_less(a.lcm, b.lcm);
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
  };
  std::deque<Pair> queue;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      const IntWord &li = basis[i].leading_monomial(), &lj = basis[j].leading_monomial();
      // Buchberger's first criterion: coprime leading monomials reduce to 0.
      if (monomial_mul(li, lj) == monomial_lcm(li, lj)) continue;
      queue.push_back(Pair{i, j, monomial_lcm(li, lj)});
    }
  };
  for (size_t j = 0; j < basis.size(); ++j) push_pairs_for(j);

  while (!queue.empty()) {
    auto it = std::min_element(queue.begin(), queue.end(), pair_before);
    Pair p = *it;
    queue.erase(it);
    const Poly &f = basis[p.i], &g = basis[p.j];
    const IntWord qf = monomial_div(p.lcm, f.leading_monomial());
    const IntWord qg = monomial_div(p.lcm, g.leading_monomial());
    Poly s = f.shifted(qf, Rat(1) / f.leading_coeff()) -
             g.shifted(qg, Rat(1) / g.leading_coeff());
    Poly r = reduce_against(s, basis);
    if (!r.is_zero()) {
      basis.push_back(make_monic(r));
      push_pairs_for(basis.size() - 1);
    }
  }

  // Interreduce: drop elements whose lead divides away, then fully reduce
  // tails so leading terms are pairwise non-divisible.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const IntWord &li = basis[i].leading_monomial(), &lj = basis[j].leading_monomial();
      if (monomial_divides(lj, li) && (lj != li || j < i)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back(basis[i]);
  }
  for (size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < reduced.size(); ++j)
      if (j != i) others.push_back(reduced[j]);
    reduced[i] = make_monic(reduce_against(reduced[i], others));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return neglex_less(a.leading_monomial(), b.leading_monomial());
  });
  return GroebnerBasis{n, std::move(reduced)};
}

Poly normal_form(const Poly& f, const GroebnerBasis& g) {
  if (f.nvars() != g.nvars) throw LengthMismatch("variable counts differ");
  return reduce_against(f, g.basis);
}

std::vector<IntWord> standard_monomials(const GroebnerBasis& g) {
  const int n = g.nvars;
  std::vector<int> cap(n, -1);  // exponent bound from pure-power leads
  std::vector<IntWord> leads;
  for (const Poly& b : g.basis) {
    const IntWord& lm = b.leading_monomial();
    leads.push_back(lm);
    int nz = -1;
    bool pure = true;
    for (int i = 0; i < n; ++i)
      if (lm[i] > 0) {
        if (nz >= 0) pure = false;
        nz = i;
      }
    if (nz < 0) return {};  // 1 is a leading monomial: unit ideal
    if (pure) cap[nz] = (cap[nz] < 0) ? lm[nz] : std::min(cap[nz], lm[nz]);
  }
  for (int i = 0; i < n; ++i)
    if (cap[i] < 0) throw Error("quotient is not finite dimensional");
  std::vector<IntWord> out;
  IntWord e(n, 0);
  while (true) {
    bool in_ideal = false;
    for (const IntWord& lm : leads)
      if (monomial_divides(lm, e)) {
        in_ideal = true;
        break;
      }
    if (!in_ideal) out.push_back(e);
    int i = n - 1;
    while (i >= 0 && e[i] == cap[i] - 1) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end(), neglex_less);
  return out;
}

std::vector<Poly> claimed_groebner(const Composition& alpha) {
  const int n = alpha.total();
  const int k = alpha.k();
  std::vector<Poly> out;
  for (const auto& S : subsets_of_size(n, n - k + 1))
    out.push_back(demazure(reverse_skip(S, n)));
  for (int i = 0; i < alpha.length(); ++i)
    for (int j = 1; j <= alpha.part(i); ++j) {
      std::vector<int> prefix;
      for (int t = 0; t < j; ++t) prefix.push_back(alpha.offset(i) + t + 1);
      out.push_back(complete_homog(k - j + 1, prefix, n));
    }
  return out;
}

bool verify_claimed_groebner(const Composition& alpha) {
  const GroebnerBasis gb = buchberger(ideal_generators(alpha).generators);
  const std::vector<Poly> claimed = claimed_groebner(alpha);
  for (const Poly& f : claimed) {
    if (!f.has_integer_coeffs() || f.leading_coeff() != 1) return false;
    if (!normal_form(f, gb).is_zero()) return false;
  }
  GroebnerBasis claimed_as_basis{alpha.total(), claimed};
  return standard_monomials(claimed_as_basis) == standard_monomials(gb);
}

PointLocus point_locus(const Composition& alpha) {
  PointLocus locus{alpha, {}, {}};
  for (int j = 1; j <= alpha.k(); ++j) locus.eta.emplace_back(j);
  for (const OrderedSetPartition& sigma : enumerate_op(alpha)) {
    std::vector<Rat> z(alpha.total());
    for (int i = 1; i <= alpha.total(); ++i)
      z[i - 1] = locus.eta[sigma.block_of(i)];
    locus.points.push_back(std::move(z));
  }
  return locus;
}

namespace {

// e_d and h_d evaluated at a list of rational values.
Rat eval_elementary(int d, const std::vector<Rat>& vals) {
  if (d < 0) return Rat(0);
  const int m = static_cast<int>(vals.size());
  if (d > m) return Rat(0);
  std::vector<Rat> e(d + 1, Rat(0));
  e[0] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = std::min(d, i + 1); j >= 1; --j) e[j] += vals[i] * e[j - 1];
  return e[d];
}

Rat eval_complete(int d, const std::vector<Rat>& vals) {
  if (d < 0) return Rat(0);
  if (d == 0) return Rat(1);
  const int m = static_cast<int>(vals.size());
  std::vector<Rat> h(d + 1, Rat(0));
  h[0] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 1; j <= d; ++j) h[j] += vals[i] * h[j - 1];
  return h[d];
}

}  // namespace

bool vanishing_checks(const Composition& alpha) {
  const PointLocus locus = point_locus(alpha);
  const int n = alpha.total();
  const int k = alpha.k();
  for (const auto& z : locus.points) {
    for (int d = std::max(0, n - k + 1); d <= n; ++d) {
      Rat acc(0);
      for (int j = 0; j <= d; ++j) {
        const Rat term = eval_elementary(d - j, z) * eval_complete(j, locus.eta);
        acc += (j % 2 == 0) ? term : -term;
      }
      if (acc != 0) return false;
    }
    for (int i = 0; i < alpha.length(); ++i) {
      std::vector<Rat> batch_vals;
      for (int j = 0; j < alpha.part(i); ++j)
        batch_vals.push_back(z[alpha.offset(i) + j]);
      for (int d = k - alpha.part(i) + 1; d <= k; ++d) {
        Rat acc(0);
        for (int j = 0; j <= k; ++j) {
          const Rat term = eval_complete(d - j, batch_vals) * eval_elementary(j, locus.eta);
          acc += (j % 2 == 0) ? term : -term;
        }
        if (acc != 0) return false;
      }
    }
  }
  return true;
}

std::vector<long long> hilbert_series(const std::vector<IntWord>& monomials) {
  std::vector<long long> out;
  for (const IntWord& m : monomials) {
    const int d = monomial_degree(m);
    if (d >= static_cast<int>(out.size())) out.resize(d + 1, 0);
    ++out[d];
  }
  return out;
}

std::vector<long long> invariant_hilbert(const Composition& alpha) {
  const GroebnerBasis gb = buchberger(ideal_generators(alpha).generators);
  const std::vector<IntWord> basis = standard_monomials(gb);
  const std::vector<int> gens = parabolic_generators(alpha);
  std::vector<long long> series = hilbert_series(basis);
  if (gens.empty() || basis.empty()) return series;

  const int maxdeg = static_cast<int>(series.size()) - 1;
  std::vector<long long> out(maxdeg + 1, 0);
  for (int d = 0; d <= maxdeg; ++d) {
    std::vector<IntWord> deg_basis;
    for (const IntWord& m : basis)
      if (monomial_degree(m) == d) deg_basis.push_back(m);
    const int dim = static_cast<int>(deg_basis.size());
    if (dim == 0) continue;
    std::map<IntWord, int, NeglexLess> index;
    for (int c = 0; c < dim; ++c) index[deg_basis[c]] = c;

    // Stack (M_p - Id) for every generator; fixed dimension = nullity.
    RatMatrix stacked(dim * static_cast<int>(gens.size()), dim);
    int row0 = 0;
    for (int p : gens) {
      for (int c = 0; c < dim; ++c) {
        const Poly image =
            normal_form(Poly::monomial(deg_basis[c]).swap_vars(p), gb);
        for (const auto& [e, coeff] : image.terms()) {
          auto it = index.find(e);
          if (it == index.end()) throw Error("normal form left the degree basis");
          stacked.at(row0 + it->second, c) += coeff;
        }
        stacked.at(row0 + c, c) -= 1;
      }
      row0 += dim;
    }
    out[d] = nullspace_dimension(stacked);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace spanconfig
