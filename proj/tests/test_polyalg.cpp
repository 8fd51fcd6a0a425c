#include <doctest.h>

#include "spanconfig/polyalg.hpp"
#include "spanconfig/verify.hpp"
#include "testutil.hpp"

using namespace spanconfig;
namespace tu = spanconfig::testutil;

namespace {

IntWord xw(std::initializer_list<int> l) { return IntWord(l); }

std::vector<int> all_vars(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return v;
}

// Monomials of total degree <= d in n variables.
std::vector<IntWord> monomials_up_to(int n, int d) {
  std::vector<IntWord> out;
  for (const IntWord& w : tu::all_words(n, d))
    if (monomial_degree(w) <= d) out.push_back(w);
  return out;
}

// Alternative Demazure evaluation fixing the rightmost ascent, for the
// path-independence check.
Poly demazure_rightmost(const IntWord& gamma) {
  IntWord g = gamma;
  const int n = static_cast<int>(g.size());
  std::vector<int> ops;
  while (true) {
    int asc = -1;
    for (int p = n - 1; p >= 1; --p)
      if (g[p - 1] < g[p]) {
        asc = p;
        break;
      }
    if (asc < 0) break;
    ops.push_back(asc);
    std::swap(g[asc - 1], g[asc]);
  }
  Poly kappa = Poly::monomial(g);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it)
    kappa = isobaric(*it, kappa);
  return kappa;
}

}  // namespace

TEST_CASE("neglex examples") {
  CHECK(neglex_less(xw({0, 0}), xw({1, 0})));   // 1 < x1
  CHECK(neglex_less(xw({1, 0}), xw({0, 1})));   // x1 < x2
  CHECK(neglex_less(xw({3, 0}), xw({0, 1})));   // x1^3 < x2
  CHECK_THROWS_AS(neglex_less(xw({1}), xw({1, 0})), LengthMismatch);
}

TEST_CASE("neglex order laws") {
  const auto words = tu::all_words(4, 3);
  for (const IntWord& a : words)
    for (const IntWord& b : words) {
      const bool lt = neglex_less(a, b), gt = neglex_less(b, a);
      CHECK(((a == b) ? (!lt && !gt) : (lt != gt)));  // total
      CHECK(!neglex_less(a, IntWord(4, 0)));          // 1 is minimal
    }
  // Multiplicativity on a subsample of third factors.
  for (const IntWord& a : words)
    for (const IntWord& b : words) {
      if (!neglex_less(a, b)) continue;
      for (size_t s = 0; s < words.size(); s += 37)
        CHECK(neglex_less(monomial_mul(a, words[s]), monomial_mul(b, words[s])));
    }
}

TEST_CASE("elementary and complete homogeneous") {
  Poly e1 = elementary(1, {1, 2}, 2);
  Poly want(2);
  want.add_term({1, 0}, 1);
  want.add_term({0, 1}, 1);
  CHECK(e1 == want);
  CHECK(complete_homog(2, {1}, 2) == Poly::monomial(xw({2, 0})));
  CHECK(elementary(3, {1, 2}, 2).is_zero());  // d > #vars
  CHECK(elementary(0, {1, 2}, 2) == Poly::constant(2, 1));
  CHECK(complete_homog(0, {1, 2}, 2) == Poly::constant(2, 1));
  CHECK(elementary(-1, {1, 2}, 2).is_zero());
  // Newton-style alternating identity: sum_j (-1)^j e_{d-j} h_j = 0, d >= 1.
  for (int n = 1; n <= 3; ++n)
    for (int d = 1; d <= 4; ++d) {
      Poly acc(n);
      for (int j = 0; j <= d; ++j) {
        const Poly term =
            elementary(d - j, all_vars(n), n) * complete_homog(j, all_vars(n), n);
        acc += (j % 2 == 0) ? term : -term;
      }
      CHECK(acc.is_zero());
    }
}

TEST_CASE("ideal generators") {
  // alpha = (1^n): the batch generators are the variable powers x_i^k.
  const IdealSpec spec = ideal_generators(Composition({1, 1, 1}, 2));
  CHECK(spec.generators.size() == 2 + 3);  // k + sum alpha_i
  int pure_powers = 0;
  for (const Poly& g : spec.generators) {
    bool is_power = false;
    for (int i = 0; i < 3; ++i) {
      IntWord e(3, 0);
      e[i] = 2;
      if (g == Poly::monomial(e)) is_power = true;
    }
    if (is_power) ++pure_powers;
  }
  CHECK(pure_powers == 3);
  // alpha = (k): the coinvariant-algebra case has dimension k!.
  for (int k = 1; k <= 3; ++k) {
    const GroebnerBasis gb =
        buchberger(ideal_generators(Composition({k}, k)).generators);
    long long factorial = 1;
    for (int i = 2; i <= k; ++i) factorial *= i;
    CHECK(static_cast<long long>(standard_monomials(gb).size()) == factorial);
  }
}

TEST_CASE("divided difference and isobaric operators") {
  CHECK(divided_difference(1, Poly::monomial(xw({1, 0}))) == Poly::constant(2, 1));
  Poly sym = elementary(2, {1, 2, 3}, 3);
  CHECK(divided_difference(1, sym).is_zero());
  CHECK(divided_difference(2, sym).is_zero());
  Poly want(2);
  want.add_term({1, 0}, 1);
  want.add_term({0, 1}, 1);
  CHECK(isobaric(1, Poly::monomial(xw({1, 0}))) == want);
}

TEST_CASE("0-Hecke relations") {
  const int n = 4;
  for (const IntWord& e : monomials_up_to(n, 3)) {
    const Poly m = Poly::monomial(e);
    for (int i = 1; i < n; ++i) {
      const Poly pi = isobaric(i, m);
      CHECK(isobaric(i, pi) == pi);  // idempotent
      for (int j = i + 2; j < n; ++j)
        CHECK(isobaric(i, isobaric(j, m)) == isobaric(j, isobaric(i, m)));
      if (i + 1 < n)
        CHECK(isobaric(i, isobaric(i + 1, isobaric(i, m))) ==
              isobaric(i + 1, isobaric(i, isobaric(i + 1, m))));
    }
  }
}

TEST_CASE("Demazure characters") {
  CHECK(demazure(xw({3, 1, 0})) == Poly::monomial(xw({3, 1, 0})));
  Poly want(2);
  want.add_term({1, 0}, 1);
  want.add_term({0, 1}, 1);
  CHECK(demazure(xw({0, 1})) == want);
  // Path independence and the leading-term property over the grid; the
  // leading-term property is enforced inside demazure() itself.
  for (int n = 2; n <= 4; ++n)
    for (const IntWord& gamma : tu::all_words(n, 3))
      CHECK(demazure(gamma) == demazure_rightmost(gamma));
}

TEST_CASE("buchberger basics") {
  // Principal ideal.
  const GroebnerBasis gb = buchberger({Poly::monomial(xw({1, 0}))});
  CHECK(gb.basis.size() == 1);
  Poly p(2);
  p.add_term({1, 1}, 3);
  p.add_term({2, 0}, Rat(-7, 2));
  CHECK(normal_form(p, gb).is_zero());
  // J_{(1,1),2}: standard monomials {1, x1}.
  const GroebnerBasis gb2 =
      buchberger(ideal_generators(Composition({1, 1}, 2)).generators);
  CHECK(standard_monomials(gb2) ==
        std::vector<IntWord>{xw({0, 0}), xw({1, 0})});
}

TEST_CASE("groebner correctness properties") {
  Rng rng(11);
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& parts : tu::compositions_of(n, k)) {
        const Composition alpha(parts, k);
        const IdealSpec spec = ideal_generators(alpha);
        const GroebnerBasis gb = buchberger(spec.generators);
        // Every S-pair of the output reduces to zero.
        for (size_t i = 0; i < gb.basis.size(); ++i)
          for (size_t j = i + 1; j < gb.basis.size(); ++j) {
            const Poly &f = gb.basis[i], &g = gb.basis[j];
            const IntWord lcm =
                monomial_lcm(f.leading_monomial(), g.leading_monomial());
            const Poly s =
                f.shifted(monomial_div(lcm, f.leading_monomial()), Rat(1)) -
                g.shifted(monomial_div(lcm, g.leading_monomial()), Rat(1));
            CHECK(normal_form(s, gb).is_zero());
          }
        // normal_form is idempotent and kills random ideal elements.
        for (const Poly& g : spec.generators) {
          Poly random_mult(n);
          for (int t = 0; t < 3; ++t) {
            IntWord e(n, 0);
            for (int v = 0; v < n; ++v) e[v] = rng.range(0, 2);
            random_mult.add_term(e, rng.range(-4, 4));
          }
          if (random_mult.is_zero()) continue;
          CHECK(normal_form(g * random_mult, gb).is_zero());
        }
        for (const IntWord& m : standard_monomials(gb))
          CHECK(normal_form(Poly::monomial(m), gb) == Poly::monomial(m));
      }
}

TEST_CASE("standard monomials are the nonskip monomials") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& parts : tu::compositions_of(n, k)) {
        const Composition alpha(parts, k);
        auto std_mons =
            standard_monomials(buchberger(ideal_generators(alpha).generators));
        auto nonskip = enumerate_nonskip(alpha);
        std::sort(std_mons.begin(), std_mons.end());
        std::sort(nonskip.begin(), nonskip.end());
        CHECK(std_mons == nonskip);
      }
}

TEST_CASE("claimed groebner basis") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& parts : tu::compositions_of(n, k)) {
        const Composition alpha(parts, k);
        CHECK(verify_claimed_groebner(alpha));
        // Leading monomials are the reverse skip monomials and the batch
        // prefix powers.
        std::set<IntWord> leads;
        for (const Poly& f : claimed_groebner(alpha))
          leads.insert(f.leading_monomial());
        std::set<IntWord> want;
        for (const auto& S : subsets_of_size(n, n - k + 1))
          want.insert(reverse_skip(S, n));
        for (int i = 0; i < alpha.length(); ++i)
          for (int j = 1; j <= alpha.part(i); ++j) {
            IntWord e(n, 0);
            e[alpha.offset(i) + j - 1] = k - j + 1;
            want.insert(e);
          }
        CHECK(leads == want);
      }
}

TEST_CASE("nonskip monomials avoid all claimed leading terms") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& parts : tu::compositions_of(n, k)) {
        const Composition alpha(parts, k);
        for (const IntWord& m : enumerate_nonskip(alpha)) {
          for (const auto& S : subsets_of_size(n, n - k + 1))
            CHECK(!monomial_divides(reverse_skip(S, n), m));
          for (int i = 0; i < alpha.length(); ++i)
            for (int j = 1; j <= alpha.part(i); ++j) {
              IntWord e(n, 0);
              e[alpha.offset(i) + j - 1] = k - j + 1;
              CHECK(!monomial_divides(e, m));
            }
        }
      }
}

TEST_CASE("point locus") {
  const PointLocus locus = point_locus(Composition({2, 1, 2}, 3));
  CHECK(locus.points.size() == enumerate_op(Composition({2, 1, 2}, 3)).size());
  for (const auto& z : locus.points) {
    std::set<Rat> values(z.begin(), z.end());
    CHECK(values == std::set<Rat>{Rat(1), Rat(2), Rat(3)});  // all of eta
  }
  for (int k = 1; k <= 4; ++k)
    for (int n = 1; n <= 6; ++n)
      for (const auto& parts : tu::compositions_of(n, k)) {
        const Composition alpha(parts, k);
        const PointLocus l = point_locus(alpha);
        CHECK(l.points.size() == enumerate_op(alpha).size());
        for (const auto& z : l.points) {
          // Every eta value appears, and batch coordinates are distinct.
          CHECK(std::set<Rat>(z.begin(), z.end()) ==
                std::set<Rat>(l.eta.begin(), l.eta.end()));
          for (auto [lo, hi] : batches(alpha).ranges) {
            std::set<Rat> batch_vals(z.begin() + lo, z.begin() + hi);
            CHECK(static_cast<int>(batch_vals.size()) == hi - lo);
          }
        }
      }
}

TEST_CASE("vanishing identities at the locus") {
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& parts : tu::compositions_of(n, k))
        CHECK(vanishing_checks(Composition(parts, k)));
}

TEST_CASE("hilbert series") {
  CHECK(hilbert_series({xw({0, 0}), xw({1, 0})}) ==
        std::vector<long long>{1, 1});
  CHECK(invariant_hilbert(Composition({1, 1}, 2)) ==
        std::vector<long long>{1, 1});
  for (int k = 1; k <= 3; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& parts : tu::compositions_of(n, k)) {
        const Composition alpha(parts, k);
        const auto full = hilbert_series(
            standard_monomials(buchberger(ideal_generators(alpha).generators)));
        long long full_total = 0;
        for (long long c : full) full_total += c;
        CHECK(full_total == static_cast<long long>(enumerate_op(alpha).size()));
        const auto inv = invariant_hilbert(alpha);
        long long inv_total = 0;
        for (long long c : inv) inv_total += c;
        CHECK(inv_total * alpha.factorial_product() == full_total);
      }
}
