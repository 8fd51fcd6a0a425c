#pragma once

// Sparse multivariate polynomials over the rationals under the neglex term
// order, symmetric polynomial generators, Demazure characters, Buchberger
// Groebner bases and the orbit-harmonics point locus.

#include <map>
#include <vector>

#include "spanconfig/combinat.hpp"
#include "spanconfig/rational.hpp"

namespace spanconfig {

// neglex: x^a < x^b iff a_i < b_i at some i with a_{i+1..n} = b_{i+1..n},
// i.e. lexicographic from the right on exponents.
bool neglex_less(const IntWord& a, const IntWord& b);

struct NeglexLess {
  bool operator()(const IntWord& a, const IntWord& b) const;
};

bool monomial_divides(const IntWord& a, const IntWord& b);  // x^a | x^b
IntWord monomial_mul(const IntWord& a, const IntWord& b);
IntWord monomial_div(const IntWord& a, const IntWord& b);  // exact
IntWord monomial_lcm(const IntWord& a, const IntWord& b);
int monomial_degree(const IntWord& a);

class Poly {
 public:
  explicit Poly(int nvars);
  static Poly monomial(const IntWord& e, const Rat& c = Rat(1));
  static Poly constant(int nvars, const Rat& c);

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<IntWord, Rat, NeglexLess>& terms() const { return terms_; }

  const IntWord& leading_monomial() const;  // throws on zero
  const Rat& leading_coeff() const;
  int degree() const;

  Rat coeff(const IntWord& e) const;
  void add_term(const IntWord& e, const Rat& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rat& c) const;
  bool operator==(const Poly& o) const;

  // Multiplies by the monomial c * x^e.
  Poly shifted(const IntWord& e, const Rat& c) const;
  // Swaps the variables x_i and x_{i+1} (1-based i).
  Poly swap_vars(int i) const;
  Rat evaluate(const std::vector<Rat>& point) const;
  bool has_integer_coeffs() const;

 private:
  int n_;
  std::map<IntWord, Rat, NeglexLess> terms_;
};

// e_d / h_d in the 1-based variables `vars` of a polynomial ring with n
// variables. d < 0 gives 0; d = 0 gives 1.
Poly elementary(int d, const std::vector<int>& vars, int n);
Poly complete_homog(int d, const std::vector<int>& vars, int n);

struct IdealSpec {
  Composition alpha;
  std::vector<Poly> generators;
};

// Generators of I/J_{alpha,k}: e_n..e_{n-k+1} in all variables (degrees
// clamped at 0, so 1 is a generator when n < k) plus h_{k-alpha_i+1}..h_k in
// each batch.
IdealSpec ideal_generators(const Composition& alpha);

Poly divided_difference(int i, const Poly& f);
Poly isobaric(int i, const Poly& f);

// Demazure character kappa_gamma, built from the weakly decreasing sort of
// gamma by isobaric operators (leftmost-ascent sorting path).
Poly demazure(const IntWord& gamma);

struct GroebnerBasis {
  int nvars;
  std::vector<Poly> basis;  // interreduced, monic, sorted by leading monomial
};

GroebnerBasis buchberger(const std::vector<Poly>& gens);
Poly normal_form(const Poly& f, const GroebnerBasis& g);

// Monomials outside the initial ideal, ascending neglex. Throws Error when
// the quotient is not finite dimensional.
std::vector<IntWord> standard_monomials(const GroebnerBasis& g);

// The claimed Groebner basis: kappa_{gamma(S)*} over |S| = n-k+1 plus the
// prefix polynomials h_{k-j+1}(first j variables of batch i).
std::vector<Poly> claimed_groebner(const Composition& alpha);

// Checks the claimed basis against buchberger(ideal_generators): every
// element reduces to zero, coefficients are integers with leading
// coefficient 1, and both initial ideals cut out the same standard monomials.
bool verify_claimed_groebner(const Composition& alpha);

struct PointLocus {
  Composition alpha;
  std::vector<Rat> eta;                  // eta_j = j
  std::vector<std::vector<Rat>> points;  // one per ordered set partition
};

PointLocus point_locus(const Composition& alpha);

// Evaluates the inhomogeneous coefficient identities
//   sum_j (-1)^j e_{d-j}(x) h_j(eta) = 0        (n-k+1 <= d <= n)
//   sum_j (-1)^j h_{d-j}(batch i) e_j(eta) = 0  (k-alpha_i < d <= k)
// at every point of the locus.
bool vanishing_checks(const Composition& alpha);

// Counts monomials by total degree.
std::vector<long long> hilbert_series(const std::vector<IntWord>& monomials);

// Dimension, per degree, of the S_alpha-fixed subspace of the quotient:
// adjacent-transposition generators act by variable swap followed by normal
// form; the joint fixed space is computed by exact null-space dimensions.
std::vector<long long> invariant_hilbert(const Composition& alpha);

}  // namespace spanconfig
