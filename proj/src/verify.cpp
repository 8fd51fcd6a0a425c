#include "spanconfig/verify.hpp"

#include <algorithm>

#include "spanconfig/cohomology.hpp"
#include "spanconfig/polyalg.hpp"
#include "spanconfig/serialize.hpp"

namespace spanconfig {

uint64_t Rng::next() {
  state_ += 0x9e3779b97f4a7c15ull;
  uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

int Rng::range(int lo, int hi) {
  return lo + static_cast<int>(next() % static_cast<uint64_t>(hi - lo + 1));
}

RatMatrix random_full_rank_matrix(Rng& rng, int k, int d) {
  while (true) {
    RatMatrix m(k, d);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = rng.range(-9, 9);
    if (rank(m) == d) return m;
  }
}

BlockMatrix random_block_matrix(Rng& rng, const Composition& alpha) {
  while (true) {
    RatMatrix m(alpha.k(), alpha.total());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rng.range(-9, 9);
    try {
      return BlockMatrix(m, alpha);
    } catch (const BlockRankDeficient&) {
      continue;
    }
  }
}

namespace {

RatMatrix mat(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rat>> r;
  for (const auto& row : rows) {
    std::vector<Rat> out;
    for (long v : row) out.emplace_back(v);
    r.push_back(std::move(out));
  }
  return RatMatrix::from_rows(r);
}

// Fills a {0,1,*} template (rows of characters) with consecutive values from
// `stars`.
RatMatrix fill_template(const std::vector<std::string>& rows,
                        const std::vector<long>& stars) {
  RatMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  size_t next = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const char c = rows[i][j];
      if (c == '0')
        m.at(i, j) = 0;
      else if (c == '1')
        m.at(i, j) = 1;
      else
        m.at(i, j) = stars.at(next++);
    }
  return m;
}

bool pattern_equals(const PatternMatrix& pm, const std::vector<std::string>& rows) {
  if (static_cast<int>(rows.size()) != pm.k) return false;
  for (int i = 0; i < pm.k; ++i) {
    if (static_cast<int>(rows[i].size()) != pm.alpha.total()) return false;
    for (int j = 0; j < pm.alpha.total(); ++j) {
      const PatternCell want = rows[i][j] == '0'   ? PatternCell::Zero
                               : rows[i][j] == '1' ? PatternCell::One
                                                   : PatternCell::Star;
      if (pm.cells[i][j] != want) return false;
    }
  }
  return true;
}

// One echelon table entry: the star-filled template must be a fixed point of
// pi_cref with the stated pivot set, and must be recovered after an
// invertible column scramble.
bool check_cref_shape(const std::vector<std::string>& shape,
                      const std::vector<int>& pivots_sorted,
                      const std::vector<int>& pi) {
  const RatMatrix a = fill_template(shape, {2, 3, 5, 7, -4, 6, -8, 9});
  PiCrefResult res = pi_cref(a, pi);
  std::vector<int> piv = res.pivots;
  std::sort(piv.begin(), piv.end());
  if (piv != pivots_sorted) return false;
  if (!(res.b == a)) return false;
  for (int i = 0; i < res.g.rows(); ++i)
    for (int j = 0; j < res.g.cols(); ++j)
      if (res.g.at(i, j) != Rat(i == j ? 1 : 0)) return false;
  const RatMatrix scramble = mat({{3, 5}, {1, 2}});
  PiCrefResult res2 = pi_cref(a * scramble, pi);
  return res2.b == a;
}

}  // namespace

std::vector<CheckResult> paper_example_checks() {
  std::vector<CheckResult> out;
  auto check = [&](const std::string& name, bool pass) {
    out.push_back(CheckResult{name, pass});
  };

  // --- compositions, batches, set sequences ------------------------------
  {
    const Composition a({2, 1, 2}, 3);
    const auto b = batches(a).ranges;
    check("batches of 2,1,2", b == std::vector<std::pair<int, int>>{
                                       {0, 2}, {2, 3}, {3, 5}});
  }
  {
    const Composition a({2, 1, 2}, 3);
    check("25|3|14 lies in OP(2,1,2;3)", in_op_family(parse_osp("25|3|14"), a));
    check("45|2|13 is excluded from OP(2,1,2;3)",
          !in_op_family(parse_osp("45|2|13"), a));
  }
  check("13|3|23|1 covers [3]", covers(parse_set_sequence("13|3|23|1@k=3")));
  check("23|2|23|3 does not cover [3]",
        !covers(parse_set_sequence("23|2|23|3@k=3")));
  {
    const auto m = set_sequence_matrix(parse_set_sequence("13|3|23|1@k=3"));
    const std::vector<std::vector<int>> want{
        {1, 0, 0, 1}, {0, 0, 1, 0}, {1, 1, 1, 0}};
    check("0,1-matrix of 13|3|23|1", m == want);
    check("matrix round-trip of 13|3|23|1",
          set_sequence_from_matrix(m) == parse_set_sequence("13|3|23|1@k=3"));
  }

  // --- coinversion codes and insertion -----------------------------------
  check("code(34|1|2) = (1,0,0,0)",
        coinversion_code(parse_osp("34|1|2")) == IntWord({1, 0, 0, 0}));
  {
    const OrderedSetPartition sigma = parse_osp("469|18|57|23");
    const IntWord code{2, 0, 3, 1, 0, 0, 2, 1, 0};
    check("code(469|18|57|23)", coinversion_code(sigma) == code);
    check("iota(2,0,3,1,0,0,2,1,0)", iota_insert(code, 4) == sigma);
  }

  // --- skip sequences ------------------------------------------------------
  check("skip sequence of {2,3,5,8} in [8]",
        skip_sequence({2, 3, 5, 8}, 8) == IntWord({0, 2, 2, 0, 3, 0, 0, 5}));
  check("reverse skip of {2,3,5,8}",
        reverse_skip({2, 3, 5, 8}, 8) == IntWord({5, 0, 0, 3, 0, 2, 2, 0}));
  check("x1 is (2,2)-nonskip for k=3",
        is_alpha_nonskip({1, 0, 0, 0}, Composition({2, 2}, 3)));

  // --- the nonstandard action and inversion codes -------------------------
  check("s1.(3,2,2,5)", unusual_act(1, {3, 2, 2, 5}) == IntWord({2, 2, 2, 5}));
  check("s2.(3,2,2,5)", unusual_act(2, {3, 2, 2, 5}) == IntWord({3, 3, 2, 5}));
  check("s3.(3,2,2,5)", unusual_act(3, {3, 2, 2, 5}) == IntWord({3, 2, 6, 2}));
  check("inversion code of 1402300",
        inversion_encode(PaddedWord({1, 4, 0, 2, 3, 0, 0})) ==
            IntWord({3, 2, 2, 5}));
  check("inversion code of 1302400",
        inversion_encode(PaddedWord({1, 3, 0, 2, 4, 0, 0})) ==
            IntWord({3, 2, 4, 2}));
  check("decode recovers 1402300",
        inversion_decode({3, 2, 2, 5}) == PaddedWord({1, 4, 0, 2, 3, 0, 0}));

  // --- alpha-decreasing / compatibility ------------------------------------
  check("(5,3,0,0,1) is (3,1,1)-decreasing",
        alpha_decreasing({5, 3, 0, 0, 1}, Composition({3, 1, 1}, 6)));
  check("(5,3,0,0,1) is not (1,3,1)-decreasing",
        !alpha_decreasing({5, 3, 0, 0, 1}, Composition({1, 3, 1}, 6)));
  check("469|18|57|23 is (2,3,1,3)-compatible",
        is_alpha_compatible(parse_osp("469|18|57|23"), Composition({2, 3, 1, 3}, 4)));

  // --- Schubert cell tables -------------------------------------------------
  {
    const std::vector<int> id{1, 2, 3, 4};
    bool ok = check_cref_shape({"10", "01", "**", "**"}, {1, 2}, id) &&
              check_cref_shape({"10", "*0", "01", "**"}, {1, 3}, id) &&
              check_cref_shape({"10", "*0", "*0", "01"}, {1, 4}, id) &&
              check_cref_shape({"00", "10", "01", "**"}, {2, 3}, id) &&
              check_cref_shape({"00", "10", "*0", "01"}, {2, 4}, id) &&
              check_cref_shape({"00", "00", "10", "01"}, {3, 4}, id);
    check("classical Schubert cell table (pi = 1234)", ok);
  }
  {
    const std::vector<int> pi{2, 4, 1, 3};
    bool ok = check_cref_shape({"**", "10", "**", "01"}, {2, 4}, pi) &&
              check_cref_shape({"01", "10", "**", "*0"}, {1, 2}, pi) &&
              check_cref_shape({"*0", "10", "01", "*0"}, {2, 3}, pi) &&
              check_cref_shape({"01", "00", "**", "10"}, {1, 4}, pi) &&
              check_cref_shape({"*0", "00", "01", "10"}, {3, 4}, pi) &&
              check_cref_shape({"10", "00", "01", "00"}, {1, 3}, pi);
    check("pi-CREF table (pi = 2413)", ok);
  }

  // --- permutation sequences and unipotent patterns ------------------------
  {
    const SetSequence s = parse_set_sequence("24|34|3|14@k=4");
    const std::vector<std::vector<int>> want{
        {1, 2, 3, 4}, {1, 3, 2, 4}, {1, 2, 3, 4}, {1, 2, 3, 4}};
    check("permutation sequence of (24,34,3,14)", permutation_sequence(s) == want);
    check("U(24,34,3,14) has one star at (3,2)",
          unipotent_pattern(s).positions() ==
              std::set<std::pair<int, int>>{{3, 2}});
  }
  {
    const SetSequence s = parse_set_sequence("14|12|1|12@k=4");
    const std::vector<std::vector<int>> want{
        {1, 2, 3, 4}, {2, 3, 1, 4}, {3, 1, 2, 4}, {3, 1, 2, 4}};
    check("permutation sequence of (14,12,1,12)", permutation_sequence(s) == want);
    check("U(14,12,1,12) stars",
          unipotent_pattern(s).positions() ==
              std::set<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}});
  }

  // --- pattern matrices -----------------------------------------------------
  check("PM(24,34,3,13)",
        pattern_equals(pattern_matrix(parse_set_sequence("24|34|3|13@k=4")),
                       {"0000010", "10*00*0", "0010101", "0101***"}));
  check("PM(14,12,1,12)",
        pattern_equals(pattern_matrix(parse_set_sequence("14|12|1|12@k=4")),
                       {"1001110", "0010*01", "0000000", "01*****"}));

  // --- mixed reduction worked traces ---------------------------------------
  {
    const RatMatrix a = mat({{0, 0, 1, 0, 4, 1, 1},
                             {1, 0, -1, 0, -2, 2, 2},
                             {-1, 0, 2, 0, 8, -1, 0},
                             {0, 1, 0, 1, 4, -1, -1}});
    const Composition alpha({2, 2, 1, 2}, 4);
    const MixedReductionResult r = mixed_reduce(BlockMatrix(a, alpha));
    check("example 1: output sequence", to_text(r.seq) == "24|14|3|13@k=4");
    RatMatrix u = RatMatrix::identity(4);
    u.at(2, 0) = 1;
    u.at(2, 1) = -1;
    check("example 1: unipotent factor", r.u == u);
    const RatMatrix b = mat({{0, 0, 1, 0, 2, 1, 0},
                             {1, 0, -1, 0, -1, 2, 0},
                             {0, 0, 0, 0, 1, 0, 1},
                             {0, 1, 0, 1, 2, -1, 0}});
    check("example 1: reduced matrix", r.b == b);
    check("example 1: u*b*g recovers the input", r.u * r.b * r.g == a);
    check("example 1: sequence covers [4]", r.covers_k);
  }
  {
    const RatMatrix a = mat({{2, 0, 0, 1, -1, 1, 1},
                             {2, 0, 1, 1, 0, 3, 3},
                             {-2, 0, 1, -1, 2, 1, 1},
                             {1, 1, 2, 2, -1, -1, 0}});
    const Composition alpha({2, 2, 1, 2}, 4);
    const MixedReductionResult r = mixed_reduce(BlockMatrix(a, alpha));
    check("example 2: output sequence", to_text(r.seq) == "14|12|1|14@k=4");
    RatMatrix u = RatMatrix::identity(4);
    u.at(1, 0) = 1;
    u.at(2, 0) = -1;
    u.at(2, 1) = 1;
    check("example 2: unipotent factor", r.u == u);
    check("example 2: u*b*g recovers the input", r.u * r.b * r.g == a);
    check("example 2: sequence fails to cover", !r.covers_k);
    check("example 2: u conforms to U(seq)",
          unipotent_pattern(r.seq).conforms(r.u));
  }

  // --- jump-compatible cells -------------------------------------------------
  {
    const Composition alpha({2, 2, 2}, 4);
    const std::vector<uint32_t> jump{0b0101, 0b1101, 0b1101};
    std::vector<std::pair<std::string, int>> found;
    for (const SetSequence& s : enumerate_set_sequences(alpha)) {
      bool match = true;
      for (int t = 1; t <= 3; ++t)
        if (s.initial_union(t) != jump[t - 1]) match = false;
      if (match)
        found.emplace_back(to_text(s), pattern_matrix(s).star_count());
    }
    std::sort(found.begin(), found.end());
    const std::vector<std::pair<std::string, int>> want{
        {"13|14|13@k=4", 4}, {"13|14|14@k=4", 3}, {"13|14|34@k=4", 2},
        {"13|34|13@k=4", 3}, {"13|34|14@k=4", 2}, {"13|34|34@k=4", 1}};
    check("six jump-compatible cells for (13,134,134)", found == want);
  }

  // --- quotient ring spot checks ---------------------------------------------
  check("h_2(x1) = x1^2",
        complete_homog(2, {1}, 2) == Poly::monomial(IntWord{2, 0}));
  check("kappa of a decreasing weight is a monomial",
        demazure({3, 1, 0}) == Poly::monomial(IntWord{3, 1, 0}));
  {
    Poly want(2);
    want.add_term({1, 0}, 1);
    want.add_term({0, 1}, 1);
    check("kappa_(0,1) = x1 + x2", demazure({0, 1}) == want);
  }
  {
    const Composition alpha({2, 2}, 3);
    auto std_mons =
        standard_monomials(buchberger(ideal_generators(alpha).generators));
    auto nonskip = enumerate_nonskip(alpha);
    std::sort(std_mons.begin(), std_mons.end());
    std::sort(nonskip.begin(), nonskip.end());
    check("standard monomials of (2,2;3) are the nonskip monomials",
          std_mons == nonskip);
  }
  {
    const PointLocus locus = point_locus(Composition({2, 1, 2}, 3));
    const std::vector<Rat> want{3, 1, 1, 2, 3};
    bool found = false;
    for (size_t i = 0; i < locus.points.size(); ++i)
      if (locus.points[i] == want) found = true;
    check("point of 23|4|15 is (eta3,eta1,eta1,eta2,eta3)", found);
  }

  // --- rank formulas -----------------------------------------------------------
  check("rank of the (1,1,1;2) space is 2!*Stir(3,2) = 6",
        total_rank(Composition({1, 1, 1}, 2)) == 6 &&
            2 * stirling2(3, 2) == 6);
  check("covering 0,1-matrix count for (2,1,2,1;3) is 69",
        count_covering_matrices(Composition({2, 1, 2, 1}, 3)) == 69);
  {
    const PavingReport rep = enumerate_cells(Composition({1, 1}, 2));
    check("paving of (1,1;2): poincare_X = 1 + q",
          rep.poincare_x == std::vector<long long>({1, 1}) &&
              rep.poincare_gr == std::vector<long long>({1, 2, 1}));
  }

  return out;
}

bool factorization_identity_check(uint64_t seed, int count) {
  Rng rng(seed);
  for (int trial = 0; trial < count; ++trial) {
    const int k = rng.range(1, 5);
    const int r = rng.range(1, 4);
    std::vector<int> parts;
    int n = 0;
    for (int t = 0; t < r; ++t) {
      const int p = rng.range(1, k);
      parts.push_back(p);
      n += p;
    }
    if (n > 8) {
      --trial;  // redraw without consuming the trial budget
      continue;
    }
    const Composition alpha(parts, k);
    const BlockMatrix a = random_block_matrix(rng, alpha);
    const MixedReductionResult res = mixed_reduce(a);
    if (!(res.u * res.b * res.g == a.matrix())) return false;
    if (!unipotent_pattern(res.seq).conforms(res.u)) return false;
    if (!fits_pattern(res.b, res.seq)) return false;
    if (res.covers_k != (rank(a.matrix()) == k)) return false;
  }
  return true;
}

}  // namespace spanconfig
