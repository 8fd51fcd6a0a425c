#pragma once

// Worked-example regression suite and seeded randomized identity checks,
// shared by the CLI `verify` subcommand and the test binaries.

#include <cstdint>
#include <string>
#include <vector>

#include "spanconfig/linalg.hpp"

namespace spanconfig {

// Deterministic cross-platform generator (splitmix64).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next();
  // Uniform in [lo, hi].
  int range(int lo, int hi);

 private:
  uint64_t state_;
};

// Random k x n block matrix with integer entries in [-9,9]; draws are
// rejected until every block has full column rank.
BlockMatrix random_block_matrix(Rng& rng, const Composition& alpha);
// Random full-column-rank k x d integer matrix.
RatMatrix random_full_rank_matrix(Rng& rng, int k, int d);

struct CheckResult {
  std::string name;
  bool pass;
};

// Replays the worked examples: combinatorial bijections, echelon-form
// tables, both mixed-reduction traces, pattern and unipotent displays,
// locus correspondences and the small rank formulas.
std::vector<CheckResult> paper_example_checks();

// u*b*g == a, pattern conformance and the rank dichotomy on `count` seeded
// random inputs with k <= 5, n <= 8.
bool factorization_identity_check(uint64_t seed, int count);

}  // namespace spanconfig
