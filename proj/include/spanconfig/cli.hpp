#pragma once

// Command-line surface. Subcommands: enumerate-op, code, iota, nonskip,
// demazure, groebner, mixed-reduce, paving, character, verify.
// Exit codes: 0 success, 1 a verification returned false, 2 input error.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace spanconfig {

struct JobSpec {
  std::string command;
  std::optional<std::vector<int>> alpha;
  std::optional<int> k;
  std::string input;   // file path for matrix input
  std::string emit;    // subcommand-specific selector
  // text | json | csv; empty picks the subcommand default (json for
  // mixed-reduce, text elsewhere).
  std::string format;
  uint64_t seed = 0xC0FFEE;
  int max_n = 8;       // safety bound on |alpha|; SPANCONFIG_MAX_N overrides
  // Subcommand-specific payloads.
  std::string sigma;   // ordered set partition text
  std::string code;    // word text
  std::string gamma;   // word text
  std::string pi;      // one-line permutation, "213" or "2,1,3"
  bool paper_examples = false;
  int factorizations = 0;
};

int run(const JobSpec& job, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and dispatches to run().
int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err);

}  // namespace spanconfig
