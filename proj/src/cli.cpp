#include "spanconfig/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "spanconfig/cohomology.hpp"
#include "spanconfig/qseries.hpp"
#include "spanconfig/serialize.hpp"
#include "spanconfig/verify.hpp"

namespace spanconfig {

namespace {

using nlohmann::ordered_json;

Composition job_alpha(const JobSpec& job) {
  if (!job.alpha || !job.k)
    throw InvalidArgument("this command needs --alpha and --k");
  Composition alpha(*job.alpha, *job.k);
  if (alpha.total() > job.max_n)
    throw BoundExceeded("|alpha| = " + std::to_string(alpha.total()) +
                        " exceeds the bound " + std::to_string(job.max_n) +
                        " (raise --max-n or SPANCONFIG_MAX_N)");
  return alpha;
}

std::vector<int> parse_permutation(const std::string& s) {
  std::vector<int> out;
  if (s.find(',') != std::string::npos) {
    std::istringstream in(s);
    std::string piece;
    while (std::getline(in, piece, ',')) out.push_back(std::stoi(piece));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') throw ParseError("bad permutation: " + s);
      out.push_back(c - '0');
    }
  }
  return out;
}

std::string poly_text(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool neg = c < 0;
    const Rat abs = neg ? Rat(-c) : c;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff = format_rat(abs);
    std::string term;
    if (mono.empty())
      term = coeff;
    else if (coeff == "1")
      term = mono;
    else
      term = coeff + "*" + mono;
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

int run_enumerate_op(const JobSpec& job, std::ostream& out) {
  const Composition alpha = job_alpha(job);
  const auto ops = enumerate_op(alpha);
  if (job.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& sigma : ops) j.push_back(to_text(sigma));
    out << j.dump(2) << "\n";
  } else {
    for (const auto& sigma : ops) out << to_text(sigma) << "\n";
    if (job.format == "text") out << "count: " << ops.size() << "\n";
  }
  return 0;
}

int run_code(const JobSpec& job, std::ostream& out) {
  if (job.sigma.empty()) throw InvalidArgument("code needs --sigma");
  const OrderedSetPartition sigma = parse_osp(job.sigma);
  if (job.k && *job.k != sigma.num_blocks())
    throw InvalidArgument("--k disagrees with the number of blocks");
  out << to_text(coinversion_code(sigma)) << "\n";
  return 0;
}

int run_iota(const JobSpec& job, std::ostream& out) {
  if (job.code.empty() || !job.k)
    throw InvalidArgument("iota needs --code and --k");
  out << to_text(iota_insert(parse_word(job.code), *job.k)) << "\n";
  return 0;
}

int run_nonskip(const JobSpec& job, std::ostream& out) {
  const Composition alpha = job_alpha(job);
  const auto mons = enumerate_nonskip(alpha);
  if (job.emit == "count") {
    out << mons.size() << "\n";
  } else if (job.format == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& m : mons) j.push_back(m);
    out << j.dump(2) << "\n";
  } else {
    for (const auto& m : mons) out << to_text(m) << "\n";
  }
  return 0;
}

int run_demazure(const JobSpec& job, std::ostream& out) {
  if (job.gamma.empty()) throw InvalidArgument("demazure needs --gamma");
  const Poly kappa = demazure(parse_word(job.gamma));
  if (job.format == "json")
    out << poly_to_json(kappa).dump(2) << "\n";
  else
    out << poly_text(kappa) << "\n";
  return 0;
}

int run_groebner(const JobSpec& job, std::ostream& out) {
  const Composition alpha = job_alpha(job);
  const GroebnerBasis gb = buchberger(ideal_generators(alpha).generators);
  const std::string emit = job.emit.empty() ? "basis" : job.emit;
  if (emit == "basis") {
    if (job.format == "json") {
      ordered_json j = ordered_json::array();
      for (const Poly& g : gb.basis) j.push_back(poly_to_json(g));
      out << j.dump(2) << "\n";
    } else {
      for (const Poly& g : gb.basis) out << poly_text(g) << "\n";
    }
  } else if (emit == "standard-monomials") {
    const auto mons = standard_monomials(gb);
    if (job.format == "json") {
      ordered_json j = ordered_json::array();
      for (const auto& m : mons) j.push_back(m);
      out << j.dump(2) << "\n";
    } else {
      for (const auto& m : mons) out << to_text(m) << "\n";
    }
  } else if (emit == "hilbert") {
    out << qpoly_text(hilbert_series(standard_monomials(gb))) << "\n";
  } else if (emit == "invariant-hilbert") {
    out << qpoly_text(invariant_hilbert(alpha)) << "\n";
  } else {
    throw InvalidArgument("groebner --emit must be basis, standard-monomials, "
                          "hilbert or invariant-hilbert");
  }
  return 0;
}

int run_mixed_reduce(const JobSpec& job, std::ostream& out) {
  if (job.input.empty()) throw InvalidArgument("mixed-reduce needs --input");
  std::ifstream in(job.input);
  if (!in) throw InvalidArgument("cannot open " + job.input);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  std::optional<BlockMatrix> bm;
  if (job.input.size() >= 4 && job.input.substr(job.input.size() - 4) == ".csv") {
    if (!job.alpha || !job.k)
      throw InvalidArgument("CSV input needs --alpha and --k");
    bm.emplace(matrix_from_csv(text), Composition(*job.alpha, *job.k));
  } else {
    const auto j = nlohmann::json::parse(text);
    if (j.is_object()) {
      bm.emplace(block_matrix_from_json(j));
      if (job.alpha && bm->alpha().parts() != *job.alpha)
        throw InvalidArgument("--alpha disagrees with the input file");
      if (job.k && bm->alpha().k() != *job.k)
        throw InvalidArgument("--k disagrees with the input file");
    } else {
      if (!job.alpha || !job.k)
        throw InvalidArgument("bare matrix input needs --alpha and --k");
      bm.emplace(matrix_from_json(j), Composition(*job.alpha, *job.k));
    }
  }
  if (bm->alpha().total() > job.max_n)
    throw BoundExceeded("input exceeds the --max-n bound");

  const MixedReductionResult r = mixed_reduce(*bm);
  if (job.format == "text")
    out << to_text(r.seq) << "\n";
  else
    out << mixed_result_to_json(r).dump(2) << "\n";
  return 0;
}

int run_paving(const JobSpec& job, std::ostream& out) {
  const Composition alpha = job_alpha(job);
  const PavingReport report = enumerate_cells(alpha);
  const std::string emit = job.emit.empty() ? "poincare" : job.emit;
  if (emit == "cells") {
    if (job.format == "json") {
      out << paving_to_json(report).dump(2) << "\n";
    } else {
      for (const Cell& c : report.cells)
        out << to_text(c.seq) << (c.covering ? " covering" : " non-covering")
            << " dim=" << c.dim() << "\n";
    }
  } else if (emit == "poincare") {
    if (job.format == "json") {
      ordered_json j;
      j["poincare_gr"] = report.poincare_gr;
      j["poincare_x"] = report.poincare_x;
      out << j.dump(2) << "\n";
    } else {
      out << qpoly_text(report.poincare_x) << "\n";
    }
  } else if (emit == "betti") {
    // q tracks complex codimension, so H^{2c} has rank poincare_x[c].
    if (job.format == "json") {
      ordered_json j = ordered_json::array();
      for (size_t c = 0; c < report.poincare_x.size(); ++c) {
        ordered_json entry;
        entry["degree"] = 2 * c;
        entry["rank"] = report.poincare_x[c];
        j.push_back(entry);
      }
      out << j.dump(2) << "\n";
    } else {
      for (size_t c = 0; c < report.poincare_x.size(); ++c)
        out << "H^" << 2 * c << ": " << report.poincare_x[c] << "\n";
    }
  } else if (emit == "csv") {
    out << paving_to_csv(report);
  } else {
    throw InvalidArgument("paving --emit must be cells, poincare, betti or csv");
  }
  return 0;
}

int run_character(const JobSpec& job, std::ostream& out) {
  const Composition alpha = job_alpha(job);
  if (job.pi.empty()) throw InvalidArgument("character needs --pi");
  out << sr_fixed_count(alpha, parse_permutation(job.pi)) << "\n";
  return 0;
}

int run_verify(const JobSpec& job, std::ostream& out) {
  bool all_pass = true;
  if (job.paper_examples) {
    for (const CheckResult& c : paper_example_checks()) {
      out << (c.pass ? "[ok]   " : "[FAIL] ") << c.name << "\n";
      all_pass = all_pass && c.pass;
    }
  }
  if (job.factorizations > 0) {
    const bool ok = factorization_identity_check(job.seed, job.factorizations);
    out << (ok ? "[ok]   " : "[FAIL] ") << "factorization identity on "
        << job.factorizations << " seeded inputs (seed "
        << job.seed << ")\n";
    all_pass = all_pass && ok;
  }
  if (!job.paper_examples && job.factorizations == 0)
    throw InvalidArgument("verify needs --paper-examples or --factorizations N");
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const JobSpec& job_in, std::ostream& out, std::ostream& err) {
  JobSpec job = job_in;
  if (job.format.empty())
    job.format = job.command == "mixed-reduce" ? "json" : "text";
  try {
    if (job.command == "enumerate-op") return run_enumerate_op(job, out);
    if (job.command == "code") return run_code(job, out);
    if (job.command == "iota") return run_iota(job, out);
    if (job.command == "nonskip") return run_nonskip(job, out);
    if (job.command == "demazure") return run_demazure(job, out);
    if (job.command == "groebner") return run_groebner(job, out);
    if (job.command == "mixed-reduce") return run_mixed_reduce(job, out);
    if (job.command == "paving") return run_paving(job, out);
    if (job.command == "character") return run_character(job, out);
    if (job.command == "verify") return run_verify(job, out);
    err << "unknown command: " << job.command << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cli_main(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"exact combinatorics and cohomology of spanning subspace "
               "configurations"};
  app.require_subcommand(1);

  JobSpec job;
  if (const char* env = std::getenv("SPANCONFIG_MAX_N")) {
    try {
      job.max_n = std::stoi(env);
    } catch (...) {
      err << "error: bad SPANCONFIG_MAX_N\n";
      return 2;
    }
  }

  std::string alpha_text;
  auto add_common = [&](CLI::App* sub, bool needs_alpha) {
    if (needs_alpha) {
      sub->add_option("--alpha", alpha_text, "composition, e.g. 2,1,2");
      sub->add_option("--k", [&job](const CLI::results_t& v) {
        try {
          job.k = std::stoi(v[0]);
          return true;
        } catch (...) {
          return false;
        }
      }, "number of blocks / ambient dimension");
    }
    sub->add_option("--format", job.format, "text | json | csv");
    sub->add_option("--seed", job.seed, "seed for randomized checks");
    sub->add_option("--max-n", job.max_n, "safety bound on |alpha|");
  };

  auto* c_enum = app.add_subcommand("enumerate-op", "list OP_{alpha,k}");
  add_common(c_enum, true);
  auto* c_code = app.add_subcommand("code", "coinversion code of a partition");
  add_common(c_code, true);
  c_code->add_option("--sigma", job.sigma, "ordered set partition, e.g. 25|3|14");
  auto* c_iota = app.add_subcommand("iota", "insertion inverse of the code map");
  add_common(c_iota, true);
  c_iota->add_option("--code", job.code, "word, e.g. (2,0,3,1,0,0,2,1,0)");
  auto* c_nonskip = app.add_subcommand("nonskip", "alpha-nonskip monomials");
  add_common(c_nonskip, true);
  c_nonskip->add_option("--emit", job.emit, "list | count");
  auto* c_dem = app.add_subcommand("demazure", "Demazure character of a weight");
  add_common(c_dem, false);
  c_dem->add_option("--gamma", job.gamma, "weight, e.g. (0,1,2)");
  auto* c_gb = app.add_subcommand("groebner", "Groebner data of the quotient ring");
  add_common(c_gb, true);
  c_gb->add_option("--emit", job.emit,
                   "basis | standard-monomials | hilbert | invariant-hilbert");
  auto* c_mr = app.add_subcommand("mixed-reduce", "factor a block matrix");
  add_common(c_mr, true);
  c_mr->add_option("--input", job.input, "matrix file (.json or .csv)");
  auto* c_pav = app.add_subcommand("paving", "affine paving cells and series");
  add_common(c_pav, true);
  c_pav->add_option("--emit", job.emit, "cells | poincare | betti | csv");
  auto* c_char = app.add_subcommand("character", "permutation character value");
  add_common(c_char, true);
  c_char->add_option("--pi", job.pi, "permutation of [r], e.g. 213");
  auto* c_ver = app.add_subcommand("verify", "replay verification suites");
  add_common(c_ver, false);
  c_ver->add_flag("--paper-examples", job.paper_examples,
                  "replay the worked-example suite");
  c_ver->add_option("--factorizations", job.factorizations,
                    "run N seeded random factorization checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help goes to stdout with success.
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  job.command = app.get_subcommands().front()->get_name();
  if (!alpha_text.empty()) {
    std::vector<int> parts;
    std::istringstream in(alpha_text);
    std::string piece;
    try {
      while (std::getline(in, piece, ',')) parts.push_back(std::stoi(piece));
    } catch (...) {
      err << "error: bad --alpha\n";
      return 2;
    }
    job.alpha = parts;
  }
  return run(job, out, err);
}

}  // namespace spanconfig
