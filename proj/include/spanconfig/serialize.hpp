#pragma once

// Canonical text encodings and JSON wire forms. These are the CLI formats:
//   composition            "2,1,2@k=3"
//   set sequence           "13|3|23|1@k=3"
//   ordered set partition  "25|3|14"
//   word                   "(2,0,3,1,0,0,2,1,0)"
// Set and block elements are one character each: 1-9 then A-G for 10..16.

#include <string>

#include <json.hpp>

#include "spanconfig/cohomology.hpp"
#include "spanconfig/combinat.hpp"
#include "spanconfig/linalg.hpp"
#include "spanconfig/polyalg.hpp"

namespace spanconfig {

std::string to_text(const Composition& alpha);
Composition parse_composition(const std::string& s);

std::string to_text(const SetSequence& s);
SetSequence parse_set_sequence(const std::string& s);

std::string to_text(const OrderedSetPartition& sigma);
OrderedSetPartition parse_osp(const std::string& s);

std::string to_text(const IntWord& w);
IntWord parse_word(const std::string& s);

// Integer coefficient sequence in q, e.g. "1 + q + 2*q^2".
std::string qpoly_text(const std::vector<long long>& coeffs);

nlohmann::ordered_json matrix_to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const nlohmann::json& j);

// {"alpha": [...], "k": k, "matrix": [[...]]}
nlohmann::ordered_json block_matrix_to_json(const BlockMatrix& m);
BlockMatrix block_matrix_from_json(const nlohmann::json& j);

// [{"coeff": "p/q", "exps": [...]}, ...] in descending neglex order.
nlohmann::ordered_json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json mixed_result_to_json(const MixedReductionResult& r);

nlohmann::ordered_json paving_to_json(const PavingReport& report);
// CSV with columns seq, covering, dim, codim, stars_pm, stars_u.
std::string paving_to_csv(const PavingReport& report);

std::string matrix_to_csv(const RatMatrix& m);
RatMatrix matrix_from_csv(const std::string& text);

}  // namespace spanconfig
