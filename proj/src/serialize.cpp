#include "spanconfig/serialize.hpp"

#include <sstream>

namespace spanconfig {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

char element_char(int e) {
  if (e >= 1 && e <= 9) return static_cast<char>('0' + e);
  if (e >= 10 && e <= 35) return static_cast<char>('A' + e - 10);
  throw InvalidArgument("element out of the printable range [1,35]");
}

int element_value(char c) {
  if (c >= '1' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'Z') return c - 'A' + 10;
  if (c >= 'a' && c <= 'z') return c - 'a' + 10;
  throw ParseError(std::string("bad set element character: ") + c);
}

// Splits "body@k=K" and returns (body, K).
std::pair<std::string, int> split_k_suffix(const std::string& s) {
  const auto at = s.rfind("@k=");
  if (at == std::string::npos) throw ParseError("missing @k= suffix: " + s);
  const std::string body = s.substr(0, at);
  const std::string knum = s.substr(at + 3);
  if (knum.empty()) throw ParseError("missing k value: " + s);
  int k = 0;
  for (char c : knum) {
    if (c < '0' || c > '9') throw ParseError("bad k value: " + s);
    k = k * 10 + (c - '0');
  }
  return {body, k};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string to_text(const Composition& alpha) {
  std::string s;
  for (int i = 0; i < alpha.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(alpha.part(i));
  }
  return s + "@k=" + std::to_string(alpha.k());
}

Composition parse_composition(const std::string& s) {
  auto [body, k] = split_k_suffix(s);
  std::vector<int> parts;
  for (const std::string& piece : split(body, ',')) {
    if (piece.empty()) throw ParseError("empty composition part: " + s);
    int v = 0;
    for (char c : piece) {
      if (c < '0' || c > '9') throw ParseError("bad composition part: " + s);
      v = v * 10 + (c - '0');
    }
    parts.push_back(v);
  }
  return Composition(parts, k);
}

std::string to_text(const SetSequence& s) {
  std::string out;
  for (int t = 0; t < s.length(); ++t) {
    if (t) out += '|';
    for (int e : s.set(t)) out += element_char(e);
  }
  return out + "@k=" + std::to_string(s.k());
}

SetSequence parse_set_sequence(const std::string& s) {
  auto [body, k] = split_k_suffix(s);
  std::vector<std::vector<int>> sets;
  for (const std::string& piece : split(body, '|')) {
    if (piece.empty()) throw ParseError("empty set in sequence: " + s);
    std::vector<int> set;
    for (char c : piece) set.push_back(element_value(c));
    sets.push_back(std::move(set));
  }
  return SetSequence::from_sets(sets, k);
}

std::string to_text(const OrderedSetPartition& sigma) {
  std::string out;
  for (int j = 0; j < sigma.num_blocks(); ++j) {
    if (j) out += '|';
    for (int e : sigma.block(j)) out += element_char(e);
  }
  return out;
}

OrderedSetPartition parse_osp(const std::string& s) {
  std::vector<std::vector<int>> blocks;
  for (const std::string& piece : split(s, '|')) {
    if (piece.empty()) throw ParseError("empty block: " + s);
    std::vector<int> block;
    for (char c : piece) block.push_back(element_value(c));
    blocks.push_back(std::move(block));
  }
  return OrderedSetPartition(std::move(blocks));
}

std::string to_text(const IntWord& w) {
  std::string out = "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out + ")";
}

IntWord parse_word(const std::string& s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("word must be parenthesized: " + s);
  const std::string body = s.substr(1, s.size() - 2);
  IntWord w;
  if (body.empty()) return w;
  for (const std::string& piece : split(body, ',')) {
    if (piece.empty()) throw ParseError("empty word entry: " + s);
    size_t pos = 0;
    const int v = std::stoi(piece, &pos);
    if (pos != piece.size()) throw ParseError("bad word entry: " + s);
    w.push_back(v);
  }
  return w;
}

std::string qpoly_text(const std::vector<long long>& coeffs) {
  std::string out;
  for (size_t e = 0; e < coeffs.size(); ++e) {
    if (coeffs[e] == 0) continue;
    if (!out.empty()) out += " + ";
    std::string term;
    if (e == 0) {
      term = std::to_string(coeffs[e]);
    } else {
      if (coeffs[e] != 1) term = std::to_string(coeffs[e]) + "*";
      term += "q";
      if (e > 1) term += "^" + std::to_string(e);
    }
    out += term;
  }
  return out.empty() ? "0" : out;
}

ordered_json matrix_to_json(const RatMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(format_rat(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix JSON must be a nonempty array");
  std::vector<std::vector<Rat>> rows;
  for (const auto& jr : j) {
    if (!jr.is_array() || jr.empty()) throw ParseError("matrix rows must be nonempty arrays");
    std::vector<Rat> row;
    for (const auto& je : jr) {
      if (je.is_string())
        row.push_back(parse_rat(je.get<std::string>()));
      else if (je.is_number_integer())
        row.push_back(Rat(je.get<long>()));
      else
        throw ParseError("matrix entries must be integers or \"p/q\" strings");
    }
    rows.push_back(std::move(row));
  }
  return RatMatrix::from_rows(rows);
}

ordered_json block_matrix_to_json(const BlockMatrix& m) {
  ordered_json out;
  out["alpha"] = m.alpha().parts();
  out["k"] = m.alpha().k();
  out["matrix"] = matrix_to_json(m.matrix());
  return out;
}

BlockMatrix block_matrix_from_json(const json& j) {
  if (!j.contains("alpha") || !j.contains("k") || !j.contains("matrix"))
    throw ParseError("block matrix JSON needs alpha, k and matrix fields");
  Composition alpha(j["alpha"].get<std::vector<int>>(), j["k"].get<int>());
  return BlockMatrix(matrix_from_json(j["matrix"]), alpha);
}

ordered_json poly_to_json(const Poly& p) {
  ordered_json terms = ordered_json::array();
  const auto& m = p.terms();
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    ordered_json term;
    term["coeff"] = format_rat(it->second);
    term["exps"] = it->first;
    terms.push_back(std::move(term));
  }
  return terms;
}

Poly poly_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("polynomial JSON must be a nonempty array");
  int n = -1;
  Poly out(1);
  bool first = true;
  for (const auto& jt : j) {
    IntWord e = jt.at("exps").get<IntWord>();
    if (first) {
      n = static_cast<int>(e.size());
      out = Poly(n);
      first = false;
    }
    out.add_term(e, parse_rat(jt.at("coeff").get<std::string>()));
  }
  return out;
}

ordered_json mixed_result_to_json(const MixedReductionResult& r) {
  ordered_json out;
  out["seq"] = to_text(r.seq);
  out["covers"] = r.covers_k;
  out["u"] = matrix_to_json(r.u);
  out["b"] = matrix_to_json(r.b);
  out["g"] = matrix_to_json(r.g);
  return out;
}

ordered_json paving_to_json(const PavingReport& report) {
  ordered_json out;
  out["alpha"] = to_text(report.alpha);
  out["dim_gr"] = report.dim_gr;
  out["poincare_gr"] = report.poincare_gr;
  out["poincare_x"] = report.poincare_x;
  ordered_json cells = ordered_json::array();
  for (const Cell& c : report.cells) {
    ordered_json jc;
    jc["seq"] = to_text(c.seq);
    jc["covering"] = c.covering;
    jc["dim"] = c.dim();
    jc["codim"] = report.dim_gr - c.dim();
    jc["stars_pm"] = c.stars_pm;
    jc["stars_u"] = c.stars_u;
    cells.push_back(std::move(jc));
  }
  out["cells"] = std::move(cells);
  return out;
}

std::string paving_to_csv(const PavingReport& report) {
  std::ostringstream out;
  out << "seq,covering,dim,codim,stars_pm,stars_u\n";
  for (const Cell& c : report.cells)
    out << to_text(c.seq) << ',' << (c.covering ? "true" : "false") << ','
        << c.dim() << ',' << (report.dim_gr - c.dim()) << ',' << c.stars_pm
        << ',' << c.stars_u << '\n';
  return out.str();
}

std::string matrix_to_csv(const RatMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << format_rat(m.at(i, j));
    }
    out << '\n';
  }
  return out.str();
}

RatMatrix matrix_from_csv(const std::string& text) {
  std::vector<std::vector<Rat>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<Rat> row;
    for (const std::string& piece : split(line, ',')) row.push_back(parse_rat(piece));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw ParseError("empty CSV matrix");
  return RatMatrix::from_rows(rows);
}

}  // namespace spanconfig
