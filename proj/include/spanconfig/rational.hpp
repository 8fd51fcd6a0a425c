#pragma once

// Exact rational scalars. All arithmetic in the library is exact; no code
// path uses floating point.

#include <gmpxx.h>

#include <string>

#include "spanconfig/errors.hpp"

namespace spanconfig {

using Rat = mpq_class;

// Parses "p", "-p" or "p/q". Denominator must be nonzero.
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw ParseError("empty rational literal");
  for (char c : s) {
    if (!(c == '-' || c == '/' || (c >= '0' && c <= '9')))
      throw ParseError("bad rational literal: " + s);
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational literal: " + s);
  if (q.get_den() == 0) throw ParseError("zero denominator: " + s);
  q.canonicalize();
  return q;
}

// Canonical form; integers are printed without "/1".
inline std::string format_rat(const Rat& q) {
  return q.get_str();
}

}  // namespace spanconfig
