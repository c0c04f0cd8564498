#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace drum {

/// Exact arbitrary-precision rational. All probabilities, prices and
/// coordinates in this library are of this type; there are no floating-point
/// code paths in any decision procedure.
using Rat = mpq_class;

/// A point in R^K with exact rational coordinates.
using Point = std::vector<Rat>;

/// Parses "num/den" or plain "num". Throws std::invalid_argument on anything
/// else (including a zero denominator).
inline Rat parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

/// Canonical textual form: "num" when the denominator is one, else "num/den".
inline std::string rat_str(const Rat& q) {
  return q.get_str();
}

inline Rat dot(const std::vector<Rat>& a, const Point& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

}  // namespace drum
