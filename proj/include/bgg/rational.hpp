#pragma once

#include <gmpxx.h>

#include <string>

namespace bgg {

// Exact rational scalar. mpq_class keeps values canonical (lowest terms,
// positive denominator), which the whole artifact relies on: there is no
// floating point anywhere.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }

inline Rat rat_from_string(const std::string& s) {
  Rat r(s);
  r.canonicalize();
  return r;
}

}  // namespace bgg
