#pragma once

#include <gmpxx.h>

#include <string>

namespace soqe {

// Exact rational numbers. All numeric values in the library are exact;
// quantifier elimination and redundancy checks are unsound over floats.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
Rat rat_parse(const std::string& text);

// Canonical text: "p" or "p/q" with q > 1.
std::string rat_str(const Rat& r);

}  // namespace soqe
