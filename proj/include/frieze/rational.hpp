#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace frieze {

// Exact rational scalar. GMP keeps values canonical (positive denominator,
// coprime parts) through every arithmetic operation.
using Rat = mpq_class;

struct Error : std::runtime_error {
  std::string name;
  Error(std::string n, const std::string& msg)
      : std::runtime_error(msg), name(std::move(n)) {}
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw Error("ZeroDenominator", "rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Accepts "p" or "p/q" with optional sign; anything else is a parse error.
Rat parse_rat(const std::string& s);

// Worker count for parallel enumerations: FRIEZEKIT_THREADS if set, else the
// hardware concurrency, at least 1.
int thread_budget();

// Canonical text form: "p/q", or just "p" when the denominator is 1.
inline std::string show(const Rat& r) { return r.get_str(); }

}  // namespace frieze
