#pragma once

#include <gmpxx.h>

#include <string>

namespace lapcoef {

using Int = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Int& v) { return v.get_str(); }

inline std::string to_string(const Rational& v) {
  Rational c(v);
  c.canonicalize();
  return c.get_str();
}

inline bool is_integer(const Rational& v) { return v.get_den() == 1; }

// Throws if |v| is not integral. Division constants in closed forms must cancel.
Int require_integer(const Rational& v, const char* what);

}  // namespace lapcoef
