#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "pla/errors.hpp"

namespace pla {

// Every scalar in the library is an exact rational. GMP keeps values
// canonical (lowest terms, positive denominator) as long as inputs are
// canonical, so construction goes through rat() or parse_rational().
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw ParseError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rat& r) { return sgn(r) == 0; }

// Accepts "p" or "p/q" with q > 0; anything else (decimals, empty
// strings, negative denominators) is malformed.
Rat parse_rational(const std::string& s);

std::string format_rational(const Rat& r);

}  // namespace pla

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
