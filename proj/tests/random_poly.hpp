#pragma once

#include <random>

#include "flt/poly.hpp"

namespace flt::testing {

// Random polynomial with at most max_terms terms, coefficients in [-9, 9]
// and per-variable exponents in [0, max_exp].
inline Polynomial random_poly(std::mt19937_64& rng, int max_terms = 6, unsigned max_exp = 3) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<unsigned> expo(0, max_exp);
  Polynomial p;
  for (int i = count(rng); i > 0; --i) {
    p.add_term({expo(rng), expo(rng), expo(rng)}, coef(rng));
  }
  return p;
}

inline EvalPoint random_point(std::mt19937_64& rng, long lo = -50, long hi = 50) {
  std::uniform_int_distribution<long> d(lo, hi);
  return {d(rng), d(rng), d(rng)};
}

inline bool canonical(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c == 0) return false;
  }
  return true;
}

}  // namespace flt::testing
