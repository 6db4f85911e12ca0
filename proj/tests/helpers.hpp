#pragma once

#include <random>

#include "yosp/rational_function.hpp"

namespace yosp::test {

inline Rational Q(const char* text) { return parse_rational(text); }

/// Polynomial from ascending coefficient literals.
inline UniPoly P(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> c;
  for (const char* x : coeffs) c.push_back(Q(x));
  return UniPoly(std::move(c));
}

/// (u - r_1)(u - r_2)...
inline UniPoly from_roots(std::initializer_list<const char*> roots) {
  UniPoly p(1);
  for (const char* r : roots) p = p * UniPoly::linear(-Q(r));
  return p;
}

inline UniPoly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Rational> c;
  for (int k = 0; k <= degree; ++k) c.push_back(random_rational(rng, 9, 4));
  if (c.back() == 0) c.back() = 1;
  return UniPoly(std::move(c));
}

}  // namespace yosp::test
