#pragma once

#include <string>
#include <vector>

#include "yosp/module.hpp"

namespace yosp {

/// Monic P with lambda_2(u) / lambda_1(u) = P(u + 1) / P(u).
struct DrinfeldPoly {
  UniPoly P;
  /// Roots with multiplicity, ascending; empty when P has no rational splitting.
  std::vector<Rational> roots;

  std::string to_string() const;
};

/// Throws NotDominant when no such P exists.
DrinfeldPoly drinfeld_polynomial(const HighestWeight& hw);

/// True iff the irreducible module with this highest weight is finite-dimensional.
bool classify_finite_dim(const HighestWeight& hw);

/// Within one coset of Z: can numerator roots r and denominator roots s be
/// paired so that every s - r is a nonnegative integer? Sorted matching.
bool sorted_matching_exists(std::vector<Rational> num_roots, std::vector<Rational> den_roots);
/// Same question answered by trying every pairing.
bool any_matching_exists(const std::vector<Rational>& num_roots,
                         const std::vector<Rational>& den_roots);

}  // namespace yosp
