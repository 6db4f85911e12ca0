#pragma once

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "yosp/errors.hpp"
#include "yosp/polynomial.hpp"

namespace yosp {

/// Interpolating polynomial of degree <= degree_bound through the points.
/// The first degree_bound + 1 points determine it; every further point is
/// checked against it.
template <typename Scalar>
Polynomial<Scalar> poly_interpolate(std::span<const std::pair<Scalar, Scalar>> points,
                                    int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("negative degree bound");
  const std::size_t n = static_cast<std::size_t>(degree_bound) + 1;
  if (points.size() < n) throw std::invalid_argument("too few interpolation points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("interpolation nodes must be distinct");

  // Newton divided differences, then expansion in the monomial basis.
  std::vector<Scalar> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

  Polynomial<Scalar> p(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;)
    p = p * Polynomial<Scalar>::linear(-points[k].first) + Polynomial<Scalar>(dd[k]);

  for (std::size_t i = n; i < points.size(); ++i)
    if (p(points[i].first) != points[i].second)
      throw InconsistentSamples("sample " + std::to_string(i) +
                                " disagrees with the degree-" + std::to_string(degree_bound) +
                                " interpolant");
  return p;
}

template <typename Scalar>
Polynomial<Scalar> poly_interpolate(const std::vector<std::pair<Scalar, Scalar>>& points,
                                    int degree_bound) {
  return poly_interpolate(std::span<const std::pair<Scalar, Scalar>>(points), degree_bound);
}

}  // namespace yosp
