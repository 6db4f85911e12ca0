#pragma once

#include <vector>

#include "yosp/rational_function.hpp"

namespace yosp {

/// c_0 + c_1 u^{-1} + ... + c_N u^{-N}, arithmetic truncated at order N.
template <typename Scalar>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1, Scalar(0)) {}
  TruncatedSeries(int order, std::vector<Scalar> coeffs) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) coeffs_[k] = coeffs[k];
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Scalar& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i)
      for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
    return r;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Scalar> coeffs_;
};

/// Expansion of f in powers of u^{-1} through u^{-order}.
template <typename Scalar>
TruncatedSeries<Scalar> series_expand(const RationalFunction<Scalar>& f, int order) {
  if (!f.finite_at_infinity()) throw DegreeError("series expansion needs deg num <= deg den");
  // In x = 1/u: f = (x^m num(1/x)) / (x^m den(1/x)) with m = deg den, and
  // the reversed denominator has constant term 1 (den is monic).
  const int m = f.den().degree();
  std::vector<Scalar> a(static_cast<std::size_t>(order) + 1, Scalar(0));
  std::vector<Scalar> b(static_cast<std::size_t>(order) + 1, Scalar(0));
  for (int k = 0; k <= order && k <= m; ++k) {
    a[static_cast<std::size_t>(k)] = f.num().coefficient(m - k);
    b[static_cast<std::size_t>(k)] = f.den().coefficient(m - k);
  }
  TruncatedSeries<Scalar> s(order);
  for (int k = 0; k <= order; ++k) {
    Scalar acc = a[static_cast<std::size_t>(k)];
    for (int j = 1; j <= k; ++j) acc -= b[static_cast<std::size_t>(j)] * s[k - j];
    s[k] = acc;
  }
  return s;
}

}  // namespace yosp
