#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "yosp/rational.hpp"

namespace yosp {

/// Dense univariate polynomial in u with ascending coefficients.
/// The zero polynomial has no coefficients and degree -1.
template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Scalar(constant)) {}
  Polynomial(const Scalar& constant) {
    if (constant != 0) coeffs_.push_back(constant);
  }
  explicit Polynomial(std::vector<Scalar> ascending) : coeffs_(std::move(ascending)) { trim(); }

  /// The polynomial u.
  static Polynomial variable() { return Polynomial(std::vector<Scalar>{Scalar(0), Scalar(1)}); }
  /// u + shift
  static Polynomial linear(const Scalar& shift) {
    return Polynomial(std::vector<Scalar>{shift, Scalar(1)});
  }
  static Polynomial monomial(int degree, const Scalar& coefficient = Scalar(1)) {
    std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1, Scalar(0));
    c.back() = coefficient;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  Scalar coefficient(int k) const {
    return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : Scalar(0);
  }
  Scalar leading() const { return is_zero() ? Scalar(0) : coeffs_.back(); }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }
  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Scalar& s) {
    if (s == 0) {
      coeffs_.clear();
    } else {
      for (auto& c : coeffs_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using UniPoly = Polynomial<Rational>;

/// Quotient and remainder of a by b; b must be nonzero.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Scalar> rem = a.coefficients();
  const int db = b.degree();
  const int dq = a.degree() - db;
  if (dq < 0) return {Polynomial<Scalar>(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(dq) + 1, Scalar(0));
  const Scalar lead = b.leading();
  for (int k = dq; k >= 0; --k) {
    const Scalar q = rem[static_cast<std::size_t>(k + db)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * b.coefficient(j);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// p(scale * u + offset)
template <typename Scalar>
Polynomial<Scalar> compose_affine(const Polynomial<Scalar>& p, const Scalar& scale,
                                  const Scalar& offset) {
  const Polynomial<Scalar> inner(std::vector<Scalar>{offset, scale});
  Polynomial<Scalar> acc;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * inner + Polynomial<Scalar>(*it);
  return acc;
}

/// p(u + a)
template <typename Scalar>
Polynomial<Scalar> shift(const Polynomial<Scalar>& p, const Scalar& a) {
  return compose_affine(p, Scalar(1), a);
}

/// Expanded form, e.g. "u^2 - 3/2*u + 1".
std::string to_string(const UniPoly& p, char var = 'u');

/// Rational roots with multiplicity, ascending; the remaining cofactor
/// (monic, without rational roots) is returned alongside.
std::pair<std::vector<Rational>, UniPoly> rational_roots(const UniPoly& p);

/// Factored form over the rationals where possible, e.g. "(u-1)(u-2)".
std::string to_factored_string(const UniPoly& p, char var = 'u');

}  // namespace yosp
