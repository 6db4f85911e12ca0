#pragma once

#include <string>
#include <utility>

#include "yosp/errors.hpp"
#include "yosp/polynomial.hpp"

namespace yosp {

/// num/den with den monic and gcd(num, den) = 1; zero is 0/1.
template <typename Scalar>
class RationalFunction {
 public:
  using poly_type = Polynomial<Scalar>;

  RationalFunction() : den_(Scalar(1)) {}
  RationalFunction(int c) : num_(Scalar(c)), den_(Scalar(1)) {}
  RationalFunction(const Scalar& c) : num_(c), den_(Scalar(1)) {}
  RationalFunction(poly_type p) : num_(std::move(p)), den_(Scalar(1)) {}
  RationalFunction(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const poly_type& num() const { return num_; }
  const poly_type& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  Scalar operator()(const Scalar& x) const {
    const Scalar d = den_(x);
    if (d == 0) throw PoleError("rational function has a pole at " + x.str());
    return num_(x) / d;
  }

  /// True when deg num <= deg den.
  bool finite_at_infinity() const { return num_.degree() <= den_.degree(); }
  /// Value at u = infinity; DegreeError if there is a pole there.
  Scalar at_infinity() const {
    if (!finite_at_infinity()) throw DegreeError("rational function has a pole at infinity");
    return num_.degree() == den_.degree() ? num_.leading() : Scalar(0);
  }

  RationalFunction inverse() const {
    if (is_zero()) throw std::domain_error("inverse of the zero rational function");
    return RationalFunction(den_, num_);
  }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Normalized{}); }
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  struct Normalized {};
  RationalFunction(poly_type num, poly_type den, Normalized)
      : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = poly_type(Scalar(1));
      return;
    }
    const poly_type g = gcd(num_, den_);
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
    const Scalar lead = den_.leading();
    num_ *= Scalar(1) / lead;
    den_ *= Scalar(1) / lead;
  }

  poly_type num_;
  poly_type den_;
};

using RatFunc = RationalFunction<Rational>;

/// f(u + a)
template <typename Scalar>
RationalFunction<Scalar> shift(const RationalFunction<Scalar>& f, const Scalar& a) {
  return RationalFunction<Scalar>(shift(f.num(), a), shift(f.den(), a));
}

/// f(scale * u + offset)
template <typename Scalar>
RationalFunction<Scalar> compose_affine(const RationalFunction<Scalar>& f, const Scalar& scale,
                                        const Scalar& offset) {
  return RationalFunction<Scalar>(compose_affine(f.num(), scale, offset),
                                  compose_affine(f.den(), scale, offset));
}

inline Rational ratfunc_eval(const RatFunc& f, const Rational& u0) { return f(u0); }

std::string to_string(const RatFunc& f, char var = 'u');
std::string to_factored_string(const RatFunc& f, char var = 'u');

}  // namespace yosp
