#include "yosp/hopf.hpp"

#include <set>

namespace yosp {

namespace {

OperatorPoly kron_poly(const OperatorPoly& a, const std::vector<int>& a_source_parity,
                       const OperatorPoly& b) {
  const Index rows = a.rows() * b.rows();
  const Index cols = a.cols() * b.cols();
  const int parity = (a.parity() + b.parity()) % 2;
  if (a.is_zero() || b.is_zero()) return OperatorPoly(rows, cols, parity);
  std::vector<SpMat> c(static_cast<std::size_t>(a.degree() + b.degree() + 1), SpMat(rows, cols));
  for (int p = 0; p <= a.degree(); ++p) {
    const SpMat ap = a.coefficient(p);
    if (ap.nonZeros() == 0) continue;
    for (int q = 0; q <= b.degree(); ++q) {
      const SpMat bq = b.coefficient(q);
      if (bq.nonZeros() == 0) continue;
      c[static_cast<std::size_t>(p + q)] += super_kron(ap, a_source_parity, bq, b.parity());
    }
  }
  return OperatorPoly(std::move(c), rows, cols, parity);
}

Index first_nonzero(const Vec& v) {
  for (Index k = 0; k < v.size(); ++k)
    if (v(k) != 0) return k;
  throw std::invalid_argument("zero vector");
}

}  // namespace

ModuleRep tensor_modules(const ModuleRep& a, const ModuleRep& b) {
  std::set<int> depths;
  for (const auto* m : {&a, &b})
    for (const auto& f : m->factors)
      if (f.depth) depths.insert(*f.depth);
  if (depths.size() > 1)
    throw DepthMismatch("tensor factors are truncated at different depths");

  ModuleRep out;
  out.space = tensor(a.space, b.space);
  out.denom = a.denom * b.denom;
  out.c = a.c * b.c;
  out.highest_index = a.highest_index * b.dim() + b.highest_index;
  out.factors = a.factors;
  out.factors.insert(out.factors.end(), b.factors.begin(), b.factors.end());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      OperatorPoly sum(out.dim(), out.dim(), generator_parity(i, j));
      for (int k = 0; k < 3; ++k) sum += kron_poly(a.op(i, k), a.space.parity, b.op(k, j));
      out.op(i, j) = std::move(sum);
    }
  return out;
}

HighestWeight highest_weight_at(const ModuleRep& m, const Vec& v) {
  const Index p = first_nonzero(v);
  for (auto [i, j] : {std::pair{0, 1}, std::pair{0, 2}, std::pair{1, 2}})
    for (const SpMat& c : m.op(i, j).coefficients())
      if (!is_zero(Vec(c * v)))
        throw NoHighestVector("vector is not annihilated by T_" + std::to_string(i + 1) +
                              std::to_string(j + 1));
  std::array<RatFunc, 3> lambda;
  for (int i = 0; i < 3; ++i) {
    std::vector<Rational> poly;
    for (const SpMat& c : m.op(i, i).coefficients()) {
      const Vec w = c * v;
      const Rational eig = w(p) / v(p);
      if (!is_zero(Vec(w - eig * v)))
        throw NoHighestVector("vector is not an eigenvector of T_" + std::to_string(i + 1) +
                              std::to_string(i + 1));
      poly.push_back(eig);
    }
    lambda[static_cast<std::size_t>(i)] = RatFunc(UniPoly(std::move(poly)), m.denom);
  }
  HighestWeight hw{lambda[0], lambda[1], lambda[2]};
  if (!hw.consistent())
    throw RelationViolation("highest weight violates the consistency condition");
  return hw;
}

HighestWeight highest_weight_of(const ModuleRep& m) {
  if (m.dim() == 0) throw NoHighestVector("empty module");
  Index top = 0;
  int count = 0;
  for (Index k = 0; k < m.dim(); ++k) {
    const Rational& w = m.space.weight[static_cast<std::size_t>(k)];
    const Rational& best = m.space.weight[static_cast<std::size_t>(top)];
    if (k == 0 || w > best) {
      top = k;
      count = 1;
    } else if (w == best) {
      ++count;
    }
  }
  if (count != 1) throw NoHighestVector("top weight space is not one-dimensional");
  Vec e = Vec::Zero(m.dim());
  e(top) = 1;
  return highest_weight_at(m, e);
}

RatFunc derived_central(const ModuleRep& m) {
  const Index h = m.highest_index;
  UniPoly num;
  for (int k = 0; k < 3; ++k) {
    const int sg = sign_power(index_parity(k) * index_parity(0) + index_parity(0)) * theta(k) *
                   theta(0);
    const OperatorPoly lhs = compose_affine(m.op(0, k), Rational(1), -kappa());
    const OperatorPoly rhs = m.op(conjugate_index(0), conjugate_index(k));
    const OperatorPoly prod = lhs * rhs;
    std::vector<Rational> coeffs;
    for (const SpMat& c : prod.coefficients()) coeffs.push_back(c.coeff(h, h) * sg);
    num += UniPoly(std::move(coeffs));
  }
  return RatFunc(num, shift(m.denom, -kappa()) * m.denom);
}

ModuleRep dual_module(const ModuleRep& m) {
  if (m.truncated()) throw InfiniteDual("dual of a truncated infinite-dimensional module");
  const Index n = m.dim();
  const int deg = m.denom.degree();
  const Rational half(1, 2);
  ModuleRep out;
  out.space = m.space;
  out.denom = compose_affine(m.denom, Rational(-1), half) * Rational(sign_power(deg));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int pij = generator_parity(i, j);
      const Rational sg(sign_power(deg) * theta(i) * theta(j));
      const OperatorPoly src =
          compose_affine(m.op(conjugate_index(i), conjugate_index(j)), Rational(-1), half);
      out.op(i, j) = src.map(
          [&](const SpMat& c) {
            SpMat t = SpMat(c.transpose()) * sg;
            // Super-transpose: rows of odd vectors flip sign for odd generators.
            if (pij == 1)
              for (Index k = 0; k < t.outerSize(); ++k)
                for (SpMat::InnerIterator it(t, k); it; ++it)
                  if (m.space.parity[static_cast<std::size_t>(it.row())] == 1)
                    it.valueRef() = -it.value();
            return t;
          },
          n, n);
    }
  out.factors = m.factors;
  for (auto& f : out.factors) {
    f = Factor{f.kind == FactorKind::Dual ? FactorKind::Elementary : FactorKind::Dual, -f.beta,
               -f.alpha, std::nullopt};
  }
  out.highest_index = 0;
  for (Index k = 1; k < n; ++k)
    if (out.space.weight[static_cast<std::size_t>(k)] >
        out.space.weight[static_cast<std::size_t>(out.highest_index)])
      out.highest_index = k;
  out.c = derived_central(out);
  return out;
}

}  // namespace yosp
