#include "yosp/super_linalg.hpp"

#include <stdexcept>

namespace yosp {

GradedSpace tensor(const GradedSpace& a, const GradedSpace& b) {
  GradedSpace t;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < b.dim(); ++k) {
      t.parity.push_back((a.parity[i] + b.parity[k]) % 2);
      t.weight.push_back(a.weight[i] + b.weight[k]);
      BasisLabel label = a.labels[i];
      label.insert(label.end(), b.labels[k].begin(), b.labels[k].end());
      t.labels.push_back(std::move(label));
    }
  return t;
}

GradedMatrix graded_identity(const std::vector<int>& parity) {
  const auto n = static_cast<Index>(parity.size());
  return {sparse_identity<Rational>(n), 0, parity, parity};
}

GradedMatrix matrix_unit(int i, int j) {
  SpMat e(3, 3);
  e.insert(i, j) = 1;
  const std::vector<int> par{index_parity(0), index_parity(1), index_parity(2)};
  return {e, generator_parity(i, j), par, par};
}

bool respects_parity(const GradedMatrix& m) {
  for (Index k = 0; k < m.entries.outerSize(); ++k)
    for (SpMat::InnerIterator it(m.entries, k); it; ++it)
      if (it.value() != 0 &&
          m.target_parity[it.row()] != (m.source_parity[it.col()] + m.parity) % 2)
        return false;
  return true;
}

SpMat super_kron(const SpMat& a, const std::vector<int>& a_source_parity, const SpMat& b,
                 int b_parity) {
  std::vector<Eigen::Triplet<Rational>> trips;
  trips.reserve(static_cast<std::size_t>(a.nonZeros() * b.nonZeros()));
  for (Index ja = 0; ja < a.outerSize(); ++ja)
    for (SpMat::InnerIterator ia(a, ja); ia; ++ia) {
      const bool flip = (b_parity % 2 == 1) && (a_source_parity[ia.col()] % 2 == 1);
      const Rational av = flip ? Rational(-ia.value()) : ia.value();
      for (Index jb = 0; jb < b.outerSize(); ++jb)
        for (SpMat::InnerIterator ib(b, jb); ib; ++ib)
          trips.emplace_back(ia.row() * b.rows() + ib.row(), ia.col() * b.cols() + ib.col(),
                             av * ib.value());
    }
  SpMat out(a.rows() * b.rows(), a.cols() * b.cols());
  out.setFromTriplets(trips.begin(), trips.end());
  prune(out);
  return out;
}

GradedMatrix super_kron(const GradedMatrix& a, const GradedMatrix& b) {
  GradedMatrix out;
  out.entries = super_kron(a.entries, a.source_parity, b.entries, b.parity);
  out.parity = (a.parity + b.parity) % 2;
  for (int pa : a.target_parity)
    for (int pb : b.target_parity) out.target_parity.push_back((pa + pb) % 2);
  for (int pa : a.source_parity)
    for (int pb : b.source_parity) out.source_parity.push_back((pa + pb) % 2);
  return out;
}

SpMat super_bracket(const SpMat& a, int a_parity, const SpMat& b, int b_parity) {
  SpMat out = (a_parity * b_parity) % 2 == 1 ? SpMat(a * b + b * a) : SpMat(a * b - b * a);
  prune(out);
  return out;
}

GradedMatrix super_bracket(const GradedMatrix& a, const GradedMatrix& b) {
  return {super_bracket(a.entries, a.parity, b.entries, b.parity), (a.parity + b.parity) % 2,
          a.target_parity, b.source_parity};
}

OperatorPoly::OperatorPoly(std::vector<SpMat> coeffs, Index rows, Index cols, int parity)
    : coeffs_(std::move(coeffs)), rows_(rows), cols_(cols), parity_(parity) {
  for (auto& c : coeffs_) {
    if (c.rows() != rows || c.cols() != cols) throw std::invalid_argument("coefficient shape");
    prune(c);
  }
  trim();
}

void OperatorPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().nonZeros() == 0) coeffs_.pop_back();
}

SpMat OperatorPoly::coefficient(int k) const {
  if (k < 0 || k > degree()) return SpMat(rows_, cols_);
  return coeffs_[static_cast<std::size_t>(k)];
}

SpMat OperatorPoly::operator()(const Rational& u) const {
  SpMat acc(rows_, cols_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = SpMat(acc * u) + *it;
  prune(acc);
  return acc;
}

OperatorPoly& OperatorPoly::operator+=(const OperatorPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), SpMat(rows_, cols_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    coeffs_[k] += o.coeffs_[k];
    prune(coeffs_[k]);
  }
  trim();
  return *this;
}

OperatorPoly& OperatorPoly::operator-=(const OperatorPoly& o) { return *this += -o; }

OperatorPoly OperatorPoly::operator-() const {
  OperatorPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b) {
  OperatorPoly r(a.rows_, b.cols_, (a.parity_ + b.parity_) % 2);
  if (a.is_zero() || b.is_zero()) return r;
  std::vector<SpMat> c(a.coeffs_.size() + b.coeffs_.size() - 1, SpMat(a.rows_, b.cols_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return OperatorPoly(std::move(c), a.rows_, b.cols_, r.parity_);
}

OperatorPoly operator*(const UniPoly& p, const OperatorPoly& a) {
  if (p.is_zero() || a.is_zero()) return OperatorPoly(a.rows_, a.cols_, a.parity_);
  std::vector<SpMat> c(static_cast<std::size_t>(p.degree()) + a.coeffs_.size(),
                       SpMat(a.rows_, a.cols_));
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coefficient(i) == 0) continue;
    for (std::size_t j = 0; j < a.coeffs_.size(); ++j)
      c[static_cast<std::size_t>(i) + j] += a.coeffs_[j] * p.coefficient(i);
  }
  return OperatorPoly(std::move(c), a.rows_, a.cols_, a.parity_);
}

OperatorPoly operator*(const OperatorPoly& a, const SpMat& m) {
  return a.map([&m](const SpMat& c) { return SpMat(c * m); }, a.rows_, m.cols());
}

OperatorPoly operator*(const SpMat& m, const OperatorPoly& a) {
  return a.map([&m](const SpMat& c) { return SpMat(m * c); }, m.rows(), a.cols_);
}

bool operator==(const OperatorPoly& a, const OperatorPoly& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.coeffs_.size() != b.coeffs_.size())
    return false;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
    if (!is_zero(SpMat(a.coeffs_[k] - b.coeffs_[k]))) return false;
  return true;
}

OperatorPoly OperatorPoly::map(const std::function<SpMat(const SpMat&)>& f, Index rows,
                               Index cols) const {
  std::vector<SpMat> c;
  c.reserve(coeffs_.size());
  for (const auto& m : coeffs_) c.push_back(f(m));
  return OperatorPoly(std::move(c), rows, cols, parity_);
}

OperatorPoly super_bracket(const OperatorPoly& a, const SpMat& b, int b_parity) {
  const OperatorPoly ab = a * b;
  const OperatorPoly ba = b * a;
  OperatorPoly r = (a.parity() * b_parity) % 2 == 1 ? ab + ba : ab - ba;
  return OperatorPoly(r.coefficients(), a.rows(), a.cols(), (a.parity() + b_parity) % 2);
}

OperatorPoly super_bracket(const SpMat& a, int a_parity, const OperatorPoly& b) {
  const OperatorPoly ab = a * b;
  const OperatorPoly ba = b * a;
  OperatorPoly r = (a_parity * b.parity()) % 2 == 1 ? ab + ba : ab - ba;
  return OperatorPoly(r.coefficients(), b.rows(), b.cols(), (a_parity + b.parity()) % 2);
}

OperatorPoly compose_affine(const OperatorPoly& a, const Rational& scale,
                            const Rational& offset) {
  // Horner in the polynomial ring: acc = acc * (scale u + offset) + A_k.
  OperatorPoly acc(a.rows(), a.cols(), a.parity());
  const UniPoly inner(std::vector<Rational>{offset, scale});
  const auto& c = a.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = inner * acc + OperatorPoly({*it}, a.rows(), a.cols(), a.parity());
  return acc;
}

TwoLegTensor permutation_tensor() {
  TwoLegTensor t;
  t.fill(Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[two_leg_index(i, j, j, i)] = sign_power(index_parity(j));
  return t;
}

TwoLegTensor q_tensor() {
  TwoLegTensor t;
  t.fill(Rational(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      t[two_leg_index(i, j, conjugate_index(i), conjugate_index(j))] =
          sign_power(index_parity(i) * index_parity(j)) * theta(i) * theta(j);
  return t;
}

TwoLegTensor partial_super_transpose(const TwoLegTensor& t, int leg) {
  TwoLegTensor out;
  out.fill(Rational(0));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Mat slice(3, 3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          slice(i, j) = leg == 1 ? t[two_leg_index(i, j, a, b)] : t[two_leg_index(a, b, i, j)];
      const Mat st = super_transpose(slice);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          // super_kron places the sign of an odd unit in the other leg
          const Rational v = Rational(sign_power(index_parity(i) + index_parity(j))) * st(i, j);
          if (leg == 1)
            out[two_leg_index(i, j, a, b)] = v;
          else
            out[two_leg_index(a, b, i, j)] = v;
        }
    }
  return out;
}

SpMat to_operator(const TwoLegTensor& t) {
  SpMat out(9, 9);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          const Rational& c = t[two_leg_index(i, j, k, l)];
          if (c == 0) continue;
          out += SpMat(super_kron(matrix_unit(i, j), matrix_unit(k, l)).entries * c);
        }
  prune(out);
  return out;
}

SpMat permutation_operator() { return to_operator(permutation_tensor()); }

SpMat q_operator() { return to_operator(q_tensor()); }

Rational q_square_scalar() {
  const Mat q = Mat(q_operator());
  const Mat q2 = q * q;
  for (Index j = 0; j < 9; ++j)
    for (Index i = 0; i < 9; ++i)
      if (q(i, j) != 0) {
        const Rational gamma = q2(i, j) / q(i, j);
        if (!is_zero(Mat(q2 - gamma * q))) throw std::logic_error("Q^2 is not a multiple of Q");
        return gamma;
      }
  throw std::logic_error("Q vanishes");
}

OperatorPoly r_matrix_cleared() {
  const SpMat id = sparse_identity<Rational>(9);
  const SpMat p = permutation_operator();
  const SpMat q = q_operator();
  const Rational k = kappa();
  std::vector<SpMat> c{SpMat(p * k), SpMat(id * Rational(-k) - p + q), id};
  return OperatorPoly(std::move(c), 9, 9, 0);
}

Mat yang_baxter_defect(const Rational& u, const Rational& v) {
  const OperatorPoly r = r_matrix_cleared();
  const std::vector<int> par3{index_parity(0), index_parity(1), index_parity(2)};
  std::vector<int> par9;
  for (int a : par3)
    for (int b : par3) par9.push_back((a + b) % 2);
  const SpMat id3 = sparse_identity<Rational>(3);
  const SpMat p23 = super_kron(id3, par3, permutation_operator(), 0);
  auto r12 = [&](const Rational& w) { return super_kron(r(w), par9, id3, 0); };
  auto r23 = [&](const Rational& w) { return super_kron(id3, par3, r(w), 0); };
  auto r13 = [&](const Rational& w) { return SpMat(p23 * r12(w) * p23); };
  const SpMat lhs = r12(u - v) * r13(u) * r23(v);
  const SpMat rhs = r23(v) * r13(u) * r12(u - v);
  return Mat(lhs - rhs);
}

}  // namespace yosp
