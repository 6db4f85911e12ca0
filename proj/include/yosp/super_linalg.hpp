#pragma once

#include <array>
#include <functional>
#include <vector>

#include "yosp/linalg.hpp"
#include "yosp/polynomial.hpp"

namespace yosp {

// Conventions on C^{1|2}, indices 0, 1, 2: the middle vector is even.

constexpr int index_parity(int i) { return i == 1 ? 0 : 1; }
constexpr int theta(int i) { return i == 2 ? -1 : 1; }
/// i -> i' (reverses the basis)
constexpr int conjugate_index(int i) { return 2 - i; }
constexpr int generator_parity(int i, int j) { return (index_parity(i) + index_parity(j)) % 2; }
/// (-1)^k
constexpr int sign_power(int k) { return (k % 2 == 0) ? 1 : -1; }
/// Weight carried by the generator t_ij, with weights (1, 0, -1) on e_1, e_2, e_3.
constexpr int generator_weight(int i, int j) { return j - i; }
inline Rational kappa() { return Rational(-3, 2); }

/// Per tensor factor, the pair (r, s) of the basis vector xi_rs.
using BasisLabel = std::vector<std::array<int, 2>>;

struct GradedSpace {
  std::vector<int> parity;
  std::vector<Rational> weight;
  std::vector<BasisLabel> labels;

  Index dim() const { return static_cast<Index>(parity.size()); }
};

/// Basis of the first space major, labels concatenated.
GradedSpace tensor(const GradedSpace& a, const GradedSpace& b);

struct GradedMatrix {
  SpMat entries;
  int parity = 0;
  std::vector<int> target_parity;
  std::vector<int> source_parity;
};

GradedMatrix graded_identity(const std::vector<int>& parity);
/// e_ij on C^{1|2}
GradedMatrix matrix_unit(int i, int j);
bool respects_parity(const GradedMatrix& m);

/// (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw.
SpMat super_kron(const SpMat& a, const std::vector<int>& a_source_parity, const SpMat& b,
                 int b_parity);
GradedMatrix super_kron(const GradedMatrix& a, const GradedMatrix& b);
/// AB - (-1)^{|A||B|} BA
GradedMatrix super_bracket(const GradedMatrix& a, const GradedMatrix& b);
SpMat super_bracket(const SpMat& a, int a_parity, const SpMat& b, int b_parity);

/// (A^t)_ij = A_{j'i'} (-1)^{|i||j| + |j|} theta_i theta_j on 3x3 matrices.
template <typename Scalar>
Matrix<Scalar> super_transpose(const Matrix<Scalar>& a) {
  Matrix<Scalar> t(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int s = sign_power(index_parity(i) * index_parity(j) + index_parity(j)) * theta(i) *
                    theta(j);
      t(i, j) = Scalar(s) * a(conjugate_index(j), conjugate_index(i));
    }
  return t;
}

/// Matrix-valued polynomial sum_k A_k u^k with a common parity.
class OperatorPoly {
 public:
  OperatorPoly() = default;
  OperatorPoly(Index rows, Index cols, int parity) : rows_(rows), cols_(cols), parity_(parity) {}
  OperatorPoly(std::vector<SpMat> coeffs, Index rows, Index cols, int parity);

  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  int parity() const { return parity_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<SpMat>& coefficients() const { return coeffs_; }
  SpMat coefficient(int k) const;

  SpMat operator()(const Rational& u) const;

  OperatorPoly& operator+=(const OperatorPoly& o);
  OperatorPoly& operator-=(const OperatorPoly& o);
  OperatorPoly operator-() const;
  friend OperatorPoly operator+(OperatorPoly a, const OperatorPoly& b) { return a += b; }
  friend OperatorPoly operator-(OperatorPoly a, const OperatorPoly& b) { return a -= b; }
  friend OperatorPoly operator*(const OperatorPoly& a, const OperatorPoly& b);
  friend OperatorPoly operator*(const UniPoly& p, const OperatorPoly& a);
  friend OperatorPoly operator*(const OperatorPoly& a, const SpMat& m);
  friend OperatorPoly operator*(const SpMat& m, const OperatorPoly& a);
  friend bool operator==(const OperatorPoly& a, const OperatorPoly& b);

  /// Applies f to every coefficient; the shape may change.
  OperatorPoly map(const std::function<SpMat(const SpMat&)>& f, Index rows, Index cols) const;

 private:
  void trim();

  std::vector<SpMat> coeffs_;
  Index rows_ = 0;
  Index cols_ = 0;
  int parity_ = 0;
};

/// Supercommutator with a constant operator of the given parity.
OperatorPoly super_bracket(const OperatorPoly& a, const SpMat& b, int b_parity);
OperatorPoly super_bracket(const SpMat& a, int a_parity, const OperatorPoly& b);

/// A(scale * u + offset)
OperatorPoly compose_affine(const OperatorPoly& a, const Rational& scale, const Rational& offset);

// Operators on C^{1|2} (x) C^{1|2}.

/// Coefficients c[i][j][k][l] of sum c e_ij (x) e_kl, flattened.
using TwoLegTensor = std::array<Rational, 81>;

inline constexpr std::size_t two_leg_index(int i, int j, int k, int l) {
  return static_cast<std::size_t>(((i * 3 + j) * 3 + k) * 3 + l);
}

TwoLegTensor permutation_tensor();
TwoLegTensor q_tensor();
TwoLegTensor partial_super_transpose(const TwoLegTensor& t, int leg);
/// sum c_ijkl super_kron(e_ij, e_kl) as a 9x9 operator.
SpMat to_operator(const TwoLegTensor& t);

SpMat permutation_operator();
SpMat q_operator();
/// gamma with Q^2 = gamma Q, found by direct multiplication.
Rational q_square_scalar();

/// w(w - kappa) R(w) = w^2 + w(-kappa - P + Q) + kappa P, degree 2.
OperatorPoly r_matrix_cleared();

/// R12(u-v) R13(u) R23(v) - R23(v) R13(u) R12(u-v) with cleared denominators.
Mat yang_baxter_defect(const Rational& u, const Rational& v);

}  // namespace yosp
