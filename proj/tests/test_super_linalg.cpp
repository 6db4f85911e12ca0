#include <gtest/gtest.h>

#include "helpers.hpp"
#include "yosp/super_linalg.hpp"

using namespace yosp;
using yosp::test::Q;

namespace {

Mat unit3(int i, int j) {
  Mat e = Mat::Zero(3, 3);
  e(i, j) = 1;
  return e;
}

GradedMatrix random_graded(std::mt19937_64& rng, const std::vector<int>& parity, int op_parity) {
  const auto n = static_cast<Index>(parity.size());
  Mat m = Mat::Zero(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (parity[static_cast<std::size_t>(i)] == (parity[static_cast<std::size_t>(j)] + op_parity) % 2)
        m(i, j) = random_rational(rng, 9, 3);
  return {to_sparse<Rational>(m), op_parity, parity, parity};
}

}  // namespace

TEST(Conventions, ParityThetaKappa) {
  EXPECT_EQ(index_parity(0), 1);
  EXPECT_EQ(index_parity(1), 0);
  EXPECT_EQ(index_parity(2), 1);
  for (int i = 0; i < 3; ++i) EXPECT_EQ(index_parity(i), index_parity(conjugate_index(i)));
  EXPECT_EQ(theta(0) * theta(2), -1);
  EXPECT_EQ(kappa(), Q("-3/2"));
}

TEST(SuperTranspose, MatrixUnits) {
  EXPECT_EQ(super_transpose(unit3(0, 0)), unit3(2, 2));
  EXPECT_EQ(super_transpose(unit3(0, 1)), unit3(1, 2));
}

TEST(SuperTranspose, IsInvolutive) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 10; ++trial) {
    Mat a(3, 3);
    for (Index i = 0; i < 3; ++i)
      for (Index j = 0; j < 3; ++j) a(i, j) = random_rational(rng, 20, 5);
    EXPECT_EQ(super_transpose(super_transpose(a)), a);
  }
}

TEST(RMatrix, PermutationSquaresToIdentity) {
  const Mat p = Mat(permutation_operator());
  EXPECT_EQ(Mat(p * p), Mat(Mat::Identity(9, 9)));
}

TEST(RMatrix, QIsPartialTransposeOfPInEitherLeg) {
  const auto p = permutation_tensor();
  EXPECT_EQ(partial_super_transpose(p, 1), q_tensor());
  EXPECT_EQ(partial_super_transpose(p, 2), q_tensor());
  EXPECT_EQ(partial_super_transpose(partial_super_transpose(p, 1), 1), p);
  EXPECT_EQ(Mat(to_operator(q_tensor())), Mat(q_operator()));
}

TEST(RMatrix, QSquaredIsAMultipleOfQ) {
  const Rational gamma = q_square_scalar();
  const Mat q = Mat(q_operator());
  EXPECT_EQ(Mat(q * q), Mat(q * gamma));
  EXPECT_EQ(gamma, Q("-1"));
}

TEST(RMatrix, ClearedFormMatchesDefinition) {
  // w(w - kappa) (1 - P/w + Q/(w - kappa)) at w = 5.
  const Rational w = 5;
  const Mat direct = Mat(Mat::Identity(9, 9)) * (w * (w - kappa())) -
                     Mat(permutation_operator()) * (w - kappa()) + Mat(q_operator()) * w;
  EXPECT_EQ(Mat(r_matrix_cleared()(w)), direct);
}

TEST(RMatrix, YangBaxterAtFixedAndRandomPoints) {
  EXPECT_TRUE(is_zero(yang_baxter_defect(Q("5"), Q("2"))));
  std::mt19937_64 rng(17);
  int checked = 0;
  while (checked < 10) {
    const Rational u = random_rational(rng, 40, 6), v = random_rational(rng, 40, 6);
    if (u == 0 || v == 0 || u == v || u - v == kappa() || u == kappa() || v == kappa()) continue;
    EXPECT_TRUE(is_zero(yang_baxter_defect(u, v)));
    ++checked;
  }
}

TEST(RMatrix, YangBaxterDetectsAWrongSign) {
  // Replacing Q by -Q must break the equation; guards against a vacuous check.
  const Rational u = 5, v = 2;
  const std::vector<int> par3{1, 0, 1};
  std::vector<int> par9;
  for (int a : par3)
    for (int b : par3) par9.push_back((a + b) % 2);
  auto r = [&](const Rational& w) {
    return SpMat(sparse_identity<Rational>(9) * (w * (w - kappa())) -
                 permutation_operator() * (w - kappa()) - q_operator() * w);
  };
  const SpMat id3 = sparse_identity<Rational>(3);
  const SpMat p23 = super_kron(id3, par3, permutation_operator(), 0);
  auto r12 = [&](const Rational& w) { return super_kron(r(w), par9, id3, 0); };
  auto r23 = [&](const Rational& w) { return super_kron(id3, par3, r(w), 0); };
  auto r13 = [&](const Rational& w) { return SpMat(p23 * r12(w) * p23); };
  const SpMat defect = r12(u - v) * r13(u) * r23(v) - r23(v) * r13(u) * r12(u - v);
  EXPECT_FALSE(is_zero(defect));
}

TEST(SuperKron, EvenOperatorsGiveThePlainKroneckerProduct) {
  std::mt19937_64 rng(1);
  const std::vector<int> even{0, 0};
  const GradedMatrix a = random_graded(rng, even, 0), b = random_graded(rng, even, 0);
  const Mat k = Mat(super_kron(a, b).entries);
  const Mat da = Mat(a.entries), db = Mat(b.entries);
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j)
      for (Index r = 0; r < 2; ++r)
        for (Index s = 0; s < 2; ++s) EXPECT_EQ(k(i * 2 + r, j * 2 + s), da(i, j) * db(r, s));
}

TEST(SuperKron, OddOperatorPastOddVectorFlipsSign) {
  // e_22 (x) e_12: e_22 acts on the even vector; e_11 (x) e_12 on an odd one.
  const GradedMatrix odd = matrix_unit(0, 1);
  const Mat even_src = Mat(super_kron(matrix_unit(1, 1), odd).entries);
  const Mat odd_src = Mat(super_kron(matrix_unit(0, 0), odd).entries);
  EXPECT_EQ(even_src(1 * 3 + 0, 1 * 3 + 1), 1);
  EXPECT_EQ(odd_src(0 * 3 + 0, 0 * 3 + 1), -1);
}

TEST(SuperKron, IdentityAndAssociativity) {
  const std::vector<int> par{1, 0, 1};
  const GradedMatrix id = graded_identity(par);
  EXPECT_EQ(Mat(super_kron(id, id).entries), Mat(Mat::Identity(9, 9)));
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 8; ++trial) {
    const GradedMatrix a = random_graded(rng, par, trial % 2);
    const GradedMatrix b = random_graded(rng, {0, 1}, (trial / 2) % 2);
    const GradedMatrix c = random_graded(rng, {1, 0}, (trial / 4) % 2);
    const GradedMatrix left = super_kron(super_kron(a, b), c);
    const GradedMatrix right = super_kron(a, super_kron(b, c));
    EXPECT_EQ(Mat(left.entries), Mat(right.entries));
    EXPECT_TRUE(respects_parity(left));
    EXPECT_EQ(left.parity, (a.parity + b.parity + c.parity) % 2);
  }
}

TEST(SuperKron, RespectsTheKoszulRuleOnVectors) {
  // (A (x) B)(v (x) w) = (-1)^{|B||v|} Av (x) Bw on homogeneous basis vectors.
  std::mt19937_64 rng(21);
  const std::vector<int> pa{1, 0, 1}, pb{0, 1};
  const GradedMatrix a = random_graded(rng, pa, 1), b = random_graded(rng, pb, 1);
  const Mat k = Mat(super_kron(a, b).entries);
  for (Index v = 0; v < 3; ++v)
    for (Index w = 0; w < 2; ++w) {
      Vec ev = Vec::Zero(3), ew = Vec::Zero(2);
      ev(v) = 1;
      ew(w) = 1;
      const Vec av = a.entries * ev, bw = b.entries * ew;
      Vec expected(6);
      for (Index i = 0; i < 3; ++i)
        for (Index j = 0; j < 2; ++j) expected(i * 2 + j) = av(i) * bw(j);
      if (pa[static_cast<std::size_t>(v)] == 1) expected = -expected;
      Vec e = Vec::Zero(6);
      e(v * 2 + w) = 1;
      EXPECT_EQ(Vec(k * e), expected);
    }
}

TEST(SuperBracket, CommutatorOrAnticommutator) {
  std::mt19937_64 rng(4);
  const std::vector<int> par{1, 0, 1};
  const GradedMatrix a0 = random_graded(rng, par, 0), b0 = random_graded(rng, par, 0);
  const GradedMatrix a1 = random_graded(rng, par, 1), b1 = random_graded(rng, par, 1);
  auto dense = [](const GradedMatrix& m) { return Mat(m.entries); };
  EXPECT_EQ(dense(super_bracket(a0, b0)), Mat(dense(a0) * dense(b0) - dense(b0) * dense(a0)));
  EXPECT_EQ(dense(super_bracket(a1, b1)), Mat(dense(a1) * dense(b1) + dense(b1) * dense(a1)));
  EXPECT_EQ(dense(super_bracket(a1, a1)), Mat(dense(a1) * dense(a1) * Rational(2)));
  EXPECT_TRUE(respects_parity(super_bracket(a1, b0)));
}

TEST(OperatorPoly, EvaluationAndAffineSubstitution) {
  std::mt19937_64 rng(2);
  const std::vector<int> par{1, 0, 1};
  std::vector<SpMat> c;
  for (int k = 0; k < 3; ++k) c.push_back(random_graded(rng, par, 1).entries);
  const OperatorPoly a(c, 3, 3, 1);
  const OperatorPoly b = compose_affine(a, Q("-1"), Q("1/2"));
  for (const char* x : {"0", "3", "-7/4"}) {
    const Rational u = Q(x);
    EXPECT_EQ(Mat(b(u)), Mat(a(-u + Q("1/2"))));
  }
  const OperatorPoly sq = a * a;
  EXPECT_EQ(Mat(sq(Q("2/3"))), Mat(Mat(a(Q("2/3"))) * Mat(a(Q("2/3")))));
  EXPECT_EQ(sq.parity(), 0);
}
