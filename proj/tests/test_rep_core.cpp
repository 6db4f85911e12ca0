#include <gtest/gtest.h>

#include <map>

#include "helpers.hpp"
#include "yosp/hopf.hpp"
#include "yosp/module.hpp"
#include "yosp/verify.hpp"

using namespace yosp;
using yosp::test::from_roots;
using yosp::test::P;
using yosp::test::Q;

namespace {

Index position(const ModuleRep& m, int r, int s) {
  for (Index k = 0; k < m.dim(); ++k) {
    const auto& l = m.space.labels[static_cast<std::size_t>(k)][0];
    if (l[0] == r && l[1] == s) return k;
  }
  return -1;
}

std::map<Rational, int> weight_dims(const ModuleRep& m) {
  std::map<Rational, int> dims;
  for (const Rational& w : m.space.weight) ++dims[w];
  return dims;
}

// Column k of the coefficient matrices of T_ij as a polynomial in row r.
UniPoly entry(const OperatorPoly& t, Index r, Index k) {
  std::vector<Rational> c;
  for (int p = 0; p <= t.degree(); ++p) c.push_back(t.coefficient(p).coeff(r, k));
  return UniPoly(std::move(c));
}

void expect_structural_invariants(const ModuleRep& m) {
  const int deg = m.denom.degree();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const OperatorPoly& t = m.op(i, j);
      EXPECT_LE(t.degree(), deg);
      EXPECT_EQ(t.parity(), generator_parity(i, j));
      const SpMat lead = t.coefficient(deg);
      EXPECT_TRUE(is_zero(SpMat(lead - (i == j ? sparse_identity<Rational>(m.dim()) : SpMat(m.dim(), m.dim())))));
      for (const SpMat& c : t.coefficients())
        for (Index k = 0; k < c.outerSize(); ++k)
          for (SpMat::InnerIterator it(c, k); it; ++it) {
            const auto row = static_cast<std::size_t>(it.row()), col = static_cast<std::size_t>(it.col());
            EXPECT_EQ(m.space.weight[row] - m.space.weight[col], Rational(generator_weight(i, j)));
            EXPECT_EQ(m.space.parity[row], (m.space.parity[col] + generator_parity(i, j)) % 2);
          }
    }
}

}  // namespace

TEST(SmallVerma, WeightSpaceDimensions) {
  const ModuleRep m = build_small_verma(Q("1/3"), Q("0"), 4);
  const auto dims = weight_dims(m);
  const Rational top = -Q("1/3");
  const int expected[] = {1, 1, 2, 2, 3};
  for (int p = 0; p <= 4; ++p) EXPECT_EQ(dims.at(top - p), expected[p]) << p;
  EXPECT_TRUE(m.truncated());
}

TEST(SmallVerma, DiagonalActionOnTheHighestVector) {
  const Rational a = Q("2/7"), b = Q("-3/5");
  const ModuleRep m = build_small_verma(a, b, 5);
  EXPECT_EQ(entry(m.op(0, 0), 0, 0), UniPoly::linear(a - Q("1/2")) * UniPoly::linear(a));
  for (int r = 0; r <= 2; ++r)
    for (int s = r; r + s <= 5; ++s) {
      const Index k = position(m, r, s);
      EXPECT_EQ(entry(m.op(0, 0), k, k),
                UniPoly::linear(a + r - Q("1/2")) * UniPoly::linear(a + s));
    }
}

TEST(SmallVerma, LoweringAtTheSpecialPoint) {
  const Rational a = Q("3/11"), b = Q("1/4");
  const ModuleRep m = build_small_verma(a, b, 6);
  for (int s = 0; s <= 3; ++s) {
    Vec v = Vec::Zero(m.dim());
    v(position(m, 0, s)) = 1;
    Vec expected = Vec::Zero(m.dim());
    expected(position(m, 0, s + 1)) = 1;
    EXPECT_EQ(Vec(m.op(1, 0)(-a - s) * v), expected) << s;
  }
}

TEST(SmallVerma, DeeperBuildsAgreeOnTheCommonPart) {
  const Rational a = Q("-2/3"), b = Q("1/5");
  const ModuleRep small = build_small_verma(a, b, 5);
  const ModuleRep big = build_small_verma(a, b, 11);
  std::vector<Index> keep;
  for (Index k = 0; k < small.dim(); ++k) keep.push_back(k);
  const ModuleRep cut = compress(big, keep);
  EXPECT_EQ(cut.space.labels, small.space.labels);
  for (std::size_t t = 0; t < 9; ++t) EXPECT_TRUE(cut.T[t] == small.T[t]) << t;
}

TEST(Elementary, Dimensions) {
  EXPECT_EQ(build_elementary(Q("-1"), Q("0")).dim(), 3);
  EXPECT_EQ(build_elementary(Q("-5/2"), Q("-3/2")).dim(), 3);
  for (int k = 0; k <= 6; ++k) {
    const Rational a = Q("1/3") - k;
    const ModuleRep m = build_elementary(a, a + k);
    EXPECT_EQ(m.dim(), (k + 1) * (k + 2) / 2) << k;
    EXPECT_FALSE(m.truncated());
  }
}

TEST(Elementary, WeightMultiplicitiesOfLMinusTwo) {
  const auto dims = weight_dims(build_elementary(Q("-2"), Q("0")));
  const std::map<Rational, int> expected{{2, 1}, {1, 1}, {0, 2}, {-1, 1}, {-2, 1}};
  EXPECT_EQ(dims, expected);
}

TEST(Elementary, InfiniteCasesNeedADepth) {
  EXPECT_THROW(build_elementary(Q("1/3"), Q("0")), MissingDepth);
  EXPECT_THROW(build_elementary(Q("-3/2"), Q("0")), MissingDepth);
  const ModuleRep half = build_elementary(Q("-3/2"), Q("0"), 6);
  for (const auto& l : half.space.labels) EXPECT_LE(l[0][0], 2);
  const ModuleRep generic = build_elementary(Q("1/3"), Q("0"), 6);
  EXPECT_EQ(generic.dim(), build_small_verma(Q("1/3"), Q("0"), 6).dim());
}

TEST(Elementary, LowestDiagonalEigenvalue) {
  const ModuleRep m = build_elementary(Q("-1"), Q("0"));
  const HighestWeight hw = highest_weight_of(m);
  EXPECT_EQ(hw.l3, RatFunc(from_roots({"1/2"}), from_roots({"3/2"})));
  EXPECT_EQ(hw, elementary_highest_weight(Q("-1"), Q("0")));
  EXPECT_EQ(m.c, RatFunc(from_roots({"1", "-1"}), from_roots({"0", "0"})));
  EXPECT_FALSE(central_defect(m, Q("9/4")).has_value());
}

TEST(Elementary, StructuralInvariants) {
  expect_structural_invariants(build_elementary(Q("-2"), Q("0")));
  expect_structural_invariants(build_elementary(Q("-5/2"), Q("-3/2")));
  expect_structural_invariants(build_small_verma(Q("1/3"), Q("-1/7"), 5));
  expect_structural_invariants(vector_representation());
}

TEST(Elementary, RttForSeveralParameterValues) {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"-1", "0"}, {"-3", "0"}, {"2/3", "8/3"}, {"-7/2", "-3/2"}}) {
    const ModuleRep m = build_elementary(Q(a), Q(b));
    EXPECT_TRUE(verify_rtt(m, 30, 4).passed) << a << "," << b;
    EXPECT_TRUE(verify_central(m, 10, 4).passed) << a << "," << b;
  }
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"1/3", "0"}, {"-3/2", "0"}, {"-5/2", "1/2"}}) {
    const ModuleRep m = build_elementary(Q(a), Q(b), 6);
    EXPECT_TRUE(verify_rtt(m, 30, 4).passed) << a << "," << b;
    EXPECT_TRUE(verify_central(m, 10, 4).passed) << a << "," << b;
  }
}

TEST(Vector, ExplicitMatrices) {
  const ModuleRep v = vector_representation();
  EXPECT_EQ(v.denom, UniPoly::variable() * UniPoly::linear(kappa()));
  // t_11(u) = 1 - u^{-1} e_11 + (u - 3/2)^{-1} e_33 at u = 5.
  const Rational u = 5;
  Mat t11 = Mat::Identity(3, 3);
  t11(0, 0) -= Rational(1) / u;
  t11(2, 2) += Rational(1) / (u + kappa());
  EXPECT_EQ(Mat(Mat(v.op(0, 0)(u)) / v.denom(u)), t11);
  EXPECT_EQ(highest_weight_of(v).l1, RatFunc(from_roots({"1"}), from_roots({"0"})));
}

TEST(Vector, ReconstructionReproducesTheFullMatrix) {
  const ModuleRep v = vector_representation();
  ModuleRep partial = v;
  for (auto [i, j] : {std::pair{0, 2}, std::pair{1, 1}, std::pair{1, 2}, std::pair{2, 0},
                      std::pair{2, 1}, std::pair{2, 2}})
    partial.op(i, j) = OperatorPoly(3, 3, generator_parity(i, j));
  const ModuleRep full = reconstruct_full_T(partial);
  for (std::size_t t = 0; t < 9; ++t) EXPECT_TRUE(full.T[t] == v.T[t]) << t;
}

TEST(Vector, MatchesLMinusOne) {
  const ModuleRep v = vector_representation();
  const ModuleRep l = build_elementary(Q("-1"), Q("0"));
  EXPECT_EQ(v.dim(), l.dim());
  EXPECT_EQ(highest_weight_of(v), highest_weight_of(l));
  EXPECT_EQ(v.c, l.c);
  EXPECT_TRUE(verify_rtt(v, 20, 1).passed);
}

TEST(Reconstruction, BrokenInputIsRejected) {
  ModuleRep partial = vector_representation();
  partial.op(0, 1) = -partial.op(0, 1);
  EXPECT_THROW(reconstruct_full_T(partial), ReconstructionInconsistent);
}

TEST(Twist, ShiftMovesParameters) {
  const ModuleRep l = build_elementary(Q("-1"), Q("0"));
  const ModuleRep shifted = apply_shift(l, Q("-3/2"));
  const ModuleRep target = build_elementary(Q("-5/2"), Q("-3/2"));
  EXPECT_EQ(highest_weight_of(shifted), elementary_highest_weight(Q("-5/2"), Q("-3/2")));
  EXPECT_EQ(shifted.denom, target.denom);
  EXPECT_EQ(shifted.c, target.c);
  for (std::size_t t = 0; t < 9; ++t) EXPECT_TRUE(shifted.T[t] == target.T[t]) << t;
  EXPECT_EQ(shifted.factors.front().alpha, Q("-5/2"));

  const ModuleRep same = apply_shift(l, Q("0"));
  for (std::size_t t = 0; t < 9; ++t) EXPECT_TRUE(same.T[t] == l.T[t]);
  EXPECT_EQ(same.denom, l.denom);
}

TEST(Twist, MultiplierNormalizesLambdaTwo) {
  const ModuleRep l = build_elementary(Q("-2"), Q("0"));
  const RatFunc f(from_roots({"-2", "1/3"}), from_roots({"-5", "4"}));
  const ModuleRep twisted = apply_twist(l, f);
  const HighestWeight hw = highest_weight_of(twisted);
  EXPECT_EQ(hw.l2, f);
  EXPECT_TRUE(verify_rtt(twisted, 20, 2).passed);
  EXPECT_TRUE(verify_central(twisted, 10, 2).passed);
  const ModuleRep normalized = apply_twist(twisted, hw.l2.inverse());
  EXPECT_EQ(highest_weight_of(normalized).l2, RatFunc(1));
  EXPECT_EQ(highest_weight_of(normalized).l1, highest_weight_of(l).l1);
}

TEST(Twist, MultiplierMustBeRegularAtInfinity) {
  const ModuleRep l = build_elementary(Q("-1"), Q("0"));
  EXPECT_THROW(apply_twist(l, RatFunc(P({"0", "0", "1"}), P({"1", "1"}))), DegreeError);
  EXPECT_THROW(apply_twist(l, RatFunc(P({"0", "2"}), P({"1", "1"}))), DegreeError);
  const ModuleRep same = apply_twist(l, RatFunc(1));
  EXPECT_EQ(same.c, l.c);
}

TEST(HighestWeight, ConsistencyCondition) {
  for (const auto& [a, b] : std::vector<std::pair<const char*, const char*>>{
           {"-1", "0"}, {"-5/2", "-3/2"}, {"1/3", "2/7"}})
    EXPECT_TRUE(elementary_highest_weight(Q(a), Q(b)).consistent());
  HighestWeight bad = elementary_highest_weight(Q("-1"), Q("0"));
  bad.l3 = RatFunc(1);
  EXPECT_FALSE(bad.consistent());
}

TEST(Truncation, InteriorLeavesAMarginOfTwo) {
  const ModuleRep m = build_small_verma(Q("1/3"), Q("0"), 6);
  const auto in = m.interior();
  for (Index k = 0; k < m.dim(); ++k) {
    const auto& l = m.space.labels[static_cast<std::size_t>(k)][0];
    EXPECT_EQ(in[static_cast<std::size_t>(k)], l[0] + l[1] <= 4);
  }
}
