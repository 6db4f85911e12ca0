#include <gtest/gtest.h>

#include <map>

#include "helpers.hpp"
#include "yosp/hopf.hpp"
#include "yosp/osp.hpp"
#include "yosp/verify.hpp"

using namespace yosp;
using yosp::test::from_roots;
using yosp::test::Q;

namespace {

ModuleRep L(const char* a, const char* b) { return build_elementary(Q(a), Q(b)); }

}  // namespace

TEST(Tensor, DimensionAndHighestWeight) {
  const ModuleRep t = tensor_modules(L("-1", "0"), L("-5/2", "-3/2"));
  EXPECT_EQ(t.dim(), 9);
  const HighestWeight hw = highest_weight_of(t);
  EXPECT_EQ(hw.l1, RatFunc(from_roots({"1", "5/2"}), from_roots({"0", "3/2"})));
  EXPECT_EQ(t.c, L("-1", "0").c * L("-5/2", "-3/2").c);
  EXPECT_EQ(t.denom.degree(), 4);
}

TEST(Tensor, HighestWeightsMultiply) {
  const std::vector<std::pair<const char*, const char*>> params{
      {"-1", "0"}, {"-2", "0"}, {"-5/2", "-3/2"}, {"1/3", "4/3"}};
  for (const auto& [a1, b1] : params)
    for (const auto& [a2, b2] : params) {
      const ModuleRep a = L(a1, b1), b = L(a2, b2);
      EXPECT_EQ(highest_weight_of(tensor_modules(a, b)), highest_weight_of(a) * highest_weight_of(b));
    }
}

TEST(Tensor, SatisfiesRtt) {
  const ModuleRep t = tensor_modules(L("-1", "0"), L("-2", "0"));
  EXPECT_TRUE(verify_rtt(t, 30, 3).passed);
  EXPECT_TRUE(verify_central(t, 10, 3).passed);
  const ModuleRep tv = tensor_modules(vector_representation(), vector_representation());
  EXPECT_TRUE(verify_rtt(tv, 30, 3, 2).passed);
}

TEST(Tensor, IsAssociative) {
  const ModuleRep a = L("-1", "0"), b = L("-5/2", "-3/2"), c = vector_representation();
  const ModuleRep left = tensor_modules(tensor_modules(a, b), c);
  const ModuleRep right = tensor_modules(a, tensor_modules(b, c));
  EXPECT_EQ(left.space.labels, right.space.labels);
  EXPECT_EQ(left.space.parity, right.space.parity);
  for (std::size_t t = 0; t < 9; ++t) EXPECT_TRUE(left.T[t] == right.T[t]) << t;
}

TEST(Tensor, TruncatedFactorsMustShareADepth) {
  const ModuleRep a = build_small_verma(Q("1/3"), Q("0"), 4);
  const ModuleRep b = build_small_verma(Q("1/5"), Q("0"), 5);
  EXPECT_THROW(tensor_modules(a, b), DepthMismatch);
  const ModuleRep c = tensor_modules(a, build_small_verma(Q("1/5"), Q("0"), 4));
  EXPECT_TRUE(c.truncated());
  EXPECT_TRUE(verify_rtt(c, 9, 1).passed);
  const ModuleRep d = tensor_modules(L("-1", "0"), a);
  EXPECT_TRUE(verify_rtt(d, 9, 1).passed);
}

TEST(Dual, HighestWeightOfTheSwappedParameters) {
  const ModuleRep d = dual_module(L("-1", "0"));
  EXPECT_EQ(d.dim(), 3);
  EXPECT_EQ(highest_weight_of(d), elementary_highest_weight(Q("0"), Q("1")));
  EXPECT_TRUE(verify_rtt(d, 20, 5).passed);
  EXPECT_TRUE(verify_central(d, 10, 5).passed);
}

TEST(Dual, OfATensorProduct) {
  const ModuleRep t = tensor_modules(L("-1", "0"), L("-2", "0"));
  const ModuleRep d = dual_module(t);
  EXPECT_EQ(d.dim(), t.dim());
  EXPECT_EQ(highest_weight_of(d),
            elementary_highest_weight(Q("0"), Q("1")) * elementary_highest_weight(Q("0"), Q("2")));
  EXPECT_TRUE(verify_rtt(d, 20, 6).passed);
}

TEST(Dual, DoubleDualKeepsTheHighestWeight) {
  for (const auto& m : {L("-2", "0"), L("-5/2", "-3/2"), vector_representation()}) {
    const ModuleRep dd = dual_module(dual_module(m));
    EXPECT_EQ(highest_weight_of(dd), highest_weight_of(m));
    EXPECT_EQ(dd.dim(), m.dim());
  }
}

TEST(Dual, TruncatedModulesHaveNoDual) {
  EXPECT_THROW(dual_module(build_small_verma(Q("1/3"), Q("0"), 4)), InfiniteDual);
}

TEST(HighestWeight, NeedsAOneDimensionalTopSpace) {
  ModuleRep m = L("-1", "0");
  m.space.weight[1] = m.space.weight[0];
  EXPECT_THROW(highest_weight_of(m), NoHighestVector);
  Vec v = Vec::Zero(3);
  v(2) = 1;
  EXPECT_THROW(highest_weight_at(L("-1", "0"), v), NoHighestVector);
}

TEST(HighestWeight, DerivedCentralMatchesStored) {
  for (const auto& m : {L("-1", "0"), L("-2", "0"), vector_representation(),
                        tensor_modules(L("-1", "0"), L("-5/2", "-3/2"))})
    EXPECT_EQ(derived_central(m), m.c);
}

TEST(Dual, StoredWeightsAgreeWithTheOspAction) {
  const ModuleRep d = dual_module(L("-2", "0"));
  const OspAction a = osp_action(d);
  EXPECT_EQ(a.decomposition, (std::map<Rational, Index>{{0, 1}, {2, 1}}));
}
