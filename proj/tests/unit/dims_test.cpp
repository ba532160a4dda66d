#include "ecodyn/dims.hpp"

#include <gtest/gtest.h>

#include "ecodyn/error.hpp"

namespace ecodyn::dims {
namespace {

const DimExpr K = DimExpr::leaf("K", kMoney);
const DimExpr Y = DimExpr::leaf("Y", kFlow);
const DimExpr I = DimExpr::leaf("I", kFlow);
const DimExpr nu = DimExpr::leaf("nu", kDimensionless);

TEST(Dimension, ProductAndQuotientCombineExponents) {
  EXPECT_EQ(kMoney / kTime, kFlow);
  EXPECT_EQ(kFlow * kTime, kMoney);
  EXPECT_EQ(kFlow.to_string(), "$·s^-1");
  EXPECT_EQ(kDimensionless.to_string(), "1");
}

TEST(CheckRelation, CapitalGrowthEqualsInvestment) {
  const auto r = check_relation(differentiate_dt(K), I);
  EXPECT_TRUE(r.consistent);
  EXPECT_EQ(r.lhs_dim, kFlow);
}

TEST(CheckRelation, StockEqualsRatioTimesFlowIsInconsistent) {
  const auto r = check_relation(K, nu * Y);
  EXPECT_FALSE(r.consistent);
  EXPECT_EQ(r.lhs_dim, kMoney);
  EXPECT_EQ(r.rhs_dim, kFlow);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(*r.first_violation, "relation");
}

TEST(CheckRelation, StockEqualsRatioTimesIntegratedFlow) {
  EXPECT_TRUE(check_relation(K, nu * integrate_dt(Y)).consistent);
}

TEST(CheckRelation, StockEqualsFlowPlusTimeIsInconsistent) {
  const auto t = DimExpr::leaf("t", kTime);
  const auto a = DimExpr::leaf("a", kDimensionless);
  const auto r = check_relation(K, nu * Y + a * t);
  EXPECT_FALSE(r.consistent);
  ASSERT_TRUE(r.first_violation.has_value());
  EXPECT_EQ(*r.first_violation, "rhs.add");
}

TEST(CheckRelation, RatioTaggedAsTimeMakesRelationConsistent) {
  const auto nu_time = DimExpr::leaf("nu", kTime);
  EXPECT_TRUE(check_relation(K, nu_time * Y).consistent);
  EXPECT_FALSE(check_relation(K, nu * Y).consistent);
}

TEST(CheckRelation, VerdictIsSymmetric) {
  const std::vector<std::pair<DimExpr, DimExpr>> cases = {
      {K, nu * Y}, {differentiate_dt(K), I}, {K, nu * integrate_dt(Y)}, {Y + I, K}, {K - K, nu * K}};
  for (const auto& [l, r] : cases) {
    EXPECT_EQ(check_relation(l, r).consistent, check_relation(r, l).consistent) << to_string(l);
  }
}

TEST(Infer, DerivativeOfIntegralKeepsDimension) {
  for (const auto& e : {K, Y, nu, nu * Y, K / Y}) {
    EXPECT_EQ(infer(differentiate_dt(integrate_dt(e))), infer(e));
  }
}

TEST(Infer, MalformedTreeIsStructuralError) {
  DimExpr bad;
  bad.op = Op::add;
  bad.children = {K};
  EXPECT_THROW(infer(bad), StructuralError);
}

TEST(Parse, DimensionForms) {
  EXPECT_EQ(parse_dimension("$/s"), kFlow);
  EXPECT_EQ(parse_dimension("$·s^-1"), kFlow);
  EXPECT_EQ(parse_dimension("1"), kDimensionless);
  EXPECT_EQ(parse_dimension("s^2"), (Dimension{0, 2}));
}

TEST(Parse, RelationFromText) {
  const auto table = parse_dimension_table("K:$, Y:$/s, nu:1");
  const auto rel = parse_relation("K = nu*Y", table);
  EXPECT_FALSE(check_relation(rel.lhs, rel.rhs).consistent);
  const auto ok = parse_relation("K = nu*int(Y)", table);
  EXPECT_TRUE(check_relation(ok.lhs, ok.rhs).consistent);
  const auto d = parse_relation("d(K) = Y", table);
  EXPECT_TRUE(check_relation(d.lhs, d.rhs).consistent);
}

TEST(Parse, UnknownSymbolIsNamed) {
  const auto table = parse_dimension_table("K:$");
  try {
    parse_relation("K = zeta", table);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("zeta"), std::string::npos);
  }
}

TEST(Parse, DuplicateSymbolRejected) {
  EXPECT_THROW(parse_dimension_table("K:$, K:1"), ValidationError);
}

}  // namespace
}  // namespace ecodyn::dims
