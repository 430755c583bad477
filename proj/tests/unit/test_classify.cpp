#include "dmckit/classify.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace dmckit;

namespace {

FnPtr abs_sum() {
  return make_callable(2, [](const LatticePoint& x) { return ExtValue(x[0] + x[1] < 0 ? -(x[0] + x[1]) : x[0] + x[1]); });
}
FnPtr max_sign_inverted() {
  return make_callable(3, [](const LatticePoint& x) { return ExtValue(std::max({x[0], x[1], -x[2]})); });
}
ExtValue eval_sum(const FnOracle& f, const LatticePoint& a, const LatticePoint& b) { return f(a) + f(b); }

bool oracle_weak(const FnOracle& f, const Box& box, Coord k, bool exact) { return oracle::weak_midpoint_holds(f, box, k, exact); }

}  // namespace

TEST(Classify, AbsSumIsLocallyButNotGloballyDmc) {
  Box box = Box::cube(2, -3, 3);
  EXPECT_TRUE(check_dmc_at(*abs_sum(), box, 2, DistanceMode::exact).holds);
  Verdict v = check_dmc_at(*abs_sum(), box, 3, DistanceMode::exact);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->lhs, ExtValue(0));
  EXPECT_EQ(v.witness->rhs, ExtValue(2));
  // The reported pair is the lexicographically first violation.
  auto all = oracle::dmc_violations(*abs_sum(), box, [](Coord d) { return d == 3; });
  ASSERT_FALSE(all.empty());
  EXPECT_EQ(v.witness->x, all.front().x);
  EXPECT_EQ(v.witness->y, all.front().y);
  // ((0,0),(3,-3)) is one of the violations.
  EXPECT_LT(eval_sum(*abs_sum(), {0, 0}, {3, -3}), eval_sum(*abs_sum(), {2, -1}, {1, -2}));

  EXPECT_TRUE(is_locally_dmc(*abs_sum(), box).holds);
  EXPECT_FALSE(is_globally_dmc(*abs_sum(), box).holds);
  EXPECT_TRUE(is_integrally_convex(*abs_sum(), box).holds);
}

TEST(Classify, SignInversionBreaksLocalDmc) {
  Box box = Box::cube(3, -2, 2);
  Verdict v = check_dmc_at(*max_sign_inverted(), box, 2, DistanceMode::exact);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->lhs, ExtValue(-1));
  EXPECT_EQ(v.witness->rhs, ExtValue(0));
  auto all = oracle::dmc_violations(*max_sign_inverted(), box, [](Coord d) { return d == 2; });
  EXPECT_EQ(v.witness->x, all.front().x);
  EXPECT_EQ(v.witness->y, all.front().y);
  // The unsigned max is L♮-convex.
  FnPtr plain = make_callable(3, [](const LatticePoint& x) { return ExtValue(std::max({x[0], x[1], x[2]})); });
  EXPECT_TRUE(is_lnat(*plain, box).holds);
}

TEST(Classify, Submodularity) {
  Box box = Box::cube(2, -2, 2);
  EXPECT_TRUE(is_submodular(*make_quadratic({{1, -1}, {-1, 1}}), box).holds);
  Verdict v = is_submodular(*make_quadratic({{1, 1}, {1, 1}}), box);
  ASSERT_FALSE(v.holds);
  EXPECT_LT(eval_sum(*make_quadratic({{1, 1}, {1, 1}}), {1, 0}, {0, 1}), ExtValue(4));
  FnPtr any = make_callable(2, [](const LatticePoint& x) { return ExtValue(x[0] * x[1] * 7 - x[0]); });
  EXPECT_TRUE(is_submodular(*any, Box({3, -1}, {3, -1})).holds);
  EXPECT_TRUE(is_globally_dmc(*any, Box({3, -1}, {3, -1})).holds);
}

TEST(Classify, UnitCubeFunctionsAreGloballyDmc) {
  gen::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::vector<ExtValue> vals;
    Box cube = Box::cube(3, 0, 1);
    for (std::size_t i = 0; i < cube.cardinality(); ++i)
      vals.push_back(gen::coin(rng, 0.2) ? ExtValue::infinity() : ExtValue(gen::uniform(rng, -9, 9)));
    TableFn f(cube, vals);
    EXPECT_TRUE(is_globally_dmc(f, cube).holds);
  }
}

TEST(Classify, GloballyDmcWithoutDiagonalDominance) {
  Matrix q{{1, -1, 1}, {-1, 2, -1}, {1, -1, 2}};
  EXPECT_TRUE(is_globally_dmc(*make_quadratic(q), Box::cube(3, -3, 3)).holds);
}

TEST(Classify, IntegralConvexity) {
  // Every subset of {0,1}^n is integrally convex; (1/2,1/2) is the midpoint of the two points.
  EXPECT_TRUE(is_integrally_convex(*make_indicator(2, {{0, 0}, {1, 1}}), Box::cube(2, 0, 1)).holds);
  EXPECT_EQ(oracle::envelope(*make_indicator(2, {{0, 0}, {1, 1}}), {Rational(1, 2), Rational(1, 2)}), Rational(0));
  // The midpoint (1,1) of (0,0),(2,2) is missing.
  Verdict v = is_integrally_convex(*make_indicator(2, {{0, 0}, {2, 2}}), Box::cube(2, 0, 2));
  EXPECT_FALSE(v.holds);
  EXPECT_TRUE(is_integrally_convex(*make_indicator(2, {{1, 1}}), Box::cube(2, 0, 2)).holds);
  std::vector<LatticePoint> anti;
  for (Coord t = -3; t <= 3; ++t) anti.push_back({t, -t});
  EXPECT_TRUE(is_integrally_convex(*make_indicator(2, anti), Box::cube(2, -3, 3)).holds);
}

TEST(Classify, Lnat) {
  Box box = Box::cube(2, -3, 3);
  EXPECT_TRUE(is_lnat(*make_quadratic({{1, Rational(-1, 2)}, {Rational(-1, 2), 1}}), box).holds);
  EXPECT_FALSE(is_lnat(*make_quadratic({{1, Rational(1, 2)}, {Rational(1, 2), 1}}), box).holds);
  EXPECT_FALSE(is_lnat(*make_indicator(2, {{1, 0}, {0, 1}}), Box::cube(2, 0, 1)).holds);
}

TEST(Classify, RestrictedMidpointIsNotEnough) {
  InsufficiencyDemo d = restricted_midpoint_insufficiency_demo();
  EXPECT_TRUE(d.distant_pairs.holds);
  ASSERT_FALSE(d.discrete_convexity.holds);
  EXPECT_EQ(d.discrete_convexity.witness->lhs, ExtValue(2));
  EXPECT_EQ(d.discrete_convexity.witness->rhs, ExtValue(4));
}

TEST(Classify, RandomTablesMatchNaivePairScan) {
  gen::Rng rng(23);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 3));
    auto f = gen::random_mixed_table(rng, n, 5, 0.5);
    const Box& box = f->box();
    BoxValues bv(*f, box);
    for (Coord k = 1; k <= 4; ++k)
      for (DistanceMode mode : {DistanceMode::exact, DistanceMode::at_least}) {
        Verdict v = check_dmc_at(bv, k, mode);
        auto bad = oracle::dmc_violations(*f, box, [&](Coord d) { return mode == DistanceMode::exact ? d == k : d >= k; });
        ASSERT_EQ(v.holds, bad.empty()) << "k=" << k;
        if (!v.holds) {
          EXPECT_EQ(v.witness->x, bad.front().x);
          EXPECT_EQ(v.witness->y, bad.front().y);
        }
        EXPECT_EQ(check_dmc_at(bv, k, mode, 4).witness, v.witness);
      }
  }
}

TEST(Classify, IntegralConvexityMatchesEnvelopeOracle) {
  gen::Rng rng(29);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = static_cast<std::size_t>(gen::uniform(rng, 1, 2));
    auto f = gen::random_mixed_table(rng, n, 4, 0.5);
    BoxValues bv(*f, f->box());
    bool want = oracle_weak(*f, f->box(), 2, false);
    Verdict v = is_integrally_convex(bv);
    EXPECT_EQ(v.holds, want);
    FnPtr dom = make_callable(n, [&](const LatticePoint& x) { return (*f)(x).is_finite() ? ExtValue(0) : ExtValue::infinity(); });
    if (oracle_weak(*dom, f->box(), 2, false)) EXPECT_EQ(is_integrally_convex_by_distance2(bv).holds, want);
  }
}

TEST(Classify, HierarchyOnRandomTables) {
  gen::Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    auto f = gen::random_mixed_table(rng, static_cast<std::size_t>(gen::uniform(rng, 1, 3)), 4, 0.7);
    ClassProfile p = classify_all(BoxValues(*f, f->box()));
    EXPECT_TRUE(p.hierarchy_consistent());
  }
}

TEST(Classify, ResolveBoxNeedsABoundedFunction) {
  EXPECT_THROW(is_locally_dmc(*abs_sum()), Error);
  EXPECT_THROW(check_dmc_at(*abs_sum(), Box::cube(3, 0, 1), 2, DistanceMode::exact), Error);
}

TEST(Parallelogram, PinnedAndRandom) {
  FnPtr q = make_quadratic({{2, -1}, {-1, 2}});
  StepChain c = step_decompose({4, -2});
  Verdict eq = check_parallelogram(*q, {0, 0}, c, {0, 1, 2, 3}, {});
  EXPECT_TRUE(eq.holds);
  EXPECT_EQ(eq.witness, std::nullopt);
  EXPECT_THROW(check_parallelogram(*q, {0, 0}, c, {0, 1}, {1, 2, 3}), Error);
  EXPECT_THROW(check_parallelogram(*q, {0, 0}, c, {0}, {1, 2}), Error);

  gen::Rng rng(37);
  for (int t = 0; t < 40; ++t) {
    auto f = gen::random_dmc_table(rng, {static_cast<std::size_t>(gen::uniform(rng, 1, 3)), 6, true});
    std::vector<LatticePoint> dom;
    f->box().for_each([&](const LatticePoint& x) {
      if ((*f)(x).is_finite()) dom.push_back(x);
    });
    for (int d = 0; d < 10; ++d) {
      const auto& x = dom[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<Coord>(dom.size()) - 1))];
      const auto& y = dom[static_cast<std::size_t>(gen::uniform(rng, 0, static_cast<Coord>(dom.size()) - 1))];
      StepChain ch = step_decompose(y - x);
      IndexSet i_set, j_set;
      for (int k = 0; k < static_cast<int>(ch.length()); ++k) (gen::coin(rng) ? i_set : j_set).push_back(k);
      EXPECT_TRUE(check_parallelogram(*f, x, ch, i_set, j_set).holds);
      EXPECT_TRUE(check_parallelogram(*f, x, y, j_set).holds);
    }
  }
}
