#include "dmckit/funcs.hpp"
#include "support/oracles.hpp"

#include <gtest/gtest.h>

using namespace dmckit;

namespace {

FnPtr max3() {
  return make_callable(3, [](const LatticePoint& x) { return ExtValue(std::max({x[0], x[1], x[2]})); });
}

FnPtr small_table() {
  // f(x) = x1 - 2 x2 on [0,2]x[-1,1] with (2,1) removed.
  Box b({0, -1}, {2, 1});
  std::vector<ExtValue> v;
  b.for_each([&](const LatticePoint& x) {
    v.push_back(x == LatticePoint{2, 1} ? ExtValue::infinity() : ExtValue(x[0] - 2 * x[1]));
  });
  return std::make_shared<TableFn>(b, v);
}

}  // namespace

TEST(Funcs, QuadraticEvaluatesExactly) {
  FnPtr q = make_quadratic({{1, Rational(1, 2)}, {Rational(1, 2), 1}});
  EXPECT_EQ((*q)({1, 1}), ExtValue(3));
  EXPECT_EQ((*q)({2, -1}), ExtValue(3));
  EXPECT_THROW(make_quadratic({{1, 2}, {0, 1}}), Error);
  FnPtr boxed = make_quadratic({{1}}, Box::cube(1, -1, 1));
  EXPECT_TRUE((*boxed)({2}).is_inf());
  EXPECT_THROW((*q)({1}), Error);
}

TEST(Funcs, SeparableRequiresDiscreteConvexity) {
  UnivariateTable ok{-1, {ExtValue(1), ExtValue(0), ExtValue(1)}};
  UnivariateTable bad{0, {ExtValue(0), ExtValue(2), ExtValue(3)}};
  SeparableConvexFn f({ok, ok});
  EXPECT_EQ(f({-1, 1}), ExtValue(2));
  EXPECT_TRUE(f({2, 0}).is_inf());
  EXPECT_EQ(f.domain_box()->str(), "-1..1,-1..1");
  EXPECT_THROW(SeparableConvexFn({ok, bad}), Error);
  UnivariateTable gap{0, {ExtValue(0), ExtValue::infinity(), ExtValue(0)}};
  EXPECT_THROW(SeparableConvexFn({gap}), Error);
}

TEST(Funcs, TableAndIndicator) {
  FnPtr t = small_table();
  EXPECT_EQ((*t)({1, -1}), ExtValue(3));
  EXPECT_TRUE((*t)({2, 1}).is_inf());
  EXPECT_TRUE((*t)({3, 0}).is_inf());
  EXPECT_THROW(TableFn(Box::cube(1, 0, 1), {ExtValue(0)}), Error);

  FnPtr s = make_indicator(2, {{1, 0}, {0, 1}});
  EXPECT_EQ((*s)({1, 0}), ExtValue(0));
  EXPECT_TRUE((*s)({1, 1}).is_inf());
  EXPECT_EQ(s->domain_box()->str(), "0..1,0..1");

  FnPtr single = tabulate(*make_callable(2, [](const LatticePoint&) { return ExtValue(0); }), Box::cube(2, 0, 0));
  EXPECT_EQ((*single)({0, 0}), ExtValue(0));
  EXPECT_TRUE((*single)({0, 1}).is_inf());
}

TEST(Funcs, LinearOnSet) {
  LinearOnSetFn f({Rational(-1), Rational(0)}, std::vector<LatticePoint>{{0, 0}, {1, 0}, {1, 1}});
  EXPECT_EQ(f({1, 1}), ExtValue(-1));
  EXPECT_TRUE(f({0, 1}).is_inf());
}

TEST(Funcs, TranslateAndPermute) {
  FnPtr t = small_table();
  FnPtr same = translate(t, {0, 0});
  FnPtr moved = translate(t, {1, -1});
  for (const auto& x : oracle::box_points(Box::cube(2, -3, 3))) {
    EXPECT_EQ((*same)(x), (*t)(x));
    EXPECT_EQ((*moved)(x), (*t)(x + LatticePoint{1, -1}));
  }
  EXPECT_EQ(moved->domain_box()->str(), "-1..1,0..2");

  // sigma = (2,1,3) in 1-based form.
  FnPtr p = permute(max3(), {1, 0, 2});
  EXPECT_EQ((*p)({0, 1, 0}), ExtValue(1));
  FnPtr q = permute(t, {1, 0});
  EXPECT_EQ((*q)({-1, 2}), (*t)({2, -1}));
  EXPECT_THROW(permute(max3(), {0, 0, 1}), Error);
  EXPECT_THROW(permute(max3(), {0, 1}), Error);
}

TEST(Funcs, NegateScaleRestrict) {
  FnPtr t = small_table();
  FnPtr n = negate_all(t);
  EXPECT_EQ((*n)({-1, 1}), (*t)({1, -1}));
  EXPECT_EQ(n->domain_box()->str(), "-2..0,-1..1");

  FnPtr s1 = scale_fn(t, 1);
  FnPtr s2 = scale_fn(t, 2);
  for (const auto& x : oracle::box_points(Box::cube(2, -2, 2))) {
    EXPECT_EQ((*s1)(x), (*t)(x));
    EXPECT_EQ((*s2)(x), (*t)(2 * x));
  }
  EXPECT_EQ(s2->domain_box()->str(), "0..1,0..0");
  EXPECT_THROW(scale_fn(t, 0), Error);

  FnPtr r = restrict_to(t, Box({0, 0}, {1, 1}));
  EXPECT_TRUE((*r)({2, 0}).is_inf());
  EXPECT_EQ((*r)({1, 1}), ExtValue(-1));
}

TEST(Funcs, WeightedSumHandlesZeroWeightAndInfinity) {
  FnPtr t = small_table();
  FnPtr q = make_quadratic({{1, 0}, {0, 1}});
  FnPtr only = weighted_sum(3, t, 0, q);
  FnPtr both = weighted_sum(Rational(1, 2), t, 2, q);
  for (const auto& x : oracle::box_points(Box({0, -1}, {2, 1}))) {
    ExtValue v = (*t)(x);
    if (v.is_inf()) {
      EXPECT_TRUE((*both)(x).is_inf());
      continue;
    }
    EXPECT_EQ((*only)(x), ExtValue(3 * v.value()));
    EXPECT_EQ((*both)(x), ExtValue(v.value() / 2 + Rational(2 * (x[0] * x[0] + x[1] * x[1]))));
  }
  // Zero weight drops a +inf term.
  FnPtr zero_inf = weighted_sum(1, q, 0, t);
  EXPECT_EQ((*zero_inf)({5, 5}), ExtValue(50));
  EXPECT_THROW(weighted_sum(-1, t, 1, q), Error);
}

TEST(Funcs, EvaluationCountsPropagateThroughWrappers) {
  auto base = std::make_shared<TableFn>(Box::cube(1, 0, 3), std::vector<ExtValue>{0, 1, 2, 3});
  FnPtr w = restrict_to(scale_fn(translate(negate_all(base), {-3}), 1), Box::cube(1, 0, 3));
  std::uint64_t before = w->eval_count();
  for (Coord i = 0; i < 4; ++i) (void)(*w)({i});
  EXPECT_EQ(w->eval_count() - before, 4u);
  EXPECT_EQ(base->eval_count(), w->eval_count());
  FnPtr sum = weighted_sum(1, base, 1, base);
  before = base->eval_count();
  (void)(*sum)({1});
  EXPECT_EQ(base->eval_count() - before, 2u);
}
