#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace taba;
using taba::testing::Ints;
using taba::testing::Rng;
using taba::testing::all_lists;
using taba::testing::eq;

using Cont = DefCont<int>;

TEST(ApplyCont, Examples) {
  EXPECT_TRUE(apply_cont(Cont::init(), eq, Ints{}));
  EXPECT_TRUE(apply_cont(Cont::step(3, Cont::init()), eq, Ints{3}));
  EXPECT_FALSE(apply_cont(Cont::step(3, Cont::init()), eq, Ints{}));
}

TEST(DefCont, IsomorphicToLists) {
  auto lists = all_lists(4, 3);
  for (const auto& vs : lists) {
    Cont c = cont_from_list(vs);
    ASSERT_EQ(cont_to_list(c), vs);
    for (const auto& ws : lists) {
      bool expected = rev2_aux_structural_eq(eq, cont_to_list(c), ws);
      ASSERT_EQ(apply_cont(c, eq, ws), expected);
      ASSERT_EQ(detail::gallery::dispatch_cont(c, eq)(View<int>(ws)), expected);
    }
  }
}

TEST(DefCont, Renders) {
  EXPECT_EQ(render(Cont::init()), "ContInit");
  EXPECT_EQ(render(Cont::step(1, Cont::step(2, Cont::init()))), "ContStep(1, ContStep(2, ContInit))");
}

TEST(Rev2V3Defunct, Examples) {
  EXPECT_TRUE(rev2_v3_defunct(eq, Ints{1, 2}, Ints{2, 1}));
  EXPECT_FALSE(rev2_v3_defunct(eq, Ints{1, 2}, Ints{1, 2}));
  EXPECT_TRUE(rev2_v3_defunct(eq, Ints{}, Ints{}));
}

TEST(Rev2V1Refunct, Examples) {
  EXPECT_TRUE(rev2_v1_refunct(RefunctVariant::plain, eq, Ints{1, 2, 3}, Ints{3, 2, 1}));
  EXPECT_TRUE(rev2_v1_refunct(RefunctVariant::fold_left, eq, Ints{1}, Ints{1}));
  EXPECT_FALSE(rev2_v1_refunct(RefunctVariant::fold_left, eq, Ints{1, 2}, Ints{2, 2}));
}

TEST(Gallery, Rev2RenditionsMatchTheOracle) {
  auto lists = all_lists(5, 3);
  for (const auto& vs : lists) {
    for (const auto& ws : lists) {
      bool expected = oracle_reverse(vs) == ws;
      ASSERT_EQ(rev2_v3_defunct(eq, vs, ws), expected);
      ASSERT_EQ(rev2_v3_defunct(eq, vs, ws), rev2(Rev2Variant::v3, eq, vs, ws));
      ASSERT_EQ(detail::gallery::rev2_v3_dispatch(eq, View<int>(vs), View<int>(ws)), expected);
      ASSERT_EQ(rev2_v1_refunct(RefunctVariant::plain, eq, vs, ws), expected);
      ASSERT_EQ(rev2_v1_refunct(RefunctVariant::fold_left, eq, vs, ws), expected);
    }
  }
}

TEST(Gallery, FoldLeftRefunctDelegates) {
  trace::TraceLog log;
  rev2_v1_refunct(RefunctVariant::fold_left, eq, Ints{1, 2, 3}, Ints{3, 2, 1}, trace::Probe(log));
  EXPECT_EQ(log.count(trace::EventKind::call, "fold_left"), 1u);
  EXPECT_EQ(log.count(trace::EventKind::tail_call, "fold_left"), 3u);
}

TEST(FirstAndLast, Examples) {
  for (FirstLastVariant v : kFirstLastVariants) {
    EXPECT_EQ(first_and_last(v, Ints{}), std::nullopt) << name_of(v);
    EXPECT_EQ(first_and_last(v, Ints{7}), std::pair(7, 7)) << name_of(v);
    EXPECT_EQ(first_and_last(v, Ints{1, 2, 3}), std::pair(1, 3)) << name_of(v);
  }
}

TEST(FirstAndLast, QuartetAgreesExhaustively) {
  for (const auto& vs : all_lists(6, 3)) {
    auto expected = oracle_first_and_last(vs);
    for (FirstLastVariant v : kFirstLastVariants) {
      trace::TraceLog log;
      ASSERT_EQ(first_and_last(v, vs, trace::Probe(log)), expected) << name_of(v);
      ASSERT_EQ(first_and_last(v, vs), expected) << name_of(v);
      ASSERT_TRUE(log.balanced());
    }
  }
}

TEST(FacCps, Examples) {
  EXPECT_EQ(fac_cps(0), 1u);
  EXPECT_EQ(fac_cps(1), 1u);
  EXPECT_EQ(fac_cps(5), 120u);
}

TEST(FacCps, LinearContinuation) {
  for (unsigned n = 0; n <= 12; ++n) {
    trace::TraceLog log;
    ASSERT_EQ(fac_cps(n, trace::Probe(log)), oracle_factorial(n));
    ASSERT_EQ(log.count(trace::EventKind::tail_call, "k"), n + 1);
    ASSERT_EQ(log.recursive_calls("fac"), n);
  }
}

TEST(Balancedp, Examples) {
  using T = BinTree;
  EXPECT_TRUE(balancedp(T::node(T::leaf(1), T::leaf(1))));
  EXPECT_TRUE(balancedp(T::node(T::node(T::leaf(1), T::leaf(1)), T::leaf(2))));
  EXPECT_FALSE(balancedp(T::node(T::leaf(1), T::leaf(2))));
}

TEST(Balancedp, MatchesTheWeightOracle) {
  Rng rng(67);
  int balanced = 0;
  for (int i = 0; i < 500; ++i) {
    BinTree t = rng.tree(64);
    bool expected = oracle_balanced(t);
    balanced += expected;
    ASSERT_EQ(balancedp(t), expected) << render(t);
  }
  EXPECT_GT(balanced, 50);
  EXPECT_LT(balanced, 450);
}

TEST(Balancedp, StopsAtTheFirstImbalance) {
  using T = BinTree;
  T right = T::node(T::leaf(77), T::node(T::leaf(88), T::leaf(99)));
  T t = T::node(T::node(T::leaf(1), T::leaf(2)), right);
  trace::TraceLog log;
  EXPECT_FALSE(balancedp(t, trace::Probe(log)));
  for (const auto& e : log.events()) {
    if (e.label != "visit") continue;
    EXPECT_EQ(e.args.find("77"), std::string::npos) << e.args;
    EXPECT_EQ(e.args.find("99"), std::string::npos) << e.args;
  }
  EXPECT_TRUE(log.balanced());
}

TEST(Prefixes, Examples) {
  for (PrefixesVariant v : {PrefixesVariant::cb, PrefixesVariant::cps})
    EXPECT_EQ(prefixes(v, Ints{}), std::vector<Ints>{Ints{}});
  EXPECT_EQ(prefixes(PrefixesVariant::cb, Ints{1}), (std::vector<Ints>{{}, {1}}));
  EXPECT_EQ(prefixes(PrefixesVariant::cps, Ints{1, 2, 3}),
            (std::vector<Ints>{{}, {1}, {1, 2}, {1, 2, 3}}));
}

TEST(Prefixes, SizeIsQuadraticCallsAreLinear) {
  for (std::size_t n = 0; n <= 12; ++n) {
    Ints vs(n);
    for (std::size_t i = 0; i < n; ++i) vs[i] = static_cast<int>(i % 3);
    for (PrefixesVariant v : {PrefixesVariant::cb, PrefixesVariant::cps}) {
      trace::TraceLog log;
      auto ps = prefixes(v, vs, trace::Probe(log));
      ASSERT_EQ(ps, oracle_prefixes(vs)) << name_of(v);
      ASSERT_EQ(ps.size(), n + 1);
      std::size_t total = 0;
      for (const auto& p : ps) total += p.size();
      ASSERT_EQ(total, n * (n + 1) / 2);
      ASSERT_EQ(log.recursive_calls("visit"), n) << name_of(v);
    }
  }
}

TEST(Prefixes, VariantsAgreeExhaustively) {
  for (const auto& vs : all_lists(6, 3))
    ASSERT_EQ(prefixes(PrefixesVariant::cb, vs), prefixes(PrefixesVariant::cps, vs));
}

}  // namespace
