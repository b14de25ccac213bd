#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace taba;
using taba::testing::Ints;
using taba::testing::Rng;
using taba::testing::all_lists;

TEST(SelfCnv, Examples) {
  EXPECT_EQ(self_cnv(SelfCnvVariant::direct, Ints{1, 2, 3, 4}),
            (PairList<int>{{1, 4}, {2, 3}, {3, 2}, {4, 1}}));
  EXPECT_EQ(self_cnv(SelfCnvVariant::cps, Ints{}), PairList<int>{});
  EXPECT_EQ(self_cnv(SelfCnvVariant::fold_right_direct, Ints{7}), (PairList<int>{{7, 7}}));
}

TEST(SelfCnv, AllVariantsMatchTheOracleExhaustively) {
  for (const auto& vs : all_lists(6, 3)) {
    auto expected = oracle_convolution(vs, vs);
    for (SelfCnvVariant v : kSelfCnvVariants) {
      auto got = self_cnv(v, vs);
      ASSERT_TRUE(got) << name_of(v);
      ASSERT_EQ(got, expected) << name_of(v) << " on " << render(vs);
    }
  }
}

TEST(SelfCnv, AllVariantsMatchTheOracleOnRandomLists) {
  Rng rng(7);
  for (int i = 0; i < 500; ++i) {
    Ints vs = rng.list(50, 100);
    auto expected = oracle_convolution(vs, vs);
    for (SelfCnvVariant v : kSelfCnvVariants) ASSERT_EQ(self_cnv(v, vs), expected) << name_of(v);
  }
}

TEST(SelfCnv, UnzipRecoversListAndReverse) {
  for (const auto& vs : all_lists(5, 3)) {
    auto ps = self_cnv(SelfCnvVariant::cps, vs);
    ASSERT_TRUE(ps);
    ASSERT_EQ(oracle_unzip(*ps), std::pair(vs, oracle_reverse(vs)));
  }
}

TEST(SelfCnvVisit, Examples) {
  Ints full{1, 2, 3};
  EXPECT_EQ(self_cnv_visit(Ints{3}, full), (VisitResult<int>{Ints{2, 3}, PairList<int>{{3, 1}}}));
  EXPECT_EQ(self_cnv_visit(Ints{}, full), (VisitResult<int>{full, PairList<int>{}}));
  EXPECT_EQ(self_cnv_visit(full, full),
            (VisitResult<int>{Ints{}, PairList<int>{{1, 3}, {2, 2}, {3, 1}}}));
}

TEST(SelfCnvVisit, RejectsNonSuffix) {
  EXPECT_EQ(self_cnv_visit(Ints{2}, Ints{1, 2, 3}), std::nullopt);
  EXPECT_EQ(self_cnv_visit(Ints{1, 2, 3, 4}, Ints{1, 2, 3}), std::nullopt);
}

TEST(SelfCnvVisit, LemmaHoldsForEverySuffix) {
  for (const auto& vs : all_lists(6, 3)) {
    for (std::size_t k = 0; k <= vs.size(); ++k) {
      Ints vs_sfx = take_last(vs, k);
      Ints ws_pfx = take(vs, k);
      Ints ws_sfx = take_last(vs, vs.size() - k);
      auto got = self_cnv_visit(vs_sfx, vs);
      ASSERT_TRUE(got);
      ASSERT_EQ(got->remaining, ws_sfx);
      ASSERT_EQ(got->pairs, *oracle_zip_same_length(vs_sfx, oracle_reverse(ws_pfx)));
      ASSERT_EQ(got->pairs.size() + got->remaining.size(), vs.size());
    }
  }
}

TEST(SelfCnvTrace, DirectMakesOneCallPerElementPlusTheInitial) {
  for (const auto& vs : all_lists(5, 2)) {
    trace::TraceLog log;
    self_cnv(SelfCnvVariant::direct, vs, trace::Probe(log));
    ASSERT_EQ(log.count(trace::EventKind::call, "visit"), vs.size() + 1);
    ASSERT_EQ(log.recursive_calls("visit"), vs.size());
    ASSERT_TRUE(log.balanced());
  }
}

TEST(SelfCnvTrace, FoldFormsDelegateToFoldRight) {
  for (SelfCnvVariant v : {SelfCnvVariant::fold_right_direct, SelfCnvVariant::fold_right_cps}) {
    trace::TraceLog log;
    self_cnv(v, Ints{1, 2, 3}, trace::Probe(log));
    EXPECT_EQ(log.count(trace::EventKind::call, "fold_right"), 4u) << name_of(v);
    EXPECT_EQ(log.count(trace::EventKind::call, "visit"), 0u) << name_of(v);
  }
}

TEST(SelfCnvTrace, InstrumentationIsInert) {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Ints vs = rng.list(12, 5);
    for (SelfCnvVariant v : kSelfCnvVariants) {
      trace::TraceLog log;
      ASSERT_EQ(self_cnv(v, vs, trace::Probe(log)), self_cnv(v, vs));
      ASSERT_TRUE(log.balanced());
    }
  }
}

TEST(SelfCnvTrace, CpsCallsAreTailCalls) {
  trace::TraceLog log;
  self_cnv(SelfCnvVariant::cps, Ints{1, 2, 3}, trace::Probe(log));
  EXPECT_EQ(log.recursive_calls("visit"), 3u);
  EXPECT_EQ(log.count(trace::EventKind::tail_call, "k"), 4u);
  EXPECT_EQ(log.counters().calls, 2u);
}

}  // namespace
