#include <gtest/gtest.h>

#include "support.hpp"

namespace {

using namespace taba;
using taba::testing::Ints;
using taba::testing::Rng;
using taba::testing::all_lists;
using taba::testing::eq;

TEST(ListIndexRtl, Examples) {
  EXPECT_EQ(list_index_rtl(IndexVariant::tafa, Ints{10, 20, 30}, 0), 30);
  EXPECT_EQ(list_index_rtl(IndexVariant::ds, Ints{10, 20, 30}, 2), 10);
  EXPECT_EQ(list_index_rtl(IndexVariant::cps2, Ints{10}, 5), std::nullopt);
}

TEST(ListIndexRtl, AllVariantsMatchTheOracleExhaustively) {
  for (const auto& vs : all_lists(5, 3)) {
    for (std::size_t n = 0; n <= 6; ++n) {
      auto expected = oracle_nth_rtl(vs, n);
      for (IndexVariant v : kIndexVariants)
        ASSERT_EQ(list_index_rtl(v, vs, n), expected) << name_of(v) << render(vs) << n;
    }
  }
}

TEST(ListIndexRtl, AllVariantsMatchTheOracleOnRandomCases) {
  Rng rng(53);
  for (int i = 0; i < 500; ++i) {
    Ints vs = rng.list(30, 1000);
    std::size_t n = rng.below(35);
    auto expected = oracle_nth_rtl(vs, n);
    for (IndexVariant v : kIndexVariants) ASSERT_EQ(list_index_rtl(v, vs, n), expected) << name_of(v);
  }
}

TEST(ListIndexRtlThere, Examples) {
  EXPECT_EQ(list_index_rtl_there(Ints{1, 2, 3}, 0), (Ints{1, 2, 3}));
  EXPECT_EQ(list_index_rtl_there(Ints{1, 2, 3}, 2), Ints{3});
  EXPECT_EQ(list_index_rtl_there(Ints{1, 2, 3}, 4), std::nullopt);
}

TEST(ListIndexRtlThere, DropsExactlyN) {
  for (const auto& vs : all_lists(6, 2)) {
    for (std::size_t n = 0; n <= vs.size() + 2; ++n) {
      auto got = list_index_rtl_there(vs, n);
      if (n > vs.size()) {
        ASSERT_EQ(got, std::nullopt);
      } else {
        ASSERT_EQ(got, take_last(vs, vs.size() - n));
      }
    }
  }
}

// The returned suffix has length |vs_tail| - |vs_sfx|: the forth walk
// advances the full list once per element of vs_sfx.
TEST(ListIndexRtlForth, Examples) {
  EXPECT_EQ(list_index_rtl_forth(1, Ints{2, 3, 4}, Ints{3, 4}), std::pair(3, Ints{4}));
  EXPECT_EQ(list_index_rtl_forth(1, Ints{2, 3}, Ints{}), std::pair(1, Ints{2, 3}));
  EXPECT_EQ(list_index_rtl_forth(1, Ints{2}, Ints{2}), std::pair(2, Ints{}));
}

TEST(ListIndexRtlForth, RejectsABrokenTrail) {
  EXPECT_EQ(list_index_rtl_forth(1, Ints{2, 3}, Ints{9}), std::nullopt);
  EXPECT_EQ(list_index_rtl_forth(1, Ints{2}, Ints{2, 3}), std::nullopt);
}

TEST(ListIndexRtlForth, ThereThenForthIndexesFromTheRight) {
  for (const auto& whole : all_lists(7, 3)) {
    if (whole.empty()) continue;
    int v = whole.front();
    Ints rest(whole.begin() + 1, whole.end());
    for (std::size_t n = 0; n < rest.size(); ++n) {
      auto sfx = list_index_rtl_there(rest, n);
      ASSERT_TRUE(sfx);
      auto got = list_index_rtl_forth(v, rest, *sfx);
      ASSERT_TRUE(got);
      ASSERT_EQ(got->first, *oracle_nth_rtl(whole, n));
      ASSERT_EQ(got->second.size(), n);
      ASSERT_EQ(got->second, take_last(whole, n));
    }
  }
}

TEST(TafaTrace, TailCallsEqualTheLength) {
  for (const auto& vs : all_lists(6, 2)) {
    for (std::size_t n = 0; n <= 7; ++n) {
      for (IndexVariant v : {IndexVariant::tafa, IndexVariant::tafa_fused}) {
        trace::TraceLog log;
        list_index_rtl(v, vs, n, trace::Probe(log));
        ASSERT_EQ(log.counters().tail_calls, vs.size()) << name_of(v) << render(vs) << n;
        ASSERT_TRUE(log.balanced());
      }
    }
  }
}

TEST(TafaTrace, ExceptionVariantInterruptsTheReturns) {
  trace::TraceLog log;
  EXPECT_EQ(list_index_rtl(IndexVariant::dse, Ints{1, 2, 3, 4, 5}, 1, trace::Probe(log)), 4);
  std::size_t raised = 0, normal = 0;
  for (const auto& e : log.events()) {
    if (e.kind != trace::EventKind::ret) continue;
    (e.result == std::string(trace::kRaisesResult) ? raised : normal) += 1;
  }
  EXPECT_GT(raised, 0u);
  EXPECT_GT(normal, 0u);
  EXPECT_TRUE(log.balanced());
}

TEST(TafaTrace, InstrumentationIsInert) {
  Rng rng(59);
  for (int i = 0; i < 300; ++i) {
    Ints vs = rng.list(8, 10);
    std::size_t n = rng.below(10);
    for (IndexVariant v : kIndexVariants) {
      trace::TraceLog log;
      ASSERT_EQ(list_index_rtl(v, vs, n, trace::Probe(log)), list_index_rtl(v, vs, n));
      ASSERT_TRUE(log.balanced());
    }
  }
}

TEST(IntermediateResult, Renders) {
  EXPECT_EQ(render(IntermediateResult<int>(IndexTag{2})), "Index 2");
  EXPECT_EQ(render(IntermediateResult<int>(FoundTag<int>{7})), "Found 7");
}

TEST(CommonSuffixSameLength, Examples) {
  EXPECT_EQ(common_suffix_same_length(eq, Ints{1, 2, 3}, Ints{4, 2, 3}), (Ints{2, 3}));
  EXPECT_EQ(common_suffix_same_length(eq, Ints{1, 2}, Ints{1, 2}), (Ints{1, 2}));
  EXPECT_EQ(common_suffix_same_length(eq, Ints{1, 2}, Ints{3, 4}), Ints{});
}

TEST(CommonSuffixSameLength, UnequalLengthsAreAContractError) {
  EXPECT_THROW(common_suffix_same_length(eq, Ints{1, 2}, Ints{2}), ContractError);
}

TEST(Slide, Examples) {
  Ints full{1, 2, 3, 4, 5};
  EXPECT_EQ(slide(full, View<int>(full).subspan(3)), (Ints{3, 4, 5}));
  EXPECT_EQ(slide(Ints{1, 2}, Ints{}), (Ints{1, 2}));
  EXPECT_EQ(slide(Ints{1, 2}, Ints{1, 2}), Ints{});
}

TEST(Slide, ResultIsASuffixOfTheStatedLength) {
  for (const auto& full : all_lists(6, 2)) {
    View<int> whole(full);
    for (std::size_t k = 0; k <= full.size(); ++k) {
      Ints got = slide(full, whole.last(k));
      ASSERT_EQ(got.size(), full.size() - k);
      ASSERT_TRUE(is_value_suffix(View<int>(got), whole));
    }
  }
}

TEST(Slide, NonSuffixIsAContractError) {
  EXPECT_THROW(slide(Ints{1, 2}, Ints{3}), ContractError);
  EXPECT_THROW(slide(Ints{1}, Ints{1, 1}), ContractError);
}

TEST(LongestCommonSuffix, Examples) {
  EXPECT_EQ(longest_common_suffix(eq, Ints{2, 3, 4, 5, 6, 8}, Ints{3, 0, 5, 0, 8}), Ints{8});
  EXPECT_EQ(longest_common_suffix(eq, Ints{}, Ints{1, 2}), Ints{});
  EXPECT_EQ(longest_common_suffix(eq, Ints{7, 8}, Ints{7, 8}), (Ints{7, 8}));
}

TEST(LongestCommonSuffix, MatchesTheOracleExhaustively) {
  auto lists = all_lists(5, 3);
  for (const auto& xs : lists) {
    for (const auto& ys : lists) {
      ASSERT_EQ(longest_common_suffix(eq, xs, ys), oracle_longest_common_suffix(xs, ys));
      if (xs.size() == ys.size()) {
        ASSERT_EQ(common_suffix_same_length(eq, xs, ys), oracle_longest_common_suffix(xs, ys));
      }
    }
  }
}

TEST(LongestCommonSuffix, TailCallBudgetIsTheSumOfLengths) {
  trace::TraceLog example;
  longest_common_suffix(eq, Ints{2, 3, 4, 5, 6, 8}, Ints{3, 0, 5, 0, 8}, trace::Probe(example));
  EXPECT_EQ(example.counters().tail_calls, 11u);

  Rng rng(61);
  for (int i = 0; i < 1000; ++i) {
    Ints xs = rng.list(20, 3), ys = rng.list(20, 3);
    trace::TraceLog log;
    auto got = longest_common_suffix(eq, xs, ys, trace::Probe(log));
    ASSERT_EQ(got, oracle_longest_common_suffix(xs, ys));
    ASSERT_EQ(log.counters().tail_calls, xs.size() + ys.size());
    ASSERT_TRUE(log.balanced());
  }
}

}  // namespace
