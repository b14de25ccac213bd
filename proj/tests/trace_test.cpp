#include <gtest/gtest.h>

#include <stdexcept>

#include "support.hpp"

namespace {

using namespace taba;
using namespace taba::trace;
using taba::testing::Ints;
using taba::testing::Rng;

Event call(std::string label, std::string args, std::size_t depth) {
  return Event{EventKind::call, std::move(label), std::move(args), std::nullopt, depth};
}
Event tail(std::string label, std::string args, std::size_t depth) {
  return Event{EventKind::tail_call, std::move(label), std::move(args), std::nullopt, depth};
}
Event ret(std::string label, std::string args, std::string result, std::size_t depth) {
  return Event{EventKind::ret, std::move(label), std::move(args), std::move(result), depth};
}

TEST(TraceRecord, Examples) {
  TraceLog log = record(TraceLog{}, call("visit", "[1]", 0));
  EXPECT_EQ(log.events().size(), 1u);
  EXPECT_EQ(log.counters().calls, 1u);

  TraceLog closed = record(log, ret("visit", "[1]", "[]", 0));
  EXPECT_TRUE(closed.balanced());
  EXPECT_EQ(closed.counters().returns, 1u);

  TraceLog tailed = record(log, tail("visit", "[]", 0));
  EXPECT_EQ(tailed.open_frames(), 1u);
  EXPECT_EQ(tailed.counters().tail_calls, 1u);
}

TEST(TraceRecord, RejectsNestingViolations) {
  TraceLog empty;
  EXPECT_THROW(empty.record(ret("f", "", "x", 0)), ContractError);
  EXPECT_THROW(empty.record(tail("f", "", 0)), ContractError);
  EXPECT_THROW(empty.record(call("f", "", 1)), ContractError);

  TraceLog open = record(TraceLog{}, call("f", "", 0));
  EXPECT_THROW(open.record(ret("g", "", "x", 0)), ContractError);
  EXPECT_THROW(open.record(ret("f", "", "x", 1)), ContractError);
  EXPECT_THROW(open.record(tail("f", "", 1)), ContractError);
  EXPECT_THROW(open.record(Event{EventKind::ret, "f", "", std::nullopt, 0}), ContractError);
}

TEST(TraceRender, Examples) {
  TraceLog log;
  log.record(call("visit", render(Ints{1, 2}), 0));
  EXPECT_EQ(render_trace(log), "visit [1; 2] ->\n");
  log.record(ret("visit", render(Ints{1, 2}), render(std::pair(Ints{2}, PairList<int>{{1, 2}})), 0));
  EXPECT_EQ(render_trace(log), "visit [1; 2] ->\nvisit [1; 2] <- ([2], [(1, 2)])\n");
  EXPECT_EQ(render_trace(TraceLog{}), "");
}

TEST(TraceRender, ValueConventions) {
  EXPECT_EQ(render(true), "true");
  EXPECT_EQ(render(std::optional<int>()), "None");
  EXPECT_EQ(render(std::optional<int>(3)), "Some 3");
  EXPECT_EQ(render(std::optional<int>(-3)), "Some (-3)");
  EXPECT_EQ(render(std::optional<Ints>(Ints{})), "Some []");
  EXPECT_EQ(render(PairList<int>{{1, 2}, {3, 4}}), "[(1, 2); (3, 4)]");
}

TEST(TraceProbe, FramesCloseOnException) {
  TraceLog log;
  Probe probe(log);
  EXPECT_THROW(
      {
        auto outer = probe.enter("outer", 1);
        auto inner = probe.enter("inner", 2);
        throw std::runtime_error("escape");
      },
      std::runtime_error);
  EXPECT_TRUE(log.balanced());
  EXPECT_EQ(log.events().back().result, std::string(kRaisesResult));
}

TEST(TraceProbe, NullProbeRecordsNothing) {
  Probe probe;
  auto frame = probe.enter("f", 1);
  probe.tail_call("g", 2);
  EXPECT_EQ(frame.leave(5), 5);
  EXPECT_FALSE(probe.active());
}

TEST(TraceCounters, RecursiveCallsSkipTheEntry) {
  TraceLog log;
  log.record(call("top", "", 0));
  log.record(call("visit", "", 1));
  log.record(tail("visit", "", 1));
  log.record(tail("visit", "", 1));
  log.record(tail("other", "", 1));
  log.record(tail("visit", "", 1));
  log.record(ret("visit", "", "r", 1));
  log.record(ret("top", "", "r", 0));
  EXPECT_EQ(log.recursive_calls("visit"), 2u);
  EXPECT_EQ(log.count(EventKind::tail_call, "visit"), 3u);
}

TraceLog random_balanced_log(Rng& rng) {
  static const char* labels[] = {"visit", "walk", "k", "aux"};
  TraceLog log;
  std::vector<std::string> open;
  std::size_t steps = 1 + rng.below(40);
  for (std::size_t i = 0; i < steps; ++i) {
    std::string label = labels[rng.below(4)];
    std::string args = rng.coin() ? render(rng.list(3, 5)) : "";
    std::size_t choice = rng.below(3);
    if (open.empty() || choice == 0) {
      log.record(call(label, args, open.size()));
      open.push_back(label);
    } else if (choice == 1) {
      log.record(tail(label, args, open.size() - 1));
    } else {
      log.record(ret(open.back(), args, render(rng.list(2, 5)), open.size() - 1));
      open.pop_back();
    }
  }
  while (!open.empty()) {
    log.record(ret(open.back(), "", "()", open.size() - 1));
    open.pop_back();
  }
  return log;
}

TEST(TraceRoundTrip, ShapeSurvivesRendering) {
  Rng rng(20261014);
  for (int i = 0; i < 200; ++i) {
    TraceLog log = random_balanced_log(rng);
    std::vector<ShapeLine> expected;
    for (const auto& e : log.events()) expected.push_back({e.kind, e.depth});
    ASSERT_EQ(parse_trace_shape(render_trace(log)), expected) << render_trace(log);
  }
}

TEST(TraceRoundTrip, RejectsMalformedText) {
  EXPECT_THROW(parse_trace_shape("f ->\n"), ParseError);
  EXPECT_THROW(parse_trace_shape(" f ->\n"), ParseError);
  EXPECT_THROW(parse_trace_shape("f <- 1\n"), ParseError);
  EXPECT_THROW(parse_trace_shape("f ->\nf <- 1"), ParseError);
  EXPECT_THROW(parse_trace_shape("f\n"), ParseError);
}

}  // namespace
