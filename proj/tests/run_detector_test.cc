/*
 * Copyright 2026 The Frontier Detection Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#include "frontier/run_detector.h"

#include <algorithm>
#include <map>
#include <thread>

#include "frontier/harness.h"
#include "frontier/scenario.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace frontier {
namespace {

constexpr double kR = 0.1;

// Per-submap global frontier, order-independent.
std::map<SubmapId, std::vector<std::pair<double, double>>> FrontierOf(
    const FrontierDetector& detector) {
  std::map<SubmapId, std::vector<std::pair<double, double>>> out;
  for (SubmapId id : detector.submap_ids()) {
    auto& points = out[id];
    for (const Point2& p : detector.global_frontier(id)) points.emplace_back(p.x, p.y);
    std::sort(points.begin(), points.end());
  }
  return out;
}

// Five updates of one growing submap, the last one still unfinished.
std::vector<Event> GrowingSubmapStream() {
  std::vector<Event> events;
  Submap submap(0, kR, 10);
  for (int i = 0; i < 5; ++i) {
    submap.InsertScan({{0.05, 0.05}, {{0.05 + 0.3 * (i + 1), 0.05}, {0.05, 0.05 + 0.2 * i}}},
                      ProbabilityModel{});
    events.push_back(ScanInserted{0, {{std::make_shared<const Submap>(submap), {}, {}}}});
  }
  return events;
}

std::vector<Event> SimulatedStream() {
  RunConfig config = VerificationScenario(1);
  Simulator simulator(config.simulation());
  return simulator.RunAll();
}

TEST(SkipPolicyTest, Names) {
  for (SkipPolicy p : {SkipPolicy::kNone, SkipPolicy::kAdaptive, SkipPolicy::kFinalOnly}) {
    EXPECT_EQ(SkipPolicyFromString(ToString(p)), p);
  }
  EXPECT_THROW(SkipPolicyFromString("sometimes"), std::invalid_argument);
}

TEST(SkipMaskTest, KeepsOnlyNewestOfConsecutiveUpdates) {
  const auto events = GrowingSubmapStream();
  const auto mask = SkipMask(events, SkipPolicy::kAdaptive);
  EXPECT_EQ(mask, (std::vector<bool>{true, true, true, true, false}));
  EXPECT_EQ(SkipMask(events, SkipPolicy::kNone), std::vector<bool>(5, false));

  FrontierDetector all, skipped;
  const RunStats a = RunDetector(all, events, SkipPolicy::kNone);
  const RunStats b = RunDetector(skipped, events, SkipPolicy::kAdaptive);
  EXPECT_EQ(FrontierOf(all), FrontierOf(skipped));
  EXPECT_EQ(a.skipped_scan_events, 0u);
  EXPECT_EQ(b.skipped_scan_events, 4u);
  EXPECT_EQ(b.scan_events, 5u);
  EXPECT_EQ(b.scan_latencies_ms.size(), 1u);
}

TEST(SkipMaskTest, NeverDropsFinishingUpdatesOrCrossesOptimizations) {
  const auto events = SimulatedStream();
  for (SkipPolicy policy : {SkipPolicy::kAdaptive, SkipPolicy::kFinalOnly}) {
    const auto mask = SkipMask(events, policy);
    std::size_t last_scan = 0;
    for (std::size_t i = 0; i < events.size(); ++i) {
      const auto* scan = std::get_if<ScanInserted>(&events[i]);
      if (scan == nullptr) {
        EXPECT_FALSE(mask[i]);
        continue;
      }
      last_scan = i;
      if (HasFinishingSubmap(*scan)) {
        EXPECT_FALSE(mask[i]);
      }
      if (policy == SkipPolicy::kAdaptive && i + 1 < events.size() &&
          std::holds_alternative<OptimizationDone>(events[i + 1])) {
        EXPECT_FALSE(mask[i]);
      }
    }
    EXPECT_FALSE(mask[last_scan]);
  }
}

TEST(RunDetectorTest, EmptyStream) {
  FrontierDetector detector;
  int calls = 0;
  const RunStats stats = RunDetector(detector, {}, SkipPolicy::kAdaptive,
                                     [&](const ProcessedEvent&, const FrontierDetector&) { ++calls; });
  EXPECT_EQ(calls, 0);
  EXPECT_EQ(stats.scan_events, 0u);
  EXPECT_TRUE(stats.scan_latencies_ms.empty());
  EXPECT_EQ(detector.GlobalFrontierSize(), 0u);
}

TEST(RunDetectorTest, OptimizationRunsBetweenUpdatesWithValidState) {
  const auto events = SimulatedStream();
  FrontierDetector detector;
  std::vector<std::size_t> order;
  int optimizations = 0;
  RunDetector(detector, events, SkipPolicy::kNone,
              [&](const ProcessedEvent& processed, const FrontierDetector& d) {
                order.push_back(processed.event_index);
                if (std::holds_alternative<OptimizationDone>(events[processed.event_index])) {
                  ++optimizations;
                }
                EXPECT_TRUE(d.CheckValidityInvariant());
              });
  EXPECT_GT(optimizations, 0);
  EXPECT_TRUE(std::is_sorted(order.begin(), order.end()));
  EXPECT_EQ(order.size(), events.size());
}

TEST(RunDetectorTest, SkippingKeepsFinalFrontier) {
  const auto events = SimulatedStream();
  FrontierDetector none, adaptive, final_only;
  const RunStats a = RunDetector(none, events, SkipPolicy::kNone);
  const RunStats b = RunDetector(adaptive, events, SkipPolicy::kAdaptive);
  const RunStats c = RunDetector(final_only, events, SkipPolicy::kFinalOnly);
  EXPECT_EQ(FrontierOf(none), FrontierOf(adaptive));
  EXPECT_EQ(FrontierOf(none), FrontierOf(final_only));
  EXPECT_EQ(a.scan_events, c.scan_events);
  EXPECT_GT(c.skipped_scan_events, 0u);
  EXPECT_LT(c.scan_latencies_ms.size(), a.scan_latencies_ms.size());
  EXPECT_EQ(a.optimization_events, c.optimization_events);
  EXPECT_EQ(a.finish_events, c.finish_events);
}

TEST(RunDetectorLoopTest, ProducerThreadMatchesRecordedRun) {
  const auto events = SimulatedStream();
  FrontierDetector recorded;
  RunDetector(recorded, events, SkipPolicy::kNone);
  for (SkipPolicy policy : {SkipPolicy::kNone, SkipPolicy::kAdaptive}) {
    EventQueue queue;
    std::thread producer([&] {
      for (const Event& e : events) queue.Push(e);
      queue.Close();
    });
    FrontierDetector live;
    const RunStats stats = RunDetectorLoop(live, queue, policy);
    producer.join();
    EXPECT_EQ(FrontierOf(live), FrontierOf(recorded));
    EXPECT_EQ(stats.scan_events + stats.optimization_events + stats.finish_events,
              events.size());
    if (policy == SkipPolicy::kNone) {
      EXPECT_EQ(stats.skipped_scan_events, 0u);
    }
  }
}

TEST(EventQueueTest, ClosedQueueDrainsThenEnds) {
  EventQueue queue;
  queue.Push(SubmapFinished{0, 1});
  queue.Close();
  EXPECT_THROW(queue.Push(SubmapFinished{0, 2}), std::logic_error);
  EXPECT_EQ(queue.PopAll().size(), 1u);
  EXPECT_TRUE(queue.PopAll().empty());
}

TEST(RunDetectorTest, MalformedEventHalts) {
  std::vector<Event> events = {SubmapFinished{0, 42}};
  FrontierDetector detector;
  EXPECT_THROW(RunDetector(detector, events, SkipPolicy::kNone), DetectorError);
}

}  // namespace
}  // namespace frontier
