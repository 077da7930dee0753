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

#include "frontier/bench_report.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "frontier/detector.h"
#include "frontier/oracle.h"
#include "frontier/scenario.h"

namespace frontier {

namespace {

// Keeps the oracle result alive under optimization.
volatile std::size_t sink = 0;

double MillisecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

LatencySummary LatencySummary::From(std::span<const double> samples_ms) {
  LatencySummary s;
  s.count = samples_ms.size();
  if (s.count == 0) return s;
  std::vector<double> sorted(samples_ms.begin(), samples_ms.end());
  std::ranges::sort(sorted);
  s.min_ms = sorted.front();
  s.max_ms = sorted.back();
  const std::size_t mid = s.count / 2;
  s.median_ms =
      s.count % 2 == 1 ? sorted[mid] : 0.5 * (sorted[mid - 1] + sorted[mid]);
  s.mean_ms = std::accumulate(sorted.begin(), sorted.end(), 0.) / s.count;
  double squares = 0.;
  for (const double v : sorted) squares += (v - s.mean_ms) * (v - s.mean_ms);
  s.stddev_ms = std::sqrt(squares / s.count);
  return s;
}

nlohmann::json LatencySummary::ToJson() const {
  return {{"count", count},       {"mean_ms", mean_ms},
          {"stddev_ms", stddev_ms}, {"median_ms", median_ms},
          {"min_ms", min_ms},     {"max_ms", max_ms}};
}

RunMetrics RunMetrics::From(const RunStats& stats) {
  RunMetrics m;
  m.update_latency = LatencySummary::From(stats.scan_latencies_ms);
  m.optimization_latency = LatencySummary::From(stats.optimization_latencies_ms);
  m.update_frequency_hz =
      m.update_latency.mean_ms > 0. ? 1000. / m.update_latency.mean_ms : 0.;
  const double total_ms =
      std::accumulate(stats.scan_latencies_ms.begin(),
                      stats.scan_latencies_ms.end(), 0.) +
      std::accumulate(stats.optimization_latencies_ms.begin(),
                      stats.optimization_latencies_ms.end(), 0.);
  m.total_processing_s = total_ms / 1000.;
  m.scan_events = stats.scan_events;
  m.skipped_scan_events = stats.skipped_scan_events;
  m.processed_scan_events = stats.scan_events - stats.skipped_scan_events;
  m.finish_events = stats.finish_events;
  m.optimization_events = stats.optimization_events;
  return m;
}

nlohmann::json RunMetrics::ToJson() const {
  return {{"update_latency", update_latency.ToJson()},
          {"optimization_latency", optimization_latency.ToJson()},
          {"update_frequency_hz", update_frequency_hz},
          {"total_processing_s", total_processing_s},
          {"scan_events", scan_events},
          {"processed_scan_events", processed_scan_events},
          {"skipped_scan_events", skipped_scan_events},
          {"finish_events", finish_events},
          {"optimization_events", optimization_events}};
}

nlohmann::json ScalingPoint::ToJson() const {
  return {{"room_side", room_side},
          {"free_cells", free_cells},
          {"local_frontier_points", local_frontier_points},
          {"submap_updates", submap_updates.ToJson()},
          {"optimization", optimization.ToJson()},
          {"oracle", oracle.ToJson()}};
}

std::vector<ScalingPoint> MeasureScaling(const ScalingOptions& options) {
  struct Scale {
    ScalingScenario scenario;
    FrontierDetector detector;
    std::vector<PlacedSubmap> placed;
    std::vector<double> optimization_ms;
    std::vector<double> oracle_ms;
  };
  std::vector<ScalingPoint> points;
  std::vector<Scale> scales;
  for (const int side : options.room_sides) {
    Scale& scale = scales.emplace_back();
    scale.scenario = MakeScalingScenario(side, options.submaps,
                                         options.opening_cells,
                                         options.resolution);
    ScalingPoint& point = points.emplace_back();
    point.room_side = side;
    point.free_cells = scale.scenario.free_cells;
    std::vector<double> update_ms;
    for (const SubmapSnapshot& s : scale.scenario.submaps) {
      const auto start = std::chrono::steady_clock::now();
      scale.detector.HandleSubmapUpdates({s});
      update_ms.push_back(MillisecondsSince(start));
      point.local_frontier_points +=
          scale.detector.local_frontier(s.submap->id())->size();
      scale.placed.push_back({s.submap.get(), s.global_pose});
    }
    point.submap_updates = LatencySummary::From(update_ms);
  }
  // Round-robin over the scales so that drifting machine speed hits all of
  // them alike.
  for (int rep = 0; rep < options.repetitions; ++rep) {
    for (Scale& scale : scales) {
      auto start = std::chrono::steady_clock::now();
      scale.detector.HandleOptimization(scale.scenario.solution);
      scale.optimization_ms.push_back(MillisecondsSince(start));

      start = std::chrono::steady_clock::now();
      const GlobalGrid grid = AssembleGlobalMap(scale.placed, options.resolution,
                                                Execution::kSerial);
      const std::vector<Point2> frontier = NaiveGlobalFrontier(grid);
      scale.oracle_ms.push_back(MillisecondsSince(start));
      sink = sink + frontier.size();
    }
  }
  for (std::size_t i = 0; i < scales.size(); ++i) {
    points[i].optimization = LatencySummary::From(scales[i].optimization_ms);
    points[i].oracle = LatencySummary::From(scales[i].oracle_ms);
  }
  return points;
}

nlohmann::json ScalingToJson(const ScalingOptions& options,
                             std::span<const ScalingPoint> points) {
  nlohmann::json rows = nlohmann::json::array();
  for (const ScalingPoint& p : points) rows.push_back(p.ToJson());
  return {{"submaps", options.submaps},
          {"opening_cells", options.opening_cells},
          {"resolution", options.resolution},
          {"repetitions", options.repetitions},
          {"points", rows}};
}

}  // namespace frontier
