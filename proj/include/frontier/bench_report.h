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

#ifndef FRONTIER_BENCH_REPORT_H_
#define FRONTIER_BENCH_REPORT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "json.hpp"

#include "frontier/run_detector.h"

namespace frontier {

struct LatencySummary {
  std::size_t count = 0;
  double mean_ms = 0.;
  double stddev_ms = 0.;
  double median_ms = 0.;
  double min_ms = 0.;
  double max_ms = 0.;

  static LatencySummary From(std::span<const double> samples_ms);
  nlohmann::json ToJson() const;
};

// Per-run metrics: update latency distribution, update frequency and event
// counts.
struct RunMetrics {
  LatencySummary update_latency;
  LatencySummary optimization_latency;
  // 1000 / mean update latency; 0 without updates.
  double update_frequency_hz = 0.;
  double total_processing_s = 0.;
  std::uint64_t scan_events = 0;
  std::uint64_t processed_scan_events = 0;
  std::uint64_t skipped_scan_events = 0;
  std::uint64_t finish_events = 0;
  std::uint64_t optimization_events = 0;

  static RunMetrics From(const RunStats& stats);
  nlohmann::json ToJson() const;
};

struct ScalingOptions {
  std::vector<int> room_sides = {40, 80, 160};
  int submaps = 6;
  int opening_cells = 8;
  double resolution = 0.05;
  int repetitions = 15;
};

struct ScalingPoint {
  int room_side = 0;
  std::size_t free_cells = 0;
  std::size_t local_frontier_points = 0;
  LatencySummary submap_updates;
  LatencySummary optimization;
  LatencySummary oracle;
  nlohmann::json ToJson() const;
};

// Times the update and optimization handlers against full map assembly plus
// naive edge detection (serial) on the enclosed-room family.
std::vector<ScalingPoint> MeasureScaling(const ScalingOptions& options);

nlohmann::json ScalingToJson(const ScalingOptions& options,
                             std::span<const ScalingPoint> points);

}  // namespace frontier

#endif  // FRONTIER_BENCH_REPORT_H_
