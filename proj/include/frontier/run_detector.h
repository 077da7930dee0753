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

#ifndef FRONTIER_RUN_DETECTOR_H_
#define FRONTIER_RUN_DETECTOR_H_

#include <condition_variable>
#include <cstdint>
#include <deque>
#include <functional>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "frontier/detector.h"
#include "frontier/events.h"

namespace frontier {

enum class SkipPolicy {
  kNone,
  // Drop a non-final submap update when a newer update of the same submaps
  // is already queued behind it.
  kAdaptive,
  // Process only updates that finish a submap, plus the last update of the
  // stream.
  kFinalOnly,
};

const char* ToString(SkipPolicy policy);
SkipPolicy SkipPolicyFromString(const std::string& name);

struct ProcessedEvent {
  std::size_t event_index = 0;
  std::vector<FrontierUpdate> updates;
  double latency_ms = 0.;
};

struct RunStats {
  std::uint64_t scan_events = 0;
  std::uint64_t skipped_scan_events = 0;
  std::uint64_t optimization_events = 0;
  std::uint64_t finish_events = 0;
  std::vector<double> scan_latencies_ms;
  std::vector<double> optimization_latencies_ms;
};

// Called after every processed event with the detector state current.
using EventCallback =
    std::function<void(const ProcessedEvent&, const FrontierDetector&)>;

// True when `event` is a scan update that `next` makes redundant.
bool Supersedes(const ScanInserted& next, const ScanInserted& event);
bool HasFinishingSubmap(const ScanInserted& event);

// Decides which events of a fully queued stream a policy drops.
std::vector<bool> SkipMask(std::span<const Event> events, SkipPolicy policy);

// Runs the detector over a recorded stream, in order.
RunStats RunDetector(FrontierDetector& detector, std::span<const Event> events,
                     SkipPolicy policy, const EventCallback& callback = {});

// Producer/consumer hand-off between the SLAM side and the detector loop.
class EventQueue {
 public:
  void Push(Event event);
  void Close();
  // Blocks until events are available; empty once closed and drained.
  std::vector<std::pair<std::size_t, Event>> PopAll();
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::condition_variable cv_;
  std::deque<std::pair<std::size_t, Event>> queue_;
  std::size_t pushed_ = 0;
  bool closed_ = false;
};

// Consumes `queue` until it is closed. With kAdaptive, updates superseded
// within a drained batch are skipped.
RunStats RunDetectorLoop(FrontierDetector& detector, EventQueue& queue,
                         SkipPolicy policy, const EventCallback& callback = {});

}  // namespace frontier

#endif  // FRONTIER_RUN_DETECTOR_H_
