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
#include <chrono>
#include <stdexcept>

namespace frontier {

const char* ToString(SkipPolicy policy) {
  switch (policy) {
    case SkipPolicy::kNone:
      return "none";
    case SkipPolicy::kAdaptive:
      return "adaptive";
    case SkipPolicy::kFinalOnly:
      return "final-only";
  }
  return "?";
}

SkipPolicy SkipPolicyFromString(const std::string& name) {
  if (name == "none") return SkipPolicy::kNone;
  if (name == "adaptive") return SkipPolicy::kAdaptive;
  if (name == "final-only") return SkipPolicy::kFinalOnly;
  throw std::invalid_argument("unknown skip policy: " + name);
}

bool HasFinishingSubmap(const ScanInserted& event) {
  return std::ranges::any_of(event.active, [](const SubmapSnapshot& s) {
    return s.submap && s.submap->finished();
  });
}

bool Supersedes(const ScanInserted& next, const ScanInserted& event) {
  if (HasFinishingSubmap(event)) return false;
  return std::ranges::all_of(event.active, [&](const SubmapSnapshot& s) {
    return std::ranges::any_of(next.active, [&](const SubmapSnapshot& n) {
      return n.submap->id() == s.submap->id();
    });
  });
}

std::vector<bool> SkipMask(std::span<const Event> events, SkipPolicy policy) {
  std::vector<bool> skip(events.size(), false);
  if (policy == SkipPolicy::kNone) return skip;
  std::optional<std::size_t> last_scan;
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (std::holds_alternative<ScanInserted>(events[i])) last_scan = i;
  }
  for (std::size_t i = 0; i < events.size(); ++i) {
    const auto* scan = std::get_if<ScanInserted>(&events[i]);
    if (scan == nullptr || i == last_scan) continue;
    if (policy == SkipPolicy::kFinalOnly) {
      skip[i] = !HasFinishingSubmap(*scan);
      continue;
    }
    for (std::size_t j = i + 1; j < events.size(); ++j) {
      if (std::holds_alternative<OptimizationDone>(events[j])) break;
      if (const auto* next = std::get_if<ScanInserted>(&events[j])) {
        skip[i] = Supersedes(*next, *scan);
        break;
      }
    }
  }
  return skip;
}

namespace {

double ElapsedMs(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

void Process(FrontierDetector& detector, std::size_t index, const Event& event,
             RunStats& stats, const EventCallback& callback) {
  const auto start = std::chrono::steady_clock::now();
  ProcessedEvent processed{index, detector.HandleEvent(event), 0.};
  processed.latency_ms = ElapsedMs(start);
  if (std::holds_alternative<ScanInserted>(event)) {
    stats.scan_latencies_ms.push_back(processed.latency_ms);
  } else if (std::holds_alternative<OptimizationDone>(event)) {
    ++stats.optimization_events;
    stats.optimization_latencies_ms.push_back(processed.latency_ms);
  } else {
    ++stats.finish_events;
  }
  if (callback) callback(processed, detector);
}

}  // namespace

RunStats RunDetector(FrontierDetector& detector, std::span<const Event> events,
                     SkipPolicy policy, const EventCallback& callback) {
  RunStats stats;
  const std::vector<bool> skip = SkipMask(events, policy);
  for (std::size_t i = 0; i < events.size(); ++i) {
    if (std::holds_alternative<ScanInserted>(events[i])) ++stats.scan_events;
    if (skip[i]) {
      ++stats.skipped_scan_events;
      continue;
    }
    Process(detector, i, events[i], stats, callback);
  }
  return stats;
}

void EventQueue::Push(Event event) {
  {
    std::lock_guard lock(mutex_);
    if (closed_) throw std::logic_error("push to closed event queue");
    queue_.emplace_back(pushed_++, std::move(event));
  }
  cv_.notify_one();
}

void EventQueue::Close() {
  {
    std::lock_guard lock(mutex_);
    closed_ = true;
  }
  cv_.notify_all();
}

std::vector<std::pair<std::size_t, Event>> EventQueue::PopAll() {
  std::unique_lock lock(mutex_);
  cv_.wait(lock, [this] { return closed_ || !queue_.empty(); });
  std::vector<std::pair<std::size_t, Event>> batch(
      std::make_move_iterator(queue_.begin()),
      std::make_move_iterator(queue_.end()));
  queue_.clear();
  return batch;
}

std::size_t EventQueue::size() const {
  std::lock_guard lock(mutex_);
  return queue_.size();
}

RunStats RunDetectorLoop(FrontierDetector& detector, EventQueue& queue,
                         SkipPolicy policy, const EventCallback& callback) {
  RunStats stats;
  for (;;) {
    auto batch = queue.PopAll();
    if (batch.empty()) break;
    std::vector<Event> events;
    events.reserve(batch.size());
    for (auto& [index, event] : batch) events.push_back(std::move(event));
    // The newest queued update is never dropped; FinalOnly degrades to
    // Adaptive because the end of the stream is unknown here.
    const std::vector<bool> skip = SkipMask(
        events, policy == SkipPolicy::kNone ? SkipPolicy::kNone
                                            : SkipPolicy::kAdaptive);
    for (std::size_t i = 0; i < events.size(); ++i) {
      if (std::holds_alternative<ScanInserted>(events[i])) ++stats.scan_events;
      if (skip[i]) {
        ++stats.skipped_scan_events;
        continue;
      }
      Process(detector, batch[i].first, events[i], stats, callback);
    }
  }
  return stats;
}

}  // namespace frontier
