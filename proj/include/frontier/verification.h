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

#ifndef FRONTIER_VERIFICATION_H_
#define FRONTIER_VERIFICATION_H_

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "frontier/detector.h"
#include "frontier/event_log.h"
#include "frontier/events.h"
#include "frontier/oracle.h"

namespace frontier {

struct VerificationOptions {
  DetectorConfig detector;
  // Oracle cadence in events. Optimization events and the last event are
  // always checked.
  int oracle_every = 1;
  // If set, this recorded frontier stream is checked instead of a fresh
  // detector run.
  const std::vector<RecordedUpdate>* recorded = nullptr;
  std::size_t max_reported_failures = 20;
};

struct EventCheck {
  std::size_t event_index = 0;
  ComparisonReport report;
};

struct VerificationResult {
  std::size_t events = 0;
  std::size_t checks = 0;
  std::size_t frontier_points = 0;
  std::size_t missing = 0;
  std::size_t hard_extras = 0;
  std::size_t merge_conflict_extras = 0;
  std::vector<EventCheck> failures;

  bool ok() const { return missing == 0 && hard_extras == 0; }
  double MergeConflictRate() const {
    return frontier_points == 0
               ? 0.
               : static_cast<double>(merge_conflict_extras) / frontier_points;
  }
  void Add(const VerificationResult& other);
  nlohmann::json ToJson() const;
  std::string Summary() const;
};

// Latest grid and pose of every submap seen so far, rebuilt from the events
// alone.
class OracleInputs {
 public:
  void Apply(const Event& event);
  std::vector<PlacedSubmap> Placed() const;
  double resolution() const { return resolution_; }

 private:
  std::map<SubmapId, std::shared_ptr<const Submap>> submaps_;
  std::map<SubmapId, RigidTransform2> poses_;
  double resolution_ = 0.05;
};

ComparisonReport CheckAgainstOracle(const OracleInputs& inputs,
                                    std::span<const Point2> frontier);

VerificationResult VerifyEvents(
    std::span<const Event> events, const VerificationOptions& options,
    const std::function<void(const EventCheck&)>& on_check = {});

}  // namespace frontier

#endif  // FRONTIER_VERIFICATION_H_
