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

#include "frontier/verification.h"

#include <sstream>

namespace frontier {

void VerificationResult::Add(const VerificationResult& other) {
  events += other.events;
  checks += other.checks;
  frontier_points += other.frontier_points;
  missing += other.missing;
  hard_extras += other.hard_extras;
  merge_conflict_extras += other.merge_conflict_extras;
  failures.insert(failures.end(), other.failures.begin(),
                  other.failures.end());
}

nlohmann::json VerificationResult::ToJson() const {
  nlohmann::json failed = nlohmann::json::array();
  for (const EventCheck& check : failures) {
    nlohmann::json j = check.report.ToJson();
    j["event"] = check.event_index;
    failed.push_back(j);
  }
  return {{"events", events},
          {"checks", checks},
          {"frontier_points", frontier_points},
          {"missing", missing},
          {"hard_extras", hard_extras},
          {"merge_conflict_extras", merge_conflict_extras},
          {"merge_conflict_rate", MergeConflictRate()},
          {"ok", ok()},
          {"failures", failed}};
}

std::string VerificationResult::Summary() const {
  std::ostringstream os;
  os << (ok() ? "OK  " : "FAIL") << " events=" << events
     << " checks=" << checks << " frontier_points=" << frontier_points
     << " missing=" << missing << " hard_extras=" << hard_extras
     << " merge_conflict_extras=" << merge_conflict_extras;
  return os.str();
}

void OracleInputs::Apply(const Event& event) {
  if (const auto* scan = std::get_if<ScanInserted>(&event)) {
    for (const SubmapSnapshot& s : scan->active) {
      submaps_[s.submap->id()] = s.submap;
      poses_[s.submap->id()] = s.global_pose;
      resolution_ = s.submap->resolution();
    }
  } else if (const auto* optimized = std::get_if<OptimizationDone>(&event)) {
    for (const auto& [id, pose] : optimized->solution.poses) {
      if (submaps_.contains(id)) poses_[id] = pose;
    }
  }
}

std::vector<PlacedSubmap> OracleInputs::Placed() const {
  std::vector<PlacedSubmap> placed;
  for (const auto& [id, submap] : submaps_) {
    placed.push_back({submap.get(), poses_.at(id)});
  }
  return placed;
}

ComparisonReport CheckAgainstOracle(const OracleInputs& inputs,
                                    std::span<const Point2> frontier) {
  const std::vector<PlacedSubmap> placed = inputs.Placed();
  const GlobalGrid grid = AssembleGlobalMap(placed, inputs.resolution());
  const std::vector<Point2> oracle = NaiveGlobalFrontier(grid);
  return Compare(frontier, oracle, grid);
}

VerificationResult VerifyEvents(
    std::span<const Event> events, const VerificationOptions& options,
    const std::function<void(const EventCheck&)>& on_check) {
  VerificationResult result;
  FrontierDetector detector(options.detector);
  OracleInputs inputs;
  // Recorded stream state: per-submap replacement sets.
  std::map<SubmapId, std::vector<Point2>> recorded_state;
  std::size_t next_recorded = 0;

  for (std::size_t i = 0; i < events.size(); ++i) {
    const Event& event = events[i];
    inputs.Apply(event);
    ++result.events;
    std::vector<Point2> frontier;
    if (options.recorded != nullptr) {
      const auto& recorded = *options.recorded;
      while (next_recorded < recorded.size() &&
             recorded[next_recorded].event_index <= i) {
        const FrontierUpdate& u = recorded[next_recorded].update;
        recorded_state[u.submap] = u.points;
        ++next_recorded;
      }
    } else {
      detector.HandleEvent(event);
    }

    const bool due = (i + 1) % static_cast<std::size_t>(options.oracle_every) ==
                         0 ||
                     i + 1 == events.size() ||
                     std::holds_alternative<OptimizationDone>(event);
    if (!due) continue;
    if (options.recorded != nullptr) {
      for (const auto& [id, points] : recorded_state) {
        frontier.insert(frontier.end(), points.begin(), points.end());
      }
    } else {
      frontier = detector.AllGlobalFrontierPoints();
    }
    EventCheck check{i, CheckAgainstOracle(inputs, frontier)};
    ++result.checks;
    result.frontier_points += frontier.size();
    result.missing += check.report.missing.size();
    result.hard_extras += check.report.hard_extras.size();
    result.merge_conflict_extras += check.report.merge_conflict_extras.size();
    if (on_check) on_check(check);
    if (!check.report.ok() &&
        result.failures.size() < options.max_reported_failures) {
      result.failures.push_back(std::move(check));
    }
  }
  return result;
}

}  // namespace frontier
