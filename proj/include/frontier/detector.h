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

#ifndef FRONTIER_DETECTOR_H_
#define FRONTIER_DETECTOR_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "frontier/events.h"
#include "frontier/geometry.h"
#include "frontier/grid.h"
#include "frontier/spatial_index.h"

namespace frontier {

struct DetectorConfig {
  // Free probabilities in [0.5 - epsilon, 0.5] count as unobserved.
  double epsilon = 0.;
  // Require >= 2 free and >= 2 unobserved neighbours.
  bool smoothing = false;
  // Number of preceding submaps whose observed cells permanently remove local
  // frontier candidates, tested with unoptimized poses. 0 disables.
  int baking_submaps = 0;
};

struct LocalFrontier {
  SubmapId owner = 0;
  std::vector<CellIndex> cells;
  // hints[i]: submap that last failed a stabbing test for cells[i].
  std::vector<std::optional<SubmapId>> hints;

  std::size_t size() const { return cells.size(); }
};

// Full replacement of one submap's global frontier.
struct FrontierUpdate {
  SubmapId submap = 0;
  std::vector<Point2> points;

  friend bool operator==(const FrontierUpdate&,
                         const FrontierUpdate&) = default;
};

class DetectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Passes when `global_point` lands on an unobserved cell of `submap` placed at
// `pose`, or outside its grid.
bool StabbingQueryTest(const Point2& global_point, const Submap& submap,
                       const RigidTransform2& pose, double epsilon);

// Submap whose observed cells veto local frontier candidates of another.
struct BakingReference {
  const Submap* submap = nullptr;
  // Maps the candidate submap's local frame into this submap's local frame.
  RigidTransform2 from_candidate;
};

LocalFrontier DetectLocalFrontier(
    const Submap& submap, const DetectorConfig& config,
    std::span<const BakingReference> baking = {});

struct DetectorStats {
  std::uint64_t stabbing_tests = 0;
  std::uint64_t tested_points = 0;
  std::uint64_t failing_points = 0;
  std::uint64_t stabbing_tests_on_failing_points = 0;
  std::uint64_t hint_rejections = 0;
};

// Owns all frontier state. Single-threaded: one event loop drives it.
class FrontierDetector {
 public:
  explicit FrontierDetector(DetectorConfig config = {});

  // Submap update event: recomputes the active submaps' frontiers and removes
  // points of intersecting finished submaps that the new grids cover.
  std::vector<FrontierUpdate> HandleSubmapUpdates(
      const std::vector<SubmapSnapshot>& active);

  // Pose graph optimization event: re-projects and re-tests every local
  // frontier under the new poses.
  std::vector<FrontierUpdate> HandleOptimization(
      const PoseGraphSolution& solution);

  std::vector<FrontierUpdate> HandleEvent(const Event& event);

  const DetectorConfig& config() const { return config_; }
  // Counters of the most recent Handle* call.
  const DetectorStats& last_stats() const { return last_stats_; }

  std::vector<SubmapId> submap_ids() const;
  std::vector<SubmapId> active_ids() const { return active_; }
  const Submap* submap(SubmapId id) const;
  std::optional<RigidTransform2> pose(SubmapId id) const;
  const LocalFrontier* local_frontier(SubmapId id) const;
  const std::vector<Point2>& global_frontier(SubmapId id) const;
  std::vector<Point2> AllGlobalFrontierPoints() const;
  std::size_t GlobalFrontierSize() const;
  const BoundingBoxIndex& index() const { return index_; }

  // Re-tests every stored global point against every other submap.
  bool CheckValidityInvariant() const;

 private:
  struct SubmapState {
    std::shared_ptr<const Submap> submap;
    RigidTransform2 pose;
    RigidTransform2 pose_inverse;
    RigidTransform2 local_pose;
    std::optional<BoundingBox> box;
    LocalFrontier local;
    std::vector<Point2> global;
  };

  void SetPose(SubmapState& state, const RigidTransform2& pose);
  bool Stab(const Point2& p, const SubmapState& state);
  std::vector<SubmapId> TestSet(SubmapId self,
                                const std::vector<SubmapId>& intersecting) const;
  std::vector<BakingReference> BakingReferences(SubmapId id) const;

  DetectorConfig config_;
  std::map<SubmapId, SubmapState> states_;
  std::vector<SubmapId> active_;
  BoundingBoxIndex index_;
  DetectorStats last_stats_;
};

}  // namespace frontier

#endif  // FRONTIER_DETECTOR_H_
