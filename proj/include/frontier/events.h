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

#ifndef FRONTIER_EVENTS_H_
#define FRONTIER_EVENTS_H_

#include <map>
#include <memory>
#include <variant>
#include <vector>

#include "frontier/geometry.h"
#include "frontier/grid.h"
#include "frontier/spatial_index.h"

namespace frontier {

// Global submap poses produced by one pose graph optimization.
struct PoseGraphSolution {
  std::map<SubmapId, RigidTransform2> poses;
  int epoch = 0;

  friend bool operator==(const PoseGraphSolution&,
                         const PoseGraphSolution&) = default;
};

// Immutable copy of an active submap as handed to the detector.
struct SubmapSnapshot {
  std::shared_ptr<const Submap> submap;
  // Current global pose of the submap origin.
  RigidTransform2 global_pose;
  // Pose in the unoptimized odometry frame; never changed by optimization.
  RigidTransform2 local_pose;
};

struct ScanInserted {
  int epoch = 0;
  std::vector<SubmapSnapshot> active;
};

struct SubmapFinished {
  int epoch = 0;
  SubmapId id = 0;
};

struct OptimizationDone {
  PoseGraphSolution solution;
};

using Event = std::variant<ScanInserted, SubmapFinished, OptimizationDone>;

bool SameSubmap(const Submap& a, const Submap& b);
bool operator==(const SubmapSnapshot& a, const SubmapSnapshot& b);
bool operator==(const ScanInserted& a, const ScanInserted& b);
bool operator==(const SubmapFinished& a, const SubmapFinished& b);
bool operator==(const OptimizationDone& a, const OptimizationDone& b);

}  // namespace frontier

#endif  // FRONTIER_EVENTS_H_
