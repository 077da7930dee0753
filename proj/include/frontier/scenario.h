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

#ifndef FRONTIER_SCENARIO_H_
#define FRONTIER_SCENARIO_H_

#include <memory>
#include <vector>

#include "frontier/config.h"
#include "frontier/events.h"
#include "frontier/grid.h"

namespace frontier {

inline constexpr int kVerificationScenarioCount = 24;

// Small randomized scenarios (rooms, ring corridors, four-room loops) at
// r = 0.1 with at most 20 submaps, in the verification profile.
RunConfig VerificationScenario(int index);

// Ring corridor with strong odometry bias and a single final snap-to-truth
// optimization.
RunConfig LoopClosureScenario();

// Small closed room, explored with dense scans.
RunConfig ClosedRoomScenario();

// Finished submap holding a square room of `side_cells` free cells enclosed
// by an occupied wall with an `opening_cells` wide gap in its top side.
// Outside the wall is unobserved.
std::shared_ptr<const Submap> MakeEnclosedRoomSubmap(SubmapId id,
                                                     int side_cells,
                                                     int opening_cells,
                                                     double resolution);

// `count` enclosed rooms in a row, neighbouring bounding boxes overlapping.
// The free area grows with side_cells squared, the local frontiers do not.
struct ScalingScenario {
  std::vector<SubmapSnapshot> submaps;
  PoseGraphSolution solution;
  std::size_t free_cells = 0;
};
ScalingScenario MakeScalingScenario(int side_cells, int count,
                                    int opening_cells, double resolution);

}  // namespace frontier

#endif  // FRONTIER_SCENARIO_H_
