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

#include "frontier/scenario.h"

#include <random>
#include <stdexcept>

namespace frontier {

RunConfig VerificationScenario(int index) {
  if (index < 0) throw std::out_of_range("negative scenario index");
  std::mt19937_64 rng(0x5eed0000u + static_cast<std::uint64_t>(index));
  const auto uniform = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  RunConfig c;
  c.verification = true;
  c.epsilon = 0.;
  c.baking = 0;
  c.resolution = 0.1;
  c.n_scans = 12 + 2 * (index % 3);
  c.SetSeed(1000 + index);
  c.lattice_aligned = true;
  c.optimization_every = 2 + index % 2;
  c.correction = index % 4 == 3 ? CorrectionPolicy::kInterpolated
                                : CorrectionPolicy::kSnapToTruth;
  static constexpr EnvironmentKind kKinds[] = {EnvironmentKind::kRoom,
                                               EnvironmentKind::kRingCorridor,
                                               EnvironmentKind::kRooms};
  c.environment.kind = kKinds[index % 3];
  c.environment.width = uniform(6., 9.);
  c.environment.height = uniform(5.5, 8.);
  c.environment.corridor_width =
      c.environment.kind == EnvironmentKind::kRooms ? 1.2 : 1.6;
  c.environment.obstacles = index % 4;
  c.environment.resolution = c.resolution;
  c.lidar.beams = 180;
  c.lidar.max_range = 5.;
  c.trajectory.max_step = 0.2;
  // Scan-matched local SLAM: at most about 0.5 % of the distance travelled.
  c.drift.translation_bias = {uniform(-0.001, 0.001), uniform(-0.001, 0.001)};
  c.drift.rotation_bias = uniform(-0.0003, 0.0003);
  c.drift.translation_noise = 0.0005;
  c.drift.rotation_noise = 0.0002;
  c.drift.consistent_within_submap = true;
  // Keeps the run at 20 submaps or fewer.
  c.max_scans = 9 * c.n_scans;
  return c;
}

RunConfig LoopClosureScenario() {
  RunConfig c;
  c.verification = true;
  c.epsilon = 0.;
  c.baking = 0;
  c.resolution = 0.1;
  c.n_scans = 16;
  c.SetSeed(77);
  c.environment.kind = EnvironmentKind::kRingCorridor;
  c.environment.width = 9.;
  c.environment.height = 7.;
  c.environment.corridor_width = 1.6;
  c.environment.resolution = c.resolution;
  c.lidar.beams = 180;
  c.lidar.max_range = 5.;
  c.drift.translation_bias = {0.012, 0.004};
  c.drift.rotation_bias = 0.002;
  c.drift.translation_noise = 0.002;
  c.drift.consistent_within_submap = true;
  c.optimization_every = 0;
  c.final_optimization = true;
  c.correction = CorrectionPolicy::kSnapToTruth;
  c.lattice_aligned = true;
  return c;
}

RunConfig ClosedRoomScenario() {
  RunConfig c;
  c.verification = true;
  c.epsilon = 0.;
  c.baking = 0;
  c.resolution = 0.1;
  c.n_scans = 10;
  c.SetSeed(5);
  c.environment.kind = EnvironmentKind::kRoom;
  c.environment.width = 4.;
  c.environment.height = 3.5;
  c.environment.resolution = c.resolution;
  c.lidar.beams = 720;
  c.lidar.max_range = 8.;
  c.trajectory.max_step = 0.1;
  c.optimization_every = 0;
  return c;
}

std::shared_ptr<const Submap> MakeEnclosedRoomSubmap(SubmapId id,
                                                     int side_cells,
                                                     int opening_cells,
                                                     double resolution) {
  if (side_cells < 1 || opening_cells < 1 || opening_cells > side_cells) {
    throw std::invalid_argument("bad enclosed room dimensions");
  }
  // Unobserved margin, wall, interior, wall, margin.
  const int size = side_cells + 4;
  const std::uint16_t free_value = ProbabilityToValue(0.2);
  const std::uint16_t occupied_value = ProbabilityToValue(0.8);
  std::vector<std::uint16_t> cells(static_cast<std::size_t>(size) * size,
                                   kUnobservedValue);
  const int open_begin = 2 + (side_cells - opening_cells) / 2;
  for (int row = 1; row < size - 1; ++row) {
    for (int column = 1; column < size - 1; ++column) {
      const bool wall =
          row == 1 || column == 1 || row == size - 2 || column == size - 2;
      const bool opening = row == size - 2 && column >= open_begin &&
                           column < open_begin + opening_cells;
      cells[static_cast<std::size_t>(row) * size + column] =
          wall && !opening ? occupied_value : free_value;
    }
  }
  return std::make_shared<const Submap>(
      Submap::FromStorage(id, resolution, 1, {0, 0}, size, size,
                          std::move(cells), 1, true));
}

ScalingScenario MakeScalingScenario(int side_cells, int count,
                                    int opening_cells, double resolution) {
  ScalingScenario scenario;
  scenario.solution.epoch = 1;
  const int size = side_cells + 4;
  for (int i = 0; i < count; ++i) {
    auto submap =
        MakeEnclosedRoomSubmap(i, side_cells, opening_cells, resolution);
    // Margins of neighbours overlap by two cells.
    const RigidTransform2 pose = RigidTransform2::Translation(i * (size - 2) * resolution, 0.);
    scenario.submaps.push_back({submap, pose, pose});
    scenario.solution.poses[i] = pose;
    scenario.free_cells +=
        static_cast<std::size_t>(side_cells) * side_cells + opening_cells;
  }
  return scenario;
}

}  // namespace frontier
