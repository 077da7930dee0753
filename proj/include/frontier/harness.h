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

#ifndef FRONTIER_HARNESS_H_
#define FRONTIER_HARNESS_H_

// Deterministic stand-in for a submap-based graph SLAM system. It does not
// scan-match or optimize: pose solutions are synthesized from ground truth.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "frontier/events.h"
#include "frontier/geometry.h"
#include "frontier/grid.h"

namespace frontier {

class HarnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EnvironmentKind { kRoom, kRingCorridor, kRooms };

const char* ToString(EnvironmentKind kind);
EnvironmentKind EnvironmentKindFromString(const std::string& name);

struct EnvironmentSpec {
  EnvironmentKind kind = EnvironmentKind::kRoom;
  // Outer size in meters.
  double width = 10.;
  double height = 10.;
  // Ring corridor: corridor width. Rooms: door width.
  double corridor_width = 2.;
  double wall_thickness = 0.2;
  // Random square obstacles placed away from the robot path.
  int obstacles = 0;
  double resolution = 0.05;
};

// Ground-truth occupancy over [0, width] x [0, height] in the world frame.
// Cell (i, j) covers [i r, (i+1) r] x [j r, (j+1) r]; outside is free.
struct Environment {
  EnvironmentSpec spec;
  std::uint64_t seed = 0;
  int columns = 0;
  int rows = 0;
  std::vector<std::uint8_t> occupied;
  // Loop the robot follows, in world coordinates.
  std::vector<Point2> route;

  bool OccupiedCell(int i, int j) const {
    if (i < 0 || j < 0 || i >= columns || j >= rows) return false;
    return occupied[static_cast<std::size_t>(j) * columns + i] != 0;
  }
  bool OccupiedAt(const Point2& p) const;

  friend bool operator==(const Environment& a, const Environment& b) {
    return a.seed == b.seed && a.columns == b.columns && a.rows == b.rows &&
           a.occupied == b.occupied;
  }
};

Environment GenerateEnvironment(std::uint64_t seed,
                                const EnvironmentSpec& spec);

struct TrajectorySpec {
  int laps = 1;
  double max_step = 0.2;
  double max_turn = 0.2;
};

// Ground-truth poses at scan times following the environment's route.
std::vector<RigidTransform2> PlanTrajectory(const Environment& env,
                                            const TrajectorySpec& spec);

// Steps along `waypoints`, turning in place first, with per-step limits.
std::vector<RigidTransform2> InterpolateWaypoints(
    const std::vector<Point2>& waypoints, double max_step, double max_turn);

struct LidarConfig {
  int beams = 360;
  double max_range = 8.;
  double angle_span = 6.283185307179586;
};

// Hits in the robot frame (origin at 0). Beams without a return within
// max_range produce no point.
Scan SimulateScan(const Environment& env, const RigidTransform2& pose,
                  const LidarConfig& lidar);

struct DriftModel {
  // Added to the odometric pose every step, in the odometry frame.
  Point2 translation_bias;
  double rotation_bias = 0.;
  double translation_noise = 0.;
  double rotation_noise = 0.;
  std::uint64_t seed = 0;
  // Local SLAM keeps each submap self-consistent: scans go into a submap with
  // the odometry error frozen at its creation, so drift shows up only between
  // submaps.
  bool consistent_within_submap = false;
};

// Integrates true motion into a drifting odometric pose.
class Odometry {
 public:
  explicit Odometry(const DriftModel& model);
  RigidTransform2 Step(const RigidTransform2& true_pose);

 private:
  DriftModel model_;
  std::mt19937_64 rng_;
  bool started_ = false;
  RigidTransform2 last_true_;
  RigidTransform2 odometric_;
};

enum class CorrectionPolicy { kSnapToTruth, kInterpolated };

const char* ToString(CorrectionPolicy policy);
CorrectionPolicy CorrectionPolicyFromString(const std::string& name);

// Rounds translation to multiples of `resolution` and rotation to multiples
// of pi/2, so submap lattices coincide with the global lattice.
RigidTransform2 QuantizeToLattice(const RigidTransform2& pose,
                                  double resolution);

// New solution from `current` and ground truth. kInterpolated spreads the
// newest submap's error linearly: the i-th submap (0-based, by id) moves by
// (i+1)/N of it.
PoseGraphSolution TriggerOptimization(
    const PoseGraphSolution& current,
    const std::map<SubmapId, RigidTransform2>& truth, CorrectionPolicy policy);

struct TrajectoryBuilderConfig {
  double resolution = 0.05;
  int n_scans = 100;
  ProbabilityModel probabilities;
};

// The local trajectory builder's active submap pair. Submap i starts when the
// newest submap holds n_scans/2 scans and finishes on its n_scans-th scan.
class TrajectoryBuilder {
 public:
  explicit TrajectoryBuilder(const TrajectoryBuilderConfig& config);

  struct Inserted {
    // Submap created by this step, if any.
    std::optional<SubmapId> created;
    std::vector<SubmapId> finished;
  };

  // Inserts a robot-frame scan taken at `odometric_pose` into both active
  // submaps. A submap created by this call gets `new_submap_pose` as its
  // local pose if given, else the lattice-rounded odometric position.
  // `corrections` optionally maps a submap id to a transform applied to
  // `odometric_pose` for that submap only.
  Inserted AddScan(const Scan& scan, const RigidTransform2& odometric_pose,
                   const std::optional<RigidTransform2>& new_submap_pose =
                       std::nullopt,
                   const std::map<SubmapId, RigidTransform2>& corrections = {});

  std::vector<SubmapSnapshot> Snapshots(
      const std::map<SubmapId, RigidTransform2>& global_poses) const;
  const std::vector<std::shared_ptr<Submap>>& active() const { return active_; }
  const std::map<SubmapId, RigidTransform2>& local_poses() const {
    return local_poses_;
  }
  int next_id() const { return next_id_; }

 private:
  TrajectoryBuilderConfig config_;
  std::vector<std::shared_ptr<Submap>> active_;
  std::vector<std::shared_ptr<Submap>> last_inserted_;
  std::map<SubmapId, RigidTransform2> local_poses_;
  int next_id_ = 0;
};

struct SimulationConfig {
  EnvironmentSpec environment;
  std::uint64_t environment_seed = 1;
  TrajectorySpec trajectory;
  LidarConfig lidar;
  DriftModel drift;
  TrajectoryBuilderConfig builder;
  // Optimize after every this many finished submaps; 0 disables.
  int optimization_every = 3;
  CorrectionPolicy correction = CorrectionPolicy::kSnapToTruth;
  bool final_optimization = true;
  bool lattice_aligned = true;
  // Negative: the whole planned trajectory.
  int max_scans = -1;
};

class Simulator {
 public:
  explicit Simulator(const SimulationConfig& config);

  bool Done() const { return step_ >= trajectory_.size(); }
  std::size_t total_scans() const { return trajectory_.size(); }
  // One scan: a ScanInserted, then SubmapFinished / OptimizationDone as due.
  std::vector<Event> Step();
  // Final optimization, if configured and any submap finished.
  std::vector<Event> Finish();
  std::vector<Event> RunAll();

  const Environment& environment() const { return environment_; }
  const PoseGraphSolution& solution() const { return solution_; }
  const std::map<SubmapId, RigidTransform2>& truth() const { return truth_; }
  // Largest translation between a submap's current and true pose.
  double MaxPoseError() const;

 private:
  RigidTransform2 GlobalPose(SubmapId id) const;
  OptimizationDone Optimize();

  SimulationConfig config_;
  Environment environment_;
  std::vector<RigidTransform2> trajectory_;
  std::size_t step_ = 0;
  Odometry odometry_;
  TrajectoryBuilder builder_;
  PoseGraphSolution solution_;
  RigidTransform2 global_from_odometry_;
  std::map<SubmapId, RigidTransform2> truth_;
  // Odometry error (odometric * true^-1) when each submap was created.
  std::map<SubmapId, RigidTransform2> creation_error_;
  int finished_count_ = 0;
  bool finalized_ = false;
};

}  // namespace frontier

#endif  // FRONTIER_HARNESS_H_
