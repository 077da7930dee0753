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

#include "frontier/harness.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace frontier {

const char* ToString(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::kRoom:
      return "room";
    case EnvironmentKind::kRingCorridor:
      return "ring";
    case EnvironmentKind::kRooms:
      return "rooms";
  }
  return "?";
}

EnvironmentKind EnvironmentKindFromString(const std::string& name) {
  if (name == "room") return EnvironmentKind::kRoom;
  if (name == "ring") return EnvironmentKind::kRingCorridor;
  if (name == "rooms") return EnvironmentKind::kRooms;
  throw std::invalid_argument("unknown environment kind: " + name);
}

bool Environment::OccupiedAt(const Point2& p) const {
  return OccupiedCell(AxisIndexOf(p.x, spec.resolution),
                      AxisIndexOf(p.y, spec.resolution));
}

namespace {

class Painter {
 public:
  explicit Painter(Environment& env) : env_(env) {}

  // Sets every cell whose center lies in [x0, x1] x [y0, y1].
  void Fill(double x0, double y0, double x1, double y1, std::uint8_t value) {
    const double r = env_.spec.resolution;
    const int i0 = std::max(0, static_cast<int>(std::ceil(x0 / r - 0.5)));
    const int i1 =
        std::min(env_.columns - 1, static_cast<int>(std::floor(x1 / r - 0.5)));
    const int j0 = std::max(0, static_cast<int>(std::ceil(y0 / r - 0.5)));
    const int j1 =
        std::min(env_.rows - 1, static_cast<int>(std::floor(y1 / r - 0.5)));
    for (int j = j0; j <= j1; ++j) {
      for (int i = i0; i <= i1; ++i) {
        env_.occupied[static_cast<std::size_t>(j) * env_.columns + i] = value;
      }
    }
  }

 private:
  Environment& env_;
};

// Number of 4-connected free components inside the outer bounds.
int FreeComponents(const Environment& env) {
  std::vector<std::uint8_t> seen(env.occupied.size(), 0);
  int components = 0;
  for (int start = 0; start < static_cast<int>(env.occupied.size()); ++start) {
    if (env.occupied[start] || seen[start]) continue;
    ++components;
    std::queue<int> open;
    open.push(start);
    seen[start] = 1;
    while (!open.empty()) {
      const int c = open.front();
      open.pop();
      const int i = c % env.columns;
      const int j = c / env.columns;
      const int neighbours[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
      for (const auto& d : neighbours) {
        const int ni = i + d[0];
        const int nj = j + d[1];
        if (ni < 0 || nj < 0 || ni >= env.columns || nj >= env.rows) continue;
        const int n = nj * env.columns + ni;
        if (!env.occupied[n] && !seen[n]) {
          seen[n] = 1;
          open.push(n);
        }
      }
    }
  }
  return components;
}

double DistanceToSegment(const Point2& p, const Point2& a, const Point2& b) {
  const Point2 ab = b - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = len2 > 0. ? ((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2 : 0.;
  t = std::clamp(t, 0., 1.);
  return (p - (a + t * ab)).Norm();
}

double DistanceToRoute(const Point2& p, const std::vector<Point2>& route) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < route.size(); ++i) {
    best = std::min(best, DistanceToSegment(p, route[i],
                                            route[(i + 1) % route.size()]));
  }
  return best;
}

std::vector<Point2> Rectangle(double x0, double y0, double x1, double y1) {
  return {{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}};
}

}  // namespace

Environment GenerateEnvironment(std::uint64_t seed,
                                const EnvironmentSpec& spec) {
  const double r = spec.resolution;
  const double t = spec.wall_thickness;
  if (!(r > 0.) || !(spec.width > 0.) || !(spec.height > 0.) || !(t >= r)) {
    throw HarnessError("environment needs positive size, resolution and walls");
  }
  Environment env;
  env.spec = spec;
  env.seed = seed;
  env.columns = static_cast<int>(std::lround(spec.width / r));
  env.rows = static_cast<int>(std::lround(spec.height / r));
  env.occupied.assign(static_cast<std::size_t>(env.columns) * env.rows, 0);
  Painter paint(env);
  const double w = spec.width;
  const double h = spec.height;
  const double c = spec.corridor_width;
  constexpr double kClearance = 0.6;

  paint.Fill(0., 0., w, t, 1);
  paint.Fill(0., h - t, w, h, 1);
  paint.Fill(0., 0., t, h, 1);
  paint.Fill(w - t, 0., w, h, 1);

  switch (spec.kind) {
    case EnvironmentKind::kRoom: {
      const double inset = std::min(w, h) * 0.3;
      if (inset < t + kClearance) throw HarnessError("room too small");
      env.route = Rectangle(inset, inset, w - inset, h - inset);
      break;
    }
    case EnvironmentKind::kRingCorridor: {
      if (c < 2 * kClearance || w - 2 * (t + c) < 2 * r ||
          h - 2 * (t + c) < 2 * r) {
        throw HarnessError("ring corridor does not fit");
      }
      paint.Fill(t + c, t + c, w - t - c, h - t - c, 1);
      const double mid = t + c / 2;
      env.route = Rectangle(mid, mid, w - mid, h - mid);
      break;
    }
    case EnvironmentKind::kRooms: {
      const double room_w = (w - 3 * t) / 2;
      const double room_h = (h - 3 * t) / 2;
      if (c < 2 * kClearance || room_w < c + 2 * kClearance ||
          room_h < c + 2 * kClearance) {
        throw HarnessError("rooms do not fit");
      }
      paint.Fill(w / 2 - t / 2, 0., w / 2 + t / 2, h, 1);
      paint.Fill(0., h / 2 - t / 2, w, h / 2 + t / 2, 1);
      const double qx = t + room_w / 2;
      const double qy = t + room_h / 2;
      // One door in each inner wall segment makes the four rooms a cycle.
      paint.Fill(w / 2 - t, qy - c / 2, w / 2 + t, qy + c / 2, 0);
      paint.Fill(w / 2 - t, h - qy - c / 2, w / 2 + t, h - qy + c / 2, 0);
      paint.Fill(qx - c / 2, h / 2 - t, qx + c / 2, h / 2 + t, 0);
      paint.Fill(w - qx - c / 2, h / 2 - t, w - qx + c / 2, h / 2 + t, 0);
      env.route = Rectangle(qx, qy, w - qx, h - qy);
      break;
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> size_dist(0.2, 0.5);
  std::uniform_real_distribution<double> x_dist(0., w);
  std::uniform_real_distribution<double> y_dist(0., h);
  int placed = 0;
  for (int attempt = 0; placed < spec.obstacles && attempt < 200 * (spec.obstacles + 1);
       ++attempt) {
    const double s = size_dist(rng);
    const Point2 center{x_dist(rng), y_dist(rng)};
    if (DistanceToRoute(center, env.route) < s + kClearance) continue;
    Environment candidate = env;
    Painter(candidate).Fill(center.x - s / 2, center.y - s / 2,
                            center.x + s / 2, center.y + s / 2, 1);
    if (FreeComponents(candidate) != FreeComponents(env)) continue;
    env = std::move(candidate);
    ++placed;
  }
  for (const Point2& p : env.route) {
    if (env.OccupiedAt(p)) throw HarnessError("route blocked");
  }
  return env;
}

std::vector<RigidTransform2> InterpolateWaypoints(
    const std::vector<Point2>& waypoints, double max_step, double max_turn) {
  std::vector<RigidTransform2> poses;
  if (waypoints.empty()) return poses;
  double heading = 0.;
  if (waypoints.size() > 1) {
    const Point2 d = waypoints[1] - waypoints[0];
    heading = std::atan2(d.y, d.x);
  }
  Point2 position = waypoints[0];
  poses.emplace_back(position, heading);
  for (std::size_t i = 1; i < waypoints.size(); ++i) {
    const Point2 delta = waypoints[i] - position;
    const double distance = delta.Norm();
    if (distance == 0.) continue;
    const double target = std::atan2(delta.y, delta.x);
    double remaining = NormalizeAngle(target - heading);
    while (std::abs(remaining) > 1e-12) {
      const double turn = std::clamp(remaining, -max_turn, max_turn);
      heading = NormalizeAngle(heading + turn);
      remaining = NormalizeAngle(target - heading);
      poses.emplace_back(position, heading);
    }
    const int steps = static_cast<int>(std::ceil(distance / max_step - 1e-9));
    const Point2 start = position;
    for (int s = 1; s <= steps; ++s) {
      position = start + (static_cast<double>(s) / steps) * delta;
      poses.emplace_back(position, heading);
    }
    position = waypoints[i];
  }
  return poses;
}

std::vector<RigidTransform2> PlanTrajectory(const Environment& env,
                                            const TrajectorySpec& spec) {
  std::vector<Point2> waypoints;
  for (int lap = 0; lap < spec.laps; ++lap) {
    waypoints.insert(waypoints.end(), env.route.begin(), env.route.end());
  }
  if (!waypoints.empty()) waypoints.push_back(env.route.front());
  std::vector<RigidTransform2> poses =
      InterpolateWaypoints(waypoints, spec.max_step, spec.max_turn);
  for (const RigidTransform2& pose : poses) {
    if (env.OccupiedAt(pose.translation())) {
      throw HarnessError("planned trajectory crosses an obstacle");
    }
  }
  return poses;
}

Scan SimulateScan(const Environment& env, const RigidTransform2& pose,
                  const LidarConfig& lidar) {
  const Point2 origin = pose.translation();
  if (env.OccupiedAt(origin)) throw HarnessError("scan pose inside obstacle");
  const double r = env.spec.resolution;
  const bool full_circle = lidar.angle_span >= 2. * std::numbers::pi - 1e-9;
  const RigidTransform2 robot_from_world = pose.inverse();
  Scan scan;
  for (int b = 0; b < lidar.beams; ++b) {
    const double angle =
        full_circle ? pose.rotation() + b * lidar.angle_span / lidar.beams
                    : pose.rotation() - lidar.angle_span / 2 +
                          b * lidar.angle_span / std::max(1, lidar.beams - 1);
    const Point2 dir{std::cos(angle), std::sin(angle)};
    const Point2 end = origin + lidar.max_range * dir;
    for (const CellIndex& cell : TraverseRay(origin, end, r)) {
      if (!env.OccupiedCell(cell.k, cell.l)) continue;
      auto entry = [r](double p, double d, int index) {
        if (d > 0.) return (index * r - p) / d;
        if (d < 0.) return ((index + 1) * r - p) / d;
        return -std::numeric_limits<double>::infinity();
      };
      const double t_enter = std::max(
          0., std::max(entry(origin.x, dir.x, cell.k),
                       entry(origin.y, dir.y, cell.l)));
      if (t_enter <= lidar.max_range) {
        const Point2 hit = origin + (t_enter + 1e-6 * r) * dir;
        scan.hits.push_back(robot_from_world * hit);
      }
      break;
    }
  }
  return scan;
}

Odometry::Odometry(const DriftModel& model) : model_(model), rng_(model.seed) {}

RigidTransform2 Odometry::Step(const RigidTransform2& true_pose) {
  const bool drift_free = model_.translation_bias == Point2{} &&
                          model_.rotation_bias == 0. &&
                          model_.translation_noise == 0. &&
                          model_.rotation_noise == 0.;
  if (!started_ || drift_free) {
    started_ = true;
    last_true_ = true_pose;
    odometric_ = true_pose;
    return odometric_;
  }
  const RigidTransform2 motion = last_true_.inverse() * true_pose;
  last_true_ = true_pose;
  odometric_ = odometric_ * motion;
  Point2 error = model_.translation_bias;
  double rotation_error = model_.rotation_bias;
  if (model_.translation_noise > 0.) {
    std::normal_distribution<double> noise(0., model_.translation_noise);
    error.x += noise(rng_);
    error.y += noise(rng_);
  }
  if (model_.rotation_noise > 0.) {
    std::normal_distribution<double> noise(0., model_.rotation_noise);
    rotation_error += noise(rng_);
  }
  odometric_ = RigidTransform2(odometric_.translation() + error,
                               odometric_.rotation() + rotation_error);
  return odometric_;
}

const char* ToString(CorrectionPolicy policy) {
  return policy == CorrectionPolicy::kSnapToTruth ? "snap-to-truth"
                                                  : "interpolated";
}

CorrectionPolicy CorrectionPolicyFromString(const std::string& name) {
  if (name == "snap-to-truth") return CorrectionPolicy::kSnapToTruth;
  if (name == "interpolated") return CorrectionPolicy::kInterpolated;
  throw std::invalid_argument("unknown correction policy: " + name);
}

RigidTransform2 QuantizeToLattice(const RigidTransform2& pose,
                                  double resolution) {
  constexpr double kQuarter = std::numbers::pi / 2;
  const Point2& t = pose.translation();
  return {{std::round(t.x / resolution) * resolution,
           std::round(t.y / resolution) * resolution},
          std::round(pose.rotation() / kQuarter) * kQuarter};
}

PoseGraphSolution TriggerOptimization(
    const PoseGraphSolution& current,
    const std::map<SubmapId, RigidTransform2>& truth,
    CorrectionPolicy policy) {
  PoseGraphSolution next = current;
  next.epoch = current.epoch + 1;
  if (policy == CorrectionPolicy::kSnapToTruth) {
    for (auto& [id, pose] : next.poses) {
      if (const auto it = truth.find(id); it != truth.end()) pose = it->second;
    }
    return next;
  }
  if (current.poses.empty()) return next;
  const SubmapId newest = current.poses.rbegin()->first;
  const auto truth_it = truth.find(newest);
  if (truth_it == truth.end()) return next;
  const RigidTransform2& now = current.poses.at(newest);
  const Point2 error = truth_it->second.translation() - now.translation();
  const double rotation_error =
      NormalizeAngle(truth_it->second.rotation() - now.rotation());
  const double n = static_cast<double>(current.poses.size());
  int rank = 0;
  for (auto& [id, pose] : next.poses) {
    const double f = (rank + 1) / n;
    pose = RigidTransform2(pose.translation() + f * error,
                           pose.rotation() + f * rotation_error);
    ++rank;
  }
  return next;
}

TrajectoryBuilder::TrajectoryBuilder(const TrajectoryBuilderConfig& config)
    : config_(config) {
  if (config.n_scans < 2) throw HarnessError("n_scans must be >= 2");
}

TrajectoryBuilder::Inserted TrajectoryBuilder::AddScan(
    const Scan& scan, const RigidTransform2& odometric_pose,
    const std::optional<RigidTransform2>& new_submap_pose,
    const std::map<SubmapId, RigidTransform2>& corrections) {
  Inserted result;
  const double r = config_.resolution;
  auto add_submap = [&] {
    const SubmapId id = next_id_++;
    active_.push_back(std::make_shared<Submap>(id, r, config_.n_scans));
    const Point2& p = odometric_pose.translation();
    local_poses_[id] = new_submap_pose.value_or(RigidTransform2::Translation(
        std::round(p.x / r) * r, std::round(p.y / r) * r));
    result.created = id;
  };
  if (active_.empty()) add_submap();

  for (const auto& submap : active_) {
    const auto correction = corrections.find(submap->id());
    const RigidTransform2 submap_from_robot =
        local_poses_.at(submap->id()).inverse() *
        (correction == corrections.end() ? odometric_pose
                                         : correction->second * odometric_pose);
    Scan local{submap_from_robot * scan.origin, {}};
    local.hits.reserve(scan.hits.size());
    for (const Point2& hit : scan.hits) {
      local.hits.push_back(submap_from_robot * hit);
    }
    submap->InsertScan(local, config_.probabilities);
    if (submap->finished()) result.finished.push_back(submap->id());
  }
  last_inserted_ = active_;
  if (active_.back()->inserted_scans() == config_.n_scans / 2) add_submap();
  std::erase_if(active_, [](const auto& s) { return s->finished(); });
  return result;
}

std::vector<SubmapSnapshot> TrajectoryBuilder::Snapshots(
    const std::map<SubmapId, RigidTransform2>& global_poses) const {
  std::vector<SubmapSnapshot> snapshots;
  for (const auto& submap : last_inserted_) {
    snapshots.push_back({std::make_shared<const Submap>(*submap),
                         global_poses.at(submap->id()),
                         local_poses_.at(submap->id())});
  }
  return snapshots;
}

Simulator::Simulator(const SimulationConfig& config)
    : config_(config),
      environment_(
          GenerateEnvironment(config.environment_seed, config.environment)),
      trajectory_(PlanTrajectory(environment_, config.trajectory)),
      odometry_(config.drift),
      builder_(config.builder) {
  if (config.max_scans >= 0 &&
      static_cast<std::size_t>(config.max_scans) < trajectory_.size()) {
    trajectory_.resize(config.max_scans);
  }
}

RigidTransform2 Simulator::GlobalPose(SubmapId id) const {
  const RigidTransform2 pose =
      global_from_odometry_ * builder_.local_poses().at(id);
  return config_.lattice_aligned
             ? QuantizeToLattice(pose, config_.builder.resolution)
             : pose;
}

OptimizationDone Simulator::Optimize() {
  solution_ = TriggerOptimization(solution_, truth_, config_.correction);
  if (config_.lattice_aligned) {
    for (auto& [id, pose] : solution_.poses) {
      pose = QuantizeToLattice(pose, config_.builder.resolution);
    }
  }
  const SubmapId newest = solution_.poses.rbegin()->first;
  global_from_odometry_ = solution_.poses.at(newest) *
                          builder_.local_poses().at(newest).inverse();
  return {solution_};
}

std::vector<Event> Simulator::Step() {
  std::vector<Event> events;
  if (Done()) return events;
  const RigidTransform2& true_pose = trajectory_[step_++];
  const RigidTransform2 odometric = odometry_.Step(true_pose);
  const Scan scan = SimulateScan(environment_, true_pose, config_.lidar);
  const int before = builder_.next_id();
  std::optional<RigidTransform2> origin;
  if (config_.lattice_aligned) {
    // New submaps sit exactly on the global lattice in the world frame.
    const Point2& p = true_pose.translation();
    const RigidTransform2 world = QuantizeToLattice(
        RigidTransform2::Translation(p.x, p.y), config_.builder.resolution);
    origin = odometric * true_pose.inverse() * world;
  }
  std::map<SubmapId, RigidTransform2> corrections;
  if (config_.drift.consistent_within_submap) {
    const RigidTransform2 true_from_odometric = true_pose * odometric.inverse();
    for (const auto& submap : builder_.active()) {
      corrections[submap->id()] =
          creation_error_.at(submap->id()) * true_from_odometric;
    }
  }
  const TrajectoryBuilder::Inserted inserted =
      builder_.AddScan(scan, odometric, origin, corrections);
  for (SubmapId id = before; id < builder_.next_id(); ++id) {
    creation_error_[id] = odometric * true_pose.inverse();
    truth_[id] =
        true_pose * odometric.inverse() * builder_.local_poses().at(id);
    if (config_.lattice_aligned) {
      truth_[id] = QuantizeToLattice(truth_[id], config_.builder.resolution);
    }
    solution_.poses[id] = GlobalPose(id);
  }
  events.push_back(
      ScanInserted{solution_.epoch, builder_.Snapshots(solution_.poses)});
  for (const SubmapId id : inserted.finished) {
    events.push_back(SubmapFinished{solution_.epoch, id});
    ++finished_count_;
    if (config_.optimization_every > 0 &&
        finished_count_ % config_.optimization_every == 0) {
      events.push_back(Optimize());
    }
  }
  return events;
}

std::vector<Event> Simulator::Finish() {
  std::vector<Event> events;
  if (finalized_) return events;
  finalized_ = true;
  if (config_.final_optimization && finished_count_ > 0) {
    events.push_back(Optimize());
  }
  return events;
}

std::vector<Event> Simulator::RunAll() {
  std::vector<Event> events;
  while (!Done()) {
    for (Event& e : Step()) events.push_back(std::move(e));
  }
  for (Event& e : Finish()) events.push_back(std::move(e));
  return events;
}

double Simulator::MaxPoseError() const {
  double worst = 0.;
  for (const auto& [id, pose] : solution_.poses) {
    if (const auto it = truth_.find(id); it != truth_.end()) {
      worst = std::max(
          worst, (pose.translation() - it->second.translation()).Norm());
    }
  }
  return worst;
}

}  // namespace frontier
