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

#include <cmath>
#include <numbers>
#include <queue>
#include <set>

#include "frontier/config.h"
#include "frontier/detector.h"
#include "frontier/run_detector.h"
#include "gtest/gtest.h"

namespace frontier {
namespace {

constexpr double kPi = std::numbers::pi;

// 4-connected flood fill over free cells.
bool Connected(const Environment& env, const std::vector<std::uint8_t>& occupied,
               const Point2& a, const Point2& b) {
  const double r = env.spec.resolution;
  const auto cell = [&](const Point2& p) {
    return AxisIndexOf(p.y, r) * env.columns + AxisIndexOf(p.x, r);
  };
  std::vector<std::uint8_t> seen(occupied.size(), 0);
  std::queue<int> open;
  open.push(cell(a));
  seen[cell(a)] = 1;
  while (!open.empty()) {
    const int c = open.front();
    open.pop();
    if (c == cell(b)) return true;
    const int i = c % env.columns, j = c / env.columns;
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      const int ni = i + di, nj = j + dj;
      if (ni < 0 || nj < 0 || ni >= env.columns || nj >= env.rows) continue;
      const int n = nj * env.columns + ni;
      if (!occupied[n] && !seen[n]) {
        seen[n] = 1;
        open.push(n);
      }
    }
  }
  return false;
}

TEST(EnvironmentTest, RoomHasFreeInteriorAndWalls) {
  EnvironmentSpec spec;
  spec.width = spec.height = 10.;
  const Environment env = GenerateEnvironment(1, spec);
  EXPECT_EQ(env.columns, 200);
  EXPECT_TRUE(env.OccupiedAt({0.1, 5.}));
  EXPECT_TRUE(env.OccupiedAt({5., 9.9}));
  for (double x = 0.3; x < 9.7; x += 0.37) {
    for (double y = 0.3; y < 9.7; y += 0.41) EXPECT_FALSE(env.OccupiedAt({x, y}));
  }
  EXPECT_EQ(env, GenerateEnvironment(1, spec));
}

TEST(EnvironmentTest, SameSeedSameObstacles) {
  EnvironmentSpec spec;
  spec.obstacles = 4;
  const Environment a = GenerateEnvironment(7, spec);
  EXPECT_EQ(a, GenerateEnvironment(7, spec));
  EXPECT_FALSE(a.occupied == GenerateEnvironment(8, spec).occupied);
}

TEST(EnvironmentTest, RingCorridorFormsACycle) {
  EnvironmentSpec spec;
  spec.kind = EnvironmentKind::kRingCorridor;
  spec.width = 8.;
  spec.height = 6.;
  spec.corridor_width = 1.6;
  spec.resolution = 0.1;
  const Environment env = GenerateEnvironment(3, spec);
  const double mid = spec.wall_thickness + spec.corridor_width / 2;
  const Point2 left{spec.width / 2 - 1., mid};
  const Point2 right{spec.width / 2 + 1., mid};
  EXPECT_TRUE(Connected(env, env.occupied, left, right));
  // Cut the bottom corridor between the two points: still connected the
  // other way round, which needs a cycle.
  std::vector<std::uint8_t> cut = env.occupied;
  const int column = AxisIndexOf(spec.width / 2, spec.resolution);
  for (int j = 0; j < AxisIndexOf(2 * mid, spec.resolution); ++j) {
    cut[j * env.columns + column] = 1;
  }
  EXPECT_TRUE(Connected(env, cut, left, right));
  // The inner block is solid.
  EXPECT_TRUE(env.OccupiedAt({spec.width / 2, spec.height / 2}));
}

TEST(EnvironmentTest, InfeasibleSpecThrows) {
  EnvironmentSpec spec;
  spec.kind = EnvironmentKind::kRingCorridor;
  spec.width = 3.;
  spec.height = 3.;
  EXPECT_THROW(GenerateEnvironment(1, spec), HarnessError);
  spec.kind = EnvironmentKind::kRoom;
  spec.width = 1.;
  EXPECT_THROW(GenerateEnvironment(1, spec), HarnessError);
  EXPECT_THROW(EnvironmentKindFromString("cave"), std::invalid_argument);
}

TEST(TrajectoryTest, StepsWithinLimits) {
  EnvironmentSpec spec;
  spec.kind = EnvironmentKind::kRooms;
  const Environment env = GenerateEnvironment(1, spec);
  const auto poses = PlanTrajectory(env, {.laps = 2, .max_step = 0.2, .max_turn = 0.2});
  ASSERT_GT(poses.size(), 10u);
  for (std::size_t i = 1; i < poses.size(); ++i) {
    const RigidTransform2 d = poses[i - 1].inverse() * poses[i];
    EXPECT_LE(d.translation().Norm(), 0.2 + 1e-9);
    EXPECT_LE(std::abs(d.rotation()), 0.2 + 1e-9);
    EXPECT_FALSE(env.OccupiedAt(poses[i].translation()));
  }
}

TEST(SimulateScanTest, NoHitsInOpenSpace) {
  const Environment env = GenerateEnvironment(1, EnvironmentSpec{});
  const Scan scan = SimulateScan(env, RigidTransform2::Translation(100., 100.),
                                 {.beams = 360, .max_range = 5.});
  EXPECT_TRUE(scan.hits.empty());
}

TEST(SimulateScanTest, PerpendicularWallDistance) {
  EnvironmentSpec spec;
  spec.resolution = 0.05;
  const Environment env = GenerateEnvironment(1, spec);
  const double wall_face = spec.wall_thickness;
  const RigidTransform2 pose({wall_face + 2., 5.}, kPi);
  const Scan scan = SimulateScan(env, pose, {.beams = 1, .max_range = 8., .angle_span = 0.});
  ASSERT_EQ(scan.hits.size(), 1u);
  EXPECT_NEAR(scan.hits[0].x, 2., spec.resolution / 2);
  EXPECT_NEAR(scan.hits[0].y, 0., 1e-9);
}

TEST(SimulateScanTest, ClosedRoomEveryBeamHits) {
  EnvironmentSpec spec;
  spec.width = 4.;
  spec.height = 3.;
  const Environment env = GenerateEnvironment(1, spec);
  const Scan scan = SimulateScan(env, RigidTransform2({2., 1.5}, 0.3),
                                 {.beams = 360, .max_range = 8.});
  EXPECT_EQ(scan.hits.size(), 360u);
  EXPECT_THROW(SimulateScan(env, RigidTransform2::Translation(0.05, 0.05), {}),
               HarnessError);
}

TEST(OdometryTest, ZeroNoiseIsTruth) {
  Odometry odometry(DriftModel{});
  for (int i = 0; i < 50; ++i) {
    const RigidTransform2 truth({0.1 * i, std::sin(i)}, 0.05 * i);
    EXPECT_EQ(odometry.Step(truth), truth);
  }
}

TEST(OdometryTest, ConstantBiasAccumulatesLinearly) {
  DriftModel model;
  model.translation_bias = {0.001, 0.};
  Odometry odometry(model);
  RigidTransform2 odometric;
  for (int i = 0; i <= 1000; ++i) odometric = odometry.Step({});
  EXPECT_NEAR(odometric.translation().x, 1., 1e-9);
}

TEST(OdometryTest, SeededNoiseIsDeterministic) {
  DriftModel model;
  model.translation_noise = 0.01;
  model.rotation_noise = 0.01;
  model.seed = 9;
  Odometry a(model), b(model);
  for (int i = 0; i < 100; ++i) {
    const RigidTransform2 truth({0.1 * i, 0.}, 0.);
    EXPECT_EQ(a.Step(truth), b.Step(truth));
  }
}

TEST(OptimizationTest, SnapToTruth) {
  PoseGraphSolution current{{{0, {}}, {1, RigidTransform2::Translation(1., 0.)}}, 3};
  const auto same = TriggerOptimization(current, current.poses,
                                        CorrectionPolicy::kSnapToTruth);
  EXPECT_EQ(same.poses, current.poses);
  EXPECT_EQ(same.epoch, 4);
  const std::map<SubmapId, RigidTransform2> truth = {
      {0, RigidTransform2::Translation(0.2, 0.)}, {1, RigidTransform2({1.5, 0.3}, 0.1)}};
  EXPECT_EQ(TriggerOptimization(current, truth, CorrectionPolicy::kSnapToTruth).poses,
            truth);
}

TEST(OptimizationTest, InterpolatedSpreadsErrorAlongLoop) {
  PoseGraphSolution current;
  std::map<SubmapId, RigidTransform2> truth;
  for (int i = 0; i < 10; ++i) {
    current.poses[i] = RigidTransform2::Translation(i, 0.);
    truth[i] = current.poses[i];
  }
  truth[9] = RigidTransform2::Translation(9., 1.);
  const auto next =
      TriggerOptimization(current, truth, CorrectionPolicy::kInterpolated);
  for (int i = 0; i < 10; ++i) {
    // The i-th submap of the loop (1-based) moves by i/10 m.
    EXPECT_NEAR(next.poses.at(i).translation().y, (i + 1) / 10., 1e-12);
    EXPECT_NEAR(next.poses.at(i).translation().x, i, 1e-12);
  }
}

TEST(QuantizeTest, RoundsToLatticeAndQuarterTurns) {
  const RigidTransform2 q = QuantizeToLattice(RigidTransform2({0.26, -0.14}, 1.4), 0.1);
  EXPECT_NEAR(q.translation().x, 0.3, 1e-12);
  EXPECT_NEAR(q.translation().y, -0.1, 1e-12);
  EXPECT_NEAR(q.rotation(), kPi / 2, 1e-12);
}

TrajectoryBuilderConfig BuilderConfig(int n_scans) {
  TrajectoryBuilderConfig config;
  config.resolution = 0.1;
  config.n_scans = n_scans;
  return config;
}

TEST(TrajectoryBuilderTest, FirstScanCreatesFirstSubmap) {
  TrajectoryBuilder builder(BuilderConfig(4));
  const auto inserted = builder.AddScan({{0., 0.}, {{1., 0.}}}, {});
  EXPECT_EQ(inserted.created, 0);
  EXPECT_TRUE(inserted.finished.empty());
  ASSERT_EQ(builder.active().size(), 1u);
  EXPECT_EQ(builder.active()[0]->inserted_scans(), 1);
}

TEST(TrajectoryBuilderTest, FinishesAtNScansAndStartsNewSubmap) {
  TrajectoryBuilder builder(BuilderConfig(4));
  std::vector<TrajectoryBuilder::Inserted> steps;
  for (int i = 0; i < 4; ++i) steps.push_back(builder.AddScan({{0., 0.}, {{1., 0.}}}, {}));
  EXPECT_EQ(steps[1].created, 1);
  EXPECT_EQ(steps[3].finished, std::vector<SubmapId>{0});
  EXPECT_EQ(steps[3].created, 2);
  ASSERT_EQ(builder.active().size(), 2u);
  EXPECT_EQ(builder.active()[0]->id(), 1);
  EXPECT_EQ(builder.active()[0]->inserted_scans(), 2);
  EXPECT_EQ(builder.active()[1]->inserted_scans(), 0);
}

TEST(TrajectoryBuilderProperty, FinishCountFollowsStaggeredSchedule) {
  for (int n_scans : {2, 4, 6, 10, 20}) {
    TrajectoryBuilder builder(BuilderConfig(n_scans));
    int finished = 0;
    for (int t = 1; t <= 10 * n_scans; ++t) {
      finished += static_cast<int>(builder.AddScan({{0., 0.}, {{0.5, 0.5}}}, {}).finished.size());
      if (t % (n_scans / 2) == 0) {
        EXPECT_EQ(finished, std::max(0, 2 * t / n_scans - 1)) << n_scans << " " << t;
      }
      for (const auto& s : builder.active()) EXPECT_LE(s->inserted_scans(), n_scans);
    }
  }
}

SimulationConfig SmallRun() {
  SimulationConfig config;
  config.environment.width = 6.;
  config.environment.height = 5.;
  config.environment.resolution = 0.1;
  config.builder.resolution = 0.1;
  config.builder.n_scans = 10;
  config.lidar.beams = 90;
  config.lidar.max_range = 4.;
  config.optimization_every = 2;
  config.max_scans = 60;
  return config;
}

TEST(SimulatorTest, DeterministicForSeeds) {
  SimulationConfig config = SmallRun();
  config.drift.translation_noise = 0.002;
  config.drift.seed = 4;
  const auto a = Simulator(config).RunAll();
  EXPECT_EQ(a, Simulator(config).RunAll());
  config.drift.seed = 5;
  EXPECT_NE(a, Simulator(config).RunAll());
}

TEST(SimulatorTest, EventOrderingAndCounts) {
  const SimulationConfig config = SmallRun();
  Simulator simulator(config);
  const auto events = simulator.RunAll();
  int scans = 0, finishes = 0, optimizations = 0, last_epoch = 0;
  std::set<SubmapId> finished;
  for (const Event& e : events) {
    if (const auto* s = std::get_if<ScanInserted>(&e)) {
      ++scans;
      for (const auto& snapshot : s->active) EXPECT_FALSE(finished.contains(snapshot.submap->id()));
    } else if (const auto* f = std::get_if<SubmapFinished>(&e)) {
      ++finishes;
      finished.insert(f->id);
    } else {
      const auto& o = std::get<OptimizationDone>(e);
      ++optimizations;
      EXPECT_GT(o.solution.epoch, last_epoch);
      last_epoch = o.solution.epoch;
    }
  }
  EXPECT_EQ(scans, 60);
  EXPECT_EQ(finishes, 2 * 60 / 10 - 1);
  EXPECT_EQ(optimizations, finishes / 2 + 1);
  EXPECT_TRUE(simulator.Done());
}

TEST(SimulatorTest, ZeroDriftOptimizationKeepsPosesAndFrontier) {
  const SimulationConfig config = SmallRun();
  Simulator simulator(config);
  FrontierDetector detector;
  PoseGraphSolution previous;
  std::vector<Point2> before;
  int checked = 0;
  while (!simulator.Done()) {
    for (const Event& e : simulator.Step()) {
      if (const auto* o = std::get_if<OptimizationDone>(&e)) {
        for (const auto& [id, pose] : o->solution.poses) {
          if (previous.poses.contains(id)) {
            EXPECT_EQ(previous.poses.at(id), pose);
          }
        }
        before = detector.AllGlobalFrontierPoints();
        detector.HandleEvent(e);
        EXPECT_EQ(detector.AllGlobalFrontierPoints(), before);
        ++checked;
      } else {
        detector.HandleEvent(e);
      }
      previous = simulator.solution();
    }
  }
  EXPECT_GT(checked, 0);
  EXPECT_DOUBLE_EQ(simulator.MaxPoseError(), 0.);
}

TEST(SimulatorTest, SnapAfterDriftRestoresTruth) {
  SimulationConfig config = SmallRun();
  config.drift.translation_bias = {0.01, 0.003};
  config.drift.rotation_bias = 0.002;
  config.lattice_aligned = false;
  config.optimization_every = 0;
  Simulator simulator(config);
  while (!simulator.Done()) simulator.Step();
  EXPECT_GT(simulator.MaxPoseError(), 0.05);
  simulator.Finish();
  for (const auto& [id, pose] : simulator.solution().poses) {
    EXPECT_EQ(pose, simulator.truth().at(id));
  }
  EXPECT_DOUBLE_EQ(simulator.MaxPoseError(), 0.);
}

}  // namespace
}  // namespace frontier
