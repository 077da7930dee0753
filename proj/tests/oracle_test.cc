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


#include "frontier/oracle.h"

#include <random>
#include <set>

#include "frontier/detector.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace frontier {
namespace {

using testing::SubmapFromRows;

constexpr double kR = 0.1;

GlobalGrid Assemble(std::vector<PlacedSubmap> placed,
                    Execution execution = Execution::kSerial) {
  return AssembleGlobalMap(placed, kR, execution);
}

std::set<CellIndex> AsSet(const std::vector<CellIndex>& cells) {
  return {cells.begin(), cells.end()};
}

TEST(AssembleGlobalMapTest, SingleSubmapIdentity) {
  const Submap s = SubmapFromRows(0, kR, {".#?.", "??..", "#..."}, {2, -1});
  const GlobalGrid grid = Assemble({{&s, {}}});
  EXPECT_EQ(grid.offset, (CellIndex{2, -1}));
  EXPECT_EQ(grid.width, 4);
  EXPECT_EQ(grid.height, 3);
  for (int row = 0; row < s.height(); ++row) {
    for (int col = 0; col < s.width(); ++col) {
      const CellIndex c = s.IndexAt(col, row);
      EXPECT_EQ(grid.at(c), Classify(s.value(c), 0.));
    }
  }
}

TEST(AssembleGlobalMapTest, DisjointSubmapsGiveUnion) {
  const Submap a = SubmapFromRows(0, kR, {"..", ".#"});
  const Submap b = SubmapFromRows(1, kR, {"#.", ".."});
  const GlobalGrid grid =
      Assemble({{&a, {}}, {&b, RigidTransform2::Translation(0.5, 0.3)}});
  EXPECT_EQ(grid.width, 7);
  EXPECT_EQ(grid.height, 5);
  EXPECT_EQ(grid.at({1, 1}), CellClass::kOccupied);
  EXPECT_EQ(grid.at({0, 0}), CellClass::kFree);
  EXPECT_EQ(grid.at({5, 3}), CellClass::kOccupied);
  EXPECT_EQ(grid.at({6, 4}), CellClass::kFree);
  EXPECT_EQ(grid.at({3, 2}), CellClass::kUnobserved);
  EXPECT_EQ(grid.at({6, 0}), CellClass::kUnobserved);
}

TEST(AssembleGlobalMapTest, OddsProductDecidesConflicts) {
  Submap a(0, kR, 5), b(1, kR, 5);
  a.SetValue({0, 0}, ProbabilityToValue(0.3));
  b.SetValue({0, 0}, ProbabilityToValue(0.8));
  // 0.3/0.7 * 0.8/0.2 = 12/7 > 1.
  EXPECT_EQ(Assemble({{&a, {}}, {&b, {}}}).at({0, 0}), CellClass::kOccupied);
  b.SetValue({0, 0}, ProbabilityToValue(0.6));
  // 0.3/0.7 * 0.6/0.4 = 9/14 < 1.
  EXPECT_EQ(Assemble({{&a, {}}, {&b, {}}}).at({0, 0}), CellClass::kFree);
  b.SetValue({0, 0}, kUnobservedValue);
  EXPECT_EQ(Assemble({{&a, {}}, {&b, {}}}).at({0, 0}), CellClass::kFree);
}

TEST(AssembleGlobalMapTest, ParallelEqualsSerial) {
  std::mt19937_64 rng(51);
  std::vector<Submap> submaps;
  std::vector<PlacedSubmap> placed;
  for (int id = 0; id < 8; ++id) {
    submaps.push_back(SubmapFromRows(id, kR, testing::RandomRows(rng, 30, 25, 0.5, 0.2)));
  }
  for (const Submap& s : submaps) placed.push_back({&s, testing::RandomTransform(rng, 2.)});
  const GlobalGrid serial = Assemble(placed, Execution::kSerial);
  const GlobalGrid parallel = Assemble(placed, Execution::kParallel);
  EXPECT_EQ(serial.classes, parallel.classes);
  EXPECT_EQ(serial.offset, parallel.offset);
}

TEST(AssembleGlobalMapProperty, AddingASubmapNeverUnobservesACell) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Submap> submaps;
    for (int id = 0; id < 6; ++id) {
      submaps.push_back(SubmapFromRows(id, kR, testing::RandomRows(rng, 12, 10, 0.4, 0.3)));
    }
    std::vector<PlacedSubmap> placed;
    GlobalGrid previous;
    for (const Submap& s : submaps) {
      placed.push_back({&s, testing::RandomTransform(rng, 1.)});
      const GlobalGrid grid = Assemble(placed);
      for (int row = 0; row < previous.height; ++row) {
        for (int col = 0; col < previous.width; ++col) {
          const CellIndex c{previous.offset.k + col, previous.offset.l + row};
          if (previous.at(c) != CellClass::kUnobserved) {
            ASSERT_NE(grid.at(c), CellClass::kUnobserved);
          }
        }
      }
      previous = grid;
    }
  }
}

TEST(AssembleGlobalMapProperty, UnobservedIffEverySubmapLookupIsUnobserved) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Submap> submaps;
    std::vector<PlacedSubmap> placed;
    for (int id = 0; id < 4; ++id) {
      submaps.push_back(SubmapFromRows(id, kR, testing::RandomRows(rng, 9, 9, 0.3, 0.2)));
    }
    for (const Submap& s : submaps) placed.push_back({&s, testing::RandomTransform(rng, 0.8)});
    const GlobalGrid grid = Assemble(placed);
    for (int row = 0; row < grid.height; ++row) {
      for (int col = 0; col < grid.width; ++col) {
        const CellIndex c{grid.offset.k + col, grid.offset.l + row};
        const Point2 center = CellCenter(c, kR);
        bool all_unobserved = true;
        for (const PlacedSubmap& p : placed) {
          all_unobserved &= StabbingQueryTest(center, *p.submap, p.pose, 0.);
        }
        ASSERT_EQ(grid.at(c) == CellClass::kUnobserved, all_unobserved);
      }
    }
  }
}

TEST(NaiveGlobalFrontierTest, Examples) {
  EXPECT_TRUE(NaiveGlobalFrontier(Assemble({})).empty());
  const Submap unobserved = SubmapFromRows(0, kR, {"???", "???"});
  EXPECT_TRUE(NaiveGlobalFrontier(Assemble({{&unobserved, {}}})).empty());

  const Submap single = SubmapFromRows(0, kR, {"???", "?.?", "???"});
  std::set<CellIndex> expected;
  for (int k = 0; k < 3; ++k) {
    for (int l = 0; l < 3; ++l) {
      if (k != 1 || l != 1) expected.insert({k, l});
    }
  }
  EXPECT_EQ(AsSet(NaiveGlobalFrontierCells(Assemble({{&single, {}}}))), expected);
}

TEST(NaiveGlobalFrontierTest, TwoAdjacentSubmapsMergeFrontiers) {
  // Two rooms whose free areas touch: the frontier of the union has no
  // point inside either free area.
  const Submap a = SubmapFromRows(0, kR, {"?????", "?...?", "?...?", "?????"});
  const Submap b = SubmapFromRows(1, kR, {"?????", "?...?", "?...?", "?????"});
  const GlobalGrid grid =
      Assemble({{&a, {}}, {&b, RigidTransform2::Translation(0.3, 0.)}});
  // Union free area: k = 1..6, l = 1..2 on a 8x4 grid.
  std::set<CellIndex> expected;
  for (int k = 0; k <= 7; ++k) {
    expected.insert({k, 0});
    expected.insert({k, 3});
  }
  expected.insert({0, 1});
  expected.insert({0, 2});
  expected.insert({7, 1});
  expected.insert({7, 2});
  EXPECT_EQ(AsSet(NaiveGlobalFrontierCells(grid)), expected);
}

TEST(CompareTest, IdenticalAndMissing) {
  const Submap s = SubmapFromRows(0, kR, {"???", "?.?", "???"});
  const GlobalGrid grid = Assemble({{&s, {}}});
  const auto oracle = NaiveGlobalFrontier(grid);
  ComparisonReport report = Compare(oracle, oracle, grid);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.matched, 8u);
  EXPECT_TRUE(report.merge_conflict_extras.empty());

  std::vector<Point2> fewer(oracle.begin() + 1, oracle.end());
  report = Compare(fewer, oracle, grid);
  EXPECT_FALSE(report.ok());
  ASSERT_EQ(report.missing.size(), 1u);
  EXPECT_EQ(report.missing[0], oracle[0]);

  // Within half a cell still matches.
  std::vector<Point2> shifted;
  for (const Point2& p : oracle) shifted.push_back(p + Point2{0.04, -0.04});
  EXPECT_TRUE(Compare(shifted, oracle, grid).ok());

  const auto json = report.ToJson();
  for (const char* key : {"detector_points", "oracle_points", "matched", "missing",
                          "merge_conflict_extras", "hard_extras", "ok"}) {
    EXPECT_TRUE(json.contains(key)) << key;
  }
  EXPECT_NE(report.Summary().find("missing=1"), std::string::npos);
}

TEST(CompareTest, OccupiedOverrulingFreeIsAMergeConflict) {
  // A sees free at (1,1) and nothing at (0,1); B sees (1,1) as occupied with
  // stronger evidence. A's frontier point at (0,1) loses its free neighbour.
  const Submap a = SubmapFromRows(0, kR, {"???", "?.?", "???"});
  const Submap b = SubmapFromRows(1, kR, {"???", "?#?", "???"});
  const std::vector<PlacedSubmap> placed = {{&a, {}}, {&b, {}}};
  const GlobalGrid grid = Assemble(placed);
  ASSERT_EQ(grid.at({1, 1}), CellClass::kOccupied);
  EXPECT_TRUE(NaiveGlobalFrontier(grid).empty());

  FrontierDetector detector;
  detector.HandleSubmapUpdates({{std::make_shared<const Submap>(a), {}, {}}});
  detector.HandleSubmapUpdates({{std::make_shared<const Submap>(b), {}, {}}});
  const auto points = detector.AllGlobalFrontierPoints();
  EXPECT_EQ(points.size(), 8u);
  const ComparisonReport report = Compare(points, NaiveGlobalFrontier(grid), grid);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.merge_conflict_extras.size(), 8u);
  EXPECT_TRUE(report.hard_extras.empty());
}

TEST(CompareTest, PointOnObservedCellIsAHardExtra) {
  const Submap s = SubmapFromRows(0, kR, {"???", "?.?", "???"});
  const GlobalGrid grid = Assemble({{&s, {}}});
  const auto oracle = NaiveGlobalFrontier(grid);
  std::vector<Point2> detector = oracle;
  detector.push_back(CellCenter({1, 1}, kR));
  detector.push_back({5., 5.});
  const ComparisonReport report = Compare(detector, oracle, grid);
  EXPECT_FALSE(report.ok());
  EXPECT_EQ(report.hard_extras.size(), 1u);
  EXPECT_EQ(report.merge_conflict_extras.size(), 1u);
}

}  // namespace
}  // namespace frontier
