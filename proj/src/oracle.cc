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

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace frontier {

bool GlobalGrid::FreeAdjacent(const CellIndex& c) const {
  for (int dl = -1; dl <= 1; ++dl) {
    for (int dk = -1; dk <= 1; ++dk) {
      if ((dk != 0 || dl != 0) &&
          at({c.k + dk, c.l + dl}) == CellClass::kFree) {
        return true;
      }
    }
  }
  return false;
}

namespace {

struct Placed {
  const Submap* submap;
  RigidTransform2 inverse;
  BoundingBox box;
};

CellClass MergeAt(const Point2& center, std::span<const Placed> placed) {
  bool observed = false;
  double odds = 1.;
  for (const Placed& p : placed) {
    if (!p.box.Contains(center)) continue;
    const std::uint16_t v = p.submap->value(
        CellIndexOf(p.inverse * center, p.submap->resolution()));
    if (v == kUnobservedValue) continue;
    observed = true;
    odds *= Odds(ValueToProbability(v));
  }
  if (!observed) return CellClass::kUnobserved;
  return odds > 1. ? CellClass::kOccupied : CellClass::kFree;
}

}  // namespace

GlobalGrid AssembleGlobalMap(std::span<const PlacedSubmap> submaps,
                             double resolution, Execution execution) {
  GlobalGrid grid;
  grid.resolution = resolution;
  std::vector<Placed> placed;
  for (const PlacedSubmap& s : submaps) {
    if (s.submap == nullptr || s.submap->empty()) continue;
    placed.push_back(
        {s.submap, s.pose.inverse(), GlobalBoundingBox(*s.submap, s.pose)});
  }
  if (placed.empty()) return grid;
  BoundingBox bounds = placed.front().box;
  for (const Placed& p : placed) {
    bounds.min.x = std::min(bounds.min.x, p.box.min.x);
    bounds.min.y = std::min(bounds.min.y, p.box.min.y);
    bounds.max.x = std::max(bounds.max.x, p.box.max.x);
    bounds.max.y = std::max(bounds.max.y, p.box.max.y);
  }
  // Box edges of lattice-aligned submaps sit on cell boundaries up to
  // rounding.
  constexpr double kSlack = 1e-9;
  const auto lo = [&](double v) {
    return static_cast<int>(std::floor(v / resolution + kSlack));
  };
  const auto hi = [&](double v) {
    return static_cast<int>(std::ceil(v / resolution - kSlack));
  };
  grid.offset = {lo(bounds.min.x), lo(bounds.min.y)};
  grid.width = hi(bounds.max.x) - grid.offset.k;
  grid.height = hi(bounds.max.y) - grid.offset.l;
  grid.classes.assign(static_cast<std::size_t>(grid.width) * grid.height,
                      CellClass::kUnobserved);

  const int height = grid.height;
  auto fill_row = [&](int row) {
    for (int column = 0; column < grid.width; ++column) {
      const Point2 center = CellCenter(
          {grid.offset.k + column, grid.offset.l + row}, resolution);
      grid.classes[static_cast<std::size_t>(row) * grid.width + column] =
          MergeAt(center, placed);
    }
  };
  if (execution == Execution::kParallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int row = 0; row < height; ++row) fill_row(row);
  } else {
    for (int row = 0; row < height; ++row) fill_row(row);
  }
  return grid;
}

std::vector<CellIndex> NaiveGlobalFrontierCells(const GlobalGrid& grid) {
  std::vector<CellIndex> cells;
  for (int row = 0; row < grid.height; ++row) {
    for (int column = 0; column < grid.width; ++column) {
      const CellIndex c{grid.offset.k + column, grid.offset.l + row};
      if (grid.at(c) == CellClass::kUnobserved && grid.FreeAdjacent(c)) {
        cells.push_back(c);
      }
    }
  }
  return cells;
}

std::vector<Point2> NaiveGlobalFrontier(const GlobalGrid& grid) {
  std::vector<Point2> points;
  for (const CellIndex& c : NaiveGlobalFrontierCells(grid)) {
    points.push_back(CellCenter(c, grid.resolution));
  }
  return points;
}

ComparisonReport Compare(std::span<const Point2> detector,
                         std::span<const Point2> oracle,
                         const GlobalGrid& grid, double tolerance) {
  const double r = grid.resolution;
  if (tolerance < 0.) tolerance = r / 2;
  const auto nearest_cell = [r](const Point2& p) {
    return CellIndex{static_cast<int>(std::floor(p.x / r)),
                     static_cast<int>(std::floor(p.y / r))};
  };
  const auto within = [&](const Point2& p, const CellIndex& c) {
    const Point2 d = p - CellCenter(c, r);
    return std::max(std::abs(d.x), std::abs(d.y)) <= tolerance + 1e-9 * r;
  };

  ComparisonReport report;
  report.detector_points = detector.size();
  report.oracle_points = oracle.size();

  std::set<CellIndex> oracle_cells;
  for (const Point2& p : oracle) oracle_cells.insert(nearest_cell(p));
  std::set<CellIndex> detector_cells;
  for (const Point2& p : detector) {
    const CellIndex c = nearest_cell(p);
    if (within(p, c)) detector_cells.insert(c);
  }

  for (const Point2& p : oracle) {
    if (detector_cells.contains(nearest_cell(p))) {
      ++report.matched;
    } else {
      report.missing.push_back(p);
    }
  }
  for (const Point2& p : detector) {
    const CellIndex c = nearest_cell(p);
    if (within(p, c) && oracle_cells.contains(c)) continue;
    if (within(p, c) && grid.at(c) == CellClass::kUnobserved &&
        !grid.FreeAdjacent(c)) {
      report.merge_conflict_extras.push_back(p);
    } else {
      report.hard_extras.push_back(p);
    }
  }
  return report;
}

nlohmann::json ComparisonReport::ToJson() const {
  return {{"detector_points", detector_points},
          {"oracle_points", oracle_points},
          {"matched", matched},
          {"missing", missing.size()},
          {"merge_conflict_extras", merge_conflict_extras.size()},
          {"hard_extras", hard_extras.size()},
          {"ok", ok()}};
}

std::string ComparisonReport::Summary() const {
  std::ostringstream os;
  os << (ok() ? "OK  " : "FAIL") << " detector=" << detector_points
     << " oracle=" << oracle_points << " matched=" << matched
     << " missing=" << missing.size()
     << " merge_conflict_extras=" << merge_conflict_extras.size()
     << " hard_extras=" << hard_extras.size();
  return os.str();
}

}  // namespace frontier
