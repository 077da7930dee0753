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

#ifndef FRONTIER_ORACLE_H_
#define FRONTIER_ORACLE_H_

// Brute-force reference: merge every submap into one global grid, then run
// edge detection over the whole map. Slow by construction.

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "frontier/geometry.h"
#include "frontier/grid.h"

namespace frontier {

// Global lattice anchored at the origin: cell (k, l) covers
// [k r, (k+1) r] x [l r, (l+1) r].
struct GlobalGrid {
  double resolution = 0.05;
  CellIndex offset;
  int width = 0;
  int height = 0;
  std::vector<CellClass> classes;

  bool Contains(const CellIndex& c) const {
    return c.k >= offset.k && c.k < offset.k + width && c.l >= offset.l &&
           c.l < offset.l + height;
  }
  CellClass at(const CellIndex& c) const {
    if (!Contains(c)) return CellClass::kUnobserved;
    return classes[static_cast<std::size_t>(c.l - offset.l) * width +
                   (c.k - offset.k)];
  }
  bool FreeAdjacent(const CellIndex& c) const;
};

struct PlacedSubmap {
  const Submap* submap = nullptr;
  RigidTransform2 pose;
};

enum class Execution { kSerial, kParallel };

// Each global cell takes the nearest-cell value of every submap at its center.
// Unobserved if no submap observed it; otherwise the odds product of the
// observed values decides: > 0.5 occupied, else free.
GlobalGrid AssembleGlobalMap(std::span<const PlacedSubmap> submaps,
                             double resolution,
                             Execution execution = Execution::kParallel);

// Unobserved cells with a free Moore neighbour.
std::vector<CellIndex> NaiveGlobalFrontierCells(const GlobalGrid& grid);
std::vector<Point2> NaiveGlobalFrontier(const GlobalGrid& grid);

struct ComparisonReport {
  std::size_t detector_points = 0;
  std::size_t oracle_points = 0;
  std::size_t matched = 0;
  std::vector<Point2> missing;
  // Unobserved in the merged map but with no free neighbour there.
  std::vector<Point2> merge_conflict_extras;
  std::vector<Point2> hard_extras;

  bool ok() const { return missing.empty() && hard_extras.empty(); }
  nlohmann::json ToJson() const;
  std::string Summary() const;
};

// Matches detector points to oracle points within `tolerance` (default r/2).
ComparisonReport Compare(std::span<const Point2> detector,
                         std::span<const Point2> oracle,
                         const GlobalGrid& grid, double tolerance = -1.);

}  // namespace frontier

#endif  // FRONTIER_ORACLE_H_
