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

#ifndef FRONTIER_GRID_H_
#define FRONTIER_GRID_H_

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "frontier/geometry.h"

namespace frontier {

enum class CellClass : std::uint8_t { kFree = 0, kOccupied = 1, kUnobserved = 2 };

const char* ToString(CellClass c);

// Probabilities are clamped to [0.1, 0.9] and stored as 1..65535. The value 0
// marks a cell that was never observed.
inline constexpr double kMinProbability = 0.1;
inline constexpr double kMaxProbability = 0.9;
inline constexpr std::uint16_t kUnobservedValue = 0;
inline constexpr std::uint16_t kMinValue = 1;
inline constexpr std::uint16_t kMaxValue = 65535;
inline constexpr double kValueQuantum =
    (kMaxProbability - kMinProbability) / (kMaxValue - kMinValue);

std::uint16_t ProbabilityToValue(double probability);

inline double ValueToProbability(std::uint16_t value) {
  return kMinProbability + kValueQuantum * (value - kMinValue);
}

// Thresholding rule with the uncertain-free extension: probabilities in
// [0.5 - epsilon, 0.5] count as unobserved.
inline CellClass ClassifyProbability(double probability, double epsilon) {
  if (probability > 0.5) return CellClass::kOccupied;
  if (probability < 0.5 - epsilon) return CellClass::kFree;
  return CellClass::kUnobserved;
}

inline CellClass Classify(std::uint16_t value, double epsilon) {
  if (value == kUnobservedValue) return CellClass::kUnobserved;
  return ClassifyProbability(ValueToProbability(value), epsilon);
}

double Odds(double probability);
double ProbabilityFromOdds(double odds);

enum class Observation { kHit, kMiss };

struct ProbabilityModel {
  double hit_probability = 0.55;
  double miss_probability = 0.49;
};

// Odds-product update. An unobserved cell takes the observation probability.
// The result never quantizes to p = 0.5 for an observed cell, which keeps
// observed cells observed.
std::uint16_t BayesUpdate(std::uint16_t value, Observation observation,
                          const ProbabilityModel& model);

struct CellIndex {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

// Cell (k, l) covers [k r, (k+1) r] x [l r, (l+1) r] in the local frame. On a
// shared boundary the cell with the smaller index wins.
inline int AxisIndexOf(double coordinate, double resolution) {
  return static_cast<int>(std::ceil(coordinate / resolution)) - 1;
}
inline CellIndex CellIndexOf(const Point2& p, double resolution) {
  return {AxisIndexOf(p.x, resolution), AxisIndexOf(p.y, resolution)};
}
inline Point2 CellCenter(const CellIndex& c, double resolution) {
  return {(c.k + 0.5) * resolution, (c.l + 0.5) * resolution};
}

// Exact grid-line traversal from the cell of `from` to the cell of `to`.
// Consecutive cells differ by one step along exactly one axis.
std::vector<CellIndex> TraverseRay(const Point2& from, const Point2& to,
                                   double resolution);

struct Scan {
  Point2 origin;
  std::vector<Point2> hits;
};

class SubmapError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Submap {
 public:
  Submap(int id, double resolution, int num_scans);

  // Rebuilds a submap from its serialized record.
  static Submap FromStorage(int id, double resolution, int num_scans,
                            CellIndex offset, int width, int height,
                            std::vector<std::uint16_t> cells,
                            int inserted_scans, bool finished);

  int id() const { return id_; }
  double resolution() const { return resolution_; }
  int num_scans() const { return num_scans_; }
  int inserted_scans() const { return inserted_scans_; }
  bool finished() const { return finished_; }

  // Index of the cell stored at row 0, column 0.
  CellIndex offset() const { return offset_; }
  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return cells_.empty(); }
  // Row-major, rows along l.
  std::span<const std::uint16_t> cells() const { return cells_; }

  bool Contains(const CellIndex& c) const {
    return c.k >= offset_.k && c.k < offset_.k + width_ && c.l >= offset_.l &&
           c.l < offset_.l + height_;
  }
  // Unobserved outside the grid.
  std::uint16_t value(const CellIndex& c) const {
    return Contains(c) ? cells_[Linear(c)] : kUnobservedValue;
  }
  CellIndex IndexAt(int column, int row) const {
    return {offset_.k + column, offset_.l + row};
  }

  // Extent of the stored grid in the local frame.
  BoundingBox LocalExtent() const;

  // Grows the grid so [min, max] is stored. Stored cells keep their local
  // positions; the extent at least doubles along each side that grows.
  void GrowToInclude(const CellIndex& min, const CellIndex& max);

  // Raycasts every hit: the hit cell gets a hit update, the cells between the
  // origin and the hit get a miss update, each cell at most once per scan.
  void InsertScan(const Scan& scan, const ProbabilityModel& model);

  // Test helper: overwrite one cell's stored value, growing if needed.
  void SetValue(const CellIndex& c, std::uint16_t value);

 private:
  std::size_t Linear(const CellIndex& c) const {
    return static_cast<std::size_t>(c.l - offset_.l) * width_ +
           (c.k - offset_.k);
  }

  int id_;
  double resolution_;
  int num_scans_;
  int inserted_scans_ = 0;
  bool finished_ = false;
  CellIndex offset_;
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint16_t> cells_;
};

// Global box of the submap's grid extent under `pose`. Throws SubmapError for
// an empty grid.
BoundingBox GlobalBoundingBox(const Submap& submap,
                              const RigidTransform2& pose);

struct ClassGrid {
  int width = 0;
  int height = 0;
  std::vector<CellClass> classes;  // row-major like Submap::cells()

  CellClass at(int column, int row) const {
    if (column < 0 || row < 0 || column >= width || row >= height) {
      return CellClass::kUnobserved;
    }
    return classes[static_cast<std::size_t>(row) * width + column];
  }
};

ClassGrid ClassifyGrid(const Submap& submap, double epsilon);

}  // namespace frontier

#endif  // FRONTIER_GRID_H_
