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

#include "frontier/grid.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

#include "frontier/kernels.h"

namespace frontier {

const char* ToString(CellClass c) {
  switch (c) {
    case CellClass::kFree:
      return "free";
    case CellClass::kOccupied:
      return "occupied";
    case CellClass::kUnobserved:
      return "unobserved";
  }
  return "?";
}

std::uint16_t ProbabilityToValue(double probability) {
  const double p = std::clamp(probability, kMinProbability, kMaxProbability);
  return static_cast<std::uint16_t>(
      kMinValue + std::lround((p - kMinProbability) / kValueQuantum));
}

double Odds(double probability) { return probability / (1. - probability); }

double ProbabilityFromOdds(double odds) { return odds / (1. + odds); }

std::uint16_t BayesUpdate(std::uint16_t value, Observation observation,
                          const ProbabilityModel& model) {
  const double observed = observation == Observation::kHit
                              ? model.hit_probability
                              : model.miss_probability;
  if (value == kUnobservedValue) return ProbabilityToValue(observed);
  const double updated =
      ProbabilityFromOdds(Odds(ValueToProbability(value)) * Odds(observed));
  std::uint16_t result = ProbabilityToValue(updated);
  constexpr std::uint16_t kHalf = (kMinValue + kMaxValue) / 2;
  if (result == kHalf) {
    result = observation == Observation::kHit ? kHalf + 1 : kHalf - 1;
  }
  return result;
}

std::vector<CellIndex> TraverseRay(const Point2& from, const Point2& to,
                                   double resolution) {
  const CellIndex start = CellIndexOf(from, resolution);
  const CellIndex end = CellIndexOf(to, resolution);
  std::vector<CellIndex> cells;
  const int steps = std::abs(end.k - start.k) + std::abs(end.l - start.l);
  cells.reserve(steps + 1);
  cells.push_back(start);

  const double dx = to.x - from.x;
  const double dy = to.y - from.y;
  const int step_k = end.k > start.k ? 1 : -1;
  const int step_l = end.l > start.l ? 1 : -1;
  auto next_t = [resolution](double origin, double delta, int index,
                             int step) {
    if (delta == 0.) return std::numeric_limits<double>::infinity();
    const double boundary = (step > 0 ? index + 1 : index) * resolution;
    return (boundary - origin) / delta;
  };

  CellIndex current = start;
  for (int i = 0; i < steps; ++i) {
    bool advance_k;
    if (current.k == end.k) {
      advance_k = false;
    } else if (current.l == end.l) {
      advance_k = true;
    } else {
      advance_k = next_t(from.x, dx, current.k, step_k) <=
                  next_t(from.y, dy, current.l, step_l);
    }
    if (advance_k) {
      current.k += step_k;
    } else {
      current.l += step_l;
    }
    cells.push_back(current);
  }
  return cells;
}

Submap::Submap(int id, double resolution, int num_scans)
    : id_(id), resolution_(resolution), num_scans_(num_scans) {
  if (!(resolution > 0.)) throw std::invalid_argument("resolution must be > 0");
  if (num_scans < 1) throw std::invalid_argument("num_scans must be >= 1");
}

Submap Submap::FromStorage(int id, double resolution, int num_scans,
                           CellIndex offset, int width, int height,
                           std::vector<std::uint16_t> cells,
                           int inserted_scans, bool finished) {
  if (width < 0 || height < 0 ||
      cells.size() != static_cast<std::size_t>(width) * height) {
    throw std::invalid_argument("submap storage size mismatch");
  }
  if (inserted_scans < 0 || inserted_scans > num_scans ||
      finished != (inserted_scans == num_scans)) {
    throw std::invalid_argument("inconsistent submap scan count");
  }
  Submap submap(id, resolution, num_scans);
  submap.offset_ = offset;
  submap.width_ = width;
  submap.height_ = height;
  submap.cells_ = std::move(cells);
  submap.inserted_scans_ = inserted_scans;
  submap.finished_ = finished;
  return submap;
}

BoundingBox Submap::LocalExtent() const {
  return {{offset_.k * resolution_, offset_.l * resolution_},
          {(offset_.k + width_) * resolution_,
           (offset_.l + height_) * resolution_}};
}

void Submap::GrowToInclude(const CellIndex& min, const CellIndex& max) {
  if (empty()) {
    offset_ = min;
    width_ = max.k - min.k + 1;
    height_ = max.l - min.l + 1;
    cells_.assign(static_cast<std::size_t>(width_) * height_,
                  kUnobservedValue);
    return;
  }
  int k0 = offset_.k, k1 = offset_.k + width_;
  int l0 = offset_.l, l1 = offset_.l + height_;
  if (min.k < k0) k0 = std::min(min.k, offset_.k - width_);
  if (max.k >= k1) k1 = std::max(max.k + 1, offset_.k + 2 * width_);
  if (min.l < l0) l0 = std::min(min.l, offset_.l - height_);
  if (max.l >= l1) l1 = std::max(max.l + 1, offset_.l + 2 * height_);
  if (k0 == offset_.k && k1 == offset_.k + width_ && l0 == offset_.l &&
      l1 == offset_.l + height_) {
    return;
  }
  const int new_width = k1 - k0;
  const int new_height = l1 - l0;
  std::vector<std::uint16_t> grown(
      static_cast<std::size_t>(new_width) * new_height, kUnobservedValue);
  for (int row = 0; row < height_; ++row) {
    const auto src = cells_.begin() + static_cast<std::ptrdiff_t>(row) * width_;
    const auto dst = grown.begin() +
                     static_cast<std::ptrdiff_t>(row + offset_.l - l0) *
                         new_width +
                     (offset_.k - k0);
    std::copy(src, src + width_, dst);
  }
  offset_ = {k0, l0};
  width_ = new_width;
  height_ = new_height;
  cells_ = std::move(grown);
}

void Submap::InsertScan(const Scan& scan, const ProbabilityModel& model) {
  if (finished_) {
    throw SubmapError("scan insertion into finished submap " +
                      std::to_string(id_));
  }
  std::vector<std::vector<CellIndex>> rays;
  rays.reserve(scan.hits.size());
  CellIndex lo = CellIndexOf(scan.origin, resolution_);
  CellIndex hi = lo;
  for (const Point2& hit : scan.hits) {
    rays.push_back(TraverseRay(scan.origin, hit, resolution_));
    for (const CellIndex& c : rays.back()) {
      lo = {std::min(lo.k, c.k), std::min(lo.l, c.l)};
      hi = {std::max(hi.k, c.k), std::max(hi.l, c.l)};
    }
  }
  if (!rays.empty()) {
    // One unobserved cell of margin keeps every frontier cell inside the grid.
    GrowToInclude({lo.k - 1, lo.l - 1}, {hi.k + 1, hi.l + 1});
    std::vector<std::uint8_t> touched(cells_.size(), 0);
    for (const auto& ray : rays) {
      const std::size_t i = Linear(ray.back());
      if (!touched[i]) {
        cells_[i] = BayesUpdate(cells_[i], Observation::kHit, model);
        touched[i] = 1;
      }
    }
    for (const auto& ray : rays) {
      for (std::size_t j = 0; j + 1 < ray.size(); ++j) {
        const std::size_t i = Linear(ray[j]);
        if (!touched[i]) {
          cells_[i] = BayesUpdate(cells_[i], Observation::kMiss, model);
          touched[i] = 1;
        }
      }
    }
  }
  ++inserted_scans_;
  if (inserted_scans_ == num_scans_) finished_ = true;
}

void Submap::SetValue(const CellIndex& c, std::uint16_t value) {
  if (finished_) {
    throw SubmapError("modifying finished submap " + std::to_string(id_));
  }
  GrowToInclude(c, c);
  cells_[Linear(c)] = value;
}

BoundingBox GlobalBoundingBox(const Submap& submap,
                              const RigidTransform2& pose) {
  if (submap.empty()) {
    throw SubmapError("bounding box of empty submap " +
                      std::to_string(submap.id()));
  }
  return TransformBox(submap.LocalExtent(), pose);
}

ClassGrid ClassifyGrid(const Submap& submap, double epsilon) {
  ClassGrid grid{submap.width(), submap.height(), {}};
  grid.classes.resize(submap.cells().size());
  kernels::ClassifyParallel(submap.cells(), epsilon, grid.classes);
  return grid;
}

}  // namespace frontier
