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

#include "frontier/kernels.h"

#include <cassert>

namespace frontier::kernels {

void ClassifySerial(std::span<const std::uint16_t> values, double epsilon,
                    std::span<CellClass> out) {
  assert(values.size() == out.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = Classify(values[i], epsilon);
  }
}

void ClassifyParallel(std::span<const std::uint16_t> values, double epsilon,
                      std::span<CellClass> out) {
  assert(values.size() == out.size());
  const auto n = static_cast<std::ptrdiff_t>(values.size());
#pragma omp parallel for schedule(static) if (n > 1 << 14)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    out[i] = Classify(values[i], epsilon);
  }
}

bool IsFrontierCell(const ClassGrid& grid, int column, int row,
                    bool smoothing) {
  if (grid.at(column, row) != CellClass::kUnobserved) return false;
  int free = 0;
  int unobserved = 0;
  for (int dr = -1; dr <= 1; ++dr) {
    for (int dc = -1; dc <= 1; ++dc) {
      if (dr == 0 && dc == 0) continue;
      const CellClass c = grid.at(column + dc, row + dr);
      free += c == CellClass::kFree;
      unobserved += c == CellClass::kUnobserved;
    }
  }
  return smoothing ? (free >= 2 && unobserved >= 2) : free >= 1;
}

namespace {

// Interior rows skip the bounds checks of ClassGrid::at.
void MaskRow(const ClassGrid& grid, bool smoothing, int row,
             std::uint8_t* out) {
  const int w = grid.width;
  if (row == 0 || row == grid.height - 1 || w < 3) {
    for (int c = 0; c < w; ++c) out[c] = IsFrontierCell(grid, c, row, smoothing);
    return;
  }
  const CellClass* up = grid.classes.data() + static_cast<std::size_t>(row - 1) * w;
  const CellClass* mid = up + w;
  const CellClass* down = mid + w;
  out[0] = IsFrontierCell(grid, 0, row, smoothing);
  out[w - 1] = IsFrontierCell(grid, w - 1, row, smoothing);
  for (int c = 1; c < w - 1; ++c) {
    const int free = (up[c - 1] == CellClass::kFree) + (up[c] == CellClass::kFree) +
                     (up[c + 1] == CellClass::kFree) +
                     (mid[c - 1] == CellClass::kFree) +
                     (mid[c + 1] == CellClass::kFree) +
                     (down[c - 1] == CellClass::kFree) +
                     (down[c] == CellClass::kFree) +
                     (down[c + 1] == CellClass::kFree);
    const int unobserved = (up[c - 1] == CellClass::kUnobserved) +
                           (up[c] == CellClass::kUnobserved) +
                           (up[c + 1] == CellClass::kUnobserved) +
                           (mid[c - 1] == CellClass::kUnobserved) +
                           (mid[c + 1] == CellClass::kUnobserved) +
                           (down[c - 1] == CellClass::kUnobserved) +
                           (down[c] == CellClass::kUnobserved) +
                           (down[c + 1] == CellClass::kUnobserved);
    const bool hit = smoothing ? (free >= 2 && unobserved >= 2) : free >= 1;
    out[c] = mid[c] == CellClass::kUnobserved && hit;
  }
}

}  // namespace

void FrontierMaskSerial(const ClassGrid& grid, bool smoothing,
                        std::span<std::uint8_t> out) {
  assert(out.size() == grid.classes.size());
  for (int row = 0; row < grid.height; ++row) {
    for (int c = 0; c < grid.width; ++c) {
      out[static_cast<std::size_t>(row) * grid.width + c] =
          IsFrontierCell(grid, c, row, smoothing);
    }
  }
}

void FrontierMaskParallel(const ClassGrid& grid, bool smoothing,
                          std::span<std::uint8_t> out) {
  assert(out.size() == grid.classes.size());
#pragma omp parallel for schedule(static) if (grid.classes.size() > 1 << 14)
  for (int row = 0; row < grid.height; ++row) {
    MaskRow(grid, smoothing, row,
            out.data() + static_cast<std::size_t>(row) * grid.width);
  }
}

}  // namespace frontier::kernels
