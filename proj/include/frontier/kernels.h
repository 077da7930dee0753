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

#ifndef FRONTIER_KERNELS_H_
#define FRONTIER_KERNELS_H_

// Data-parallel per-cell kernels. Each has a plain serial reference that the
// tests and the benchmark compare the OpenMP version against.

#include <cstdint>
#include <span>

#include "frontier/grid.h"

namespace frontier::kernels {

void ClassifySerial(std::span<const std::uint16_t> values, double epsilon,
                    std::span<CellClass> out);
void ClassifyParallel(std::span<const std::uint16_t> values, double epsilon,
                      std::span<CellClass> out);

// out[i] = 1 iff cell i is an unobserved cell with >= 1 free Moore neighbour
// (smoothing off) or >= 2 free and >= 2 unobserved neighbours (smoothing on).
// Cells beyond the grid count as unobserved.
void FrontierMaskSerial(const ClassGrid& grid, bool smoothing,
                        std::span<std::uint8_t> out);
void FrontierMaskParallel(const ClassGrid& grid, bool smoothing,
                          std::span<std::uint8_t> out);

bool IsFrontierCell(const ClassGrid& grid, int column, int row,
                    bool smoothing);

}  // namespace frontier::kernels

#endif  // FRONTIER_KERNELS_H_
