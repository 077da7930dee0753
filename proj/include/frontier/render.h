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

#ifndef FRONTIER_RENDER_H_
#define FRONTIER_RENDER_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "frontier/geometry.h"
#include "frontier/oracle.h"

namespace frontier {

using Rgb = std::array<std::uint8_t, 3>;

inline constexpr Rgb kUnobservedColor = {128, 128, 128};
inline constexpr Rgb kFreeColor = {255, 255, 255};
inline constexpr Rgb kOccupiedColor = {0, 0, 0};
inline constexpr Rgb kFrontierColor = {255, 0, 0};

struct Image {
  int width = 0;
  int height = 0;
  std::vector<Rgb> pixels;  // Row-major, top row first.

  const Rgb& at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
};

// `scale` pixels per cell, +y up. Frontier points paint their cell red.
// An empty grid gives a single unobserved pixel.
Image RenderMap(const GlobalGrid& grid, std::span<const Point2> frontier,
                int scale = 4);

// Binary PPM (P6).
void WritePpm(const std::string& path, const Image& image);
// Same picture as cell rectangles plus frontier dots.
void WriteSvg(const std::string& path, const GlobalGrid& grid,
              std::span<const Point2> frontier, int scale = 4);

}  // namespace frontier

#endif  // FRONTIER_RENDER_H_
