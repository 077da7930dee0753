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

#include "frontier/render.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace frontier {

namespace {

const Rgb& ColorOf(CellClass c) {
  switch (c) {
    case CellClass::kFree:
      return kFreeColor;
    case CellClass::kOccupied:
      return kOccupiedColor;
    case CellClass::kUnobserved:
      break;
  }
  return kUnobservedColor;
}

std::ofstream OpenOutput(const std::string& path, std::ios::openmode mode) {
  std::ofstream out(path, mode);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

std::string Hex(const Rgb& c) {
  char buffer[8];
  std::snprintf(buffer, sizeof(buffer), "#%02x%02x%02x", c[0], c[1], c[2]);
  return buffer;
}

}  // namespace

Image RenderMap(const GlobalGrid& grid, std::span<const Point2> frontier,
                int scale) {
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  Image image;
  if (grid.width == 0 || grid.height == 0) {
    image.width = image.height = 1;
    image.pixels = {kUnobservedColor};
    return image;
  }
  image.width = grid.width * scale;
  image.height = grid.height * scale;
  image.pixels.resize(static_cast<std::size_t>(image.width) * image.height);
  const auto paint = [&](int column, int row, const Rgb& color) {
    const int top = (grid.height - 1 - row) * scale;
    for (int y = top; y < top + scale; ++y) {
      for (int x = column * scale; x < (column + 1) * scale; ++x) {
        image.pixels[static_cast<std::size_t>(y) * image.width + x] = color;
      }
    }
  };
  for (int row = 0; row < grid.height; ++row) {
    for (int column = 0; column < grid.width; ++column) {
      paint(column, row,
            ColorOf(grid.at({grid.offset.k + column, grid.offset.l + row})));
    }
  }
  for (const Point2& p : frontier) {
    const int column =
        static_cast<int>(std::floor(p.x / grid.resolution)) - grid.offset.k;
    const int row =
        static_cast<int>(std::floor(p.y / grid.resolution)) - grid.offset.l;
    if (column < 0 || row < 0 || column >= grid.width || row >= grid.height) {
      continue;
    }
    paint(column, row, kFrontierColor);
  }
  return image;
}

void WritePpm(const std::string& path, const Image& image) {
  std::ofstream out = OpenOutput(path, std::ios::binary);
  out << "P6\n" << image.width << " " << image.height << "\n255\n";
  for (const Rgb& c : image.pixels) {
    out.write(reinterpret_cast<const char*>(c.data()), 3);
  }
  if (!out) throw std::runtime_error("cannot write " + path);
}

void WriteSvg(const std::string& path, const GlobalGrid& grid,
              std::span<const Point2> frontier, int scale) {
  std::ofstream out = OpenOutput(path, std::ios::out);
  const int width = std::max(1, grid.width * scale);
  const int height = std::max(1, grid.height * scale);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\">\n";
  out << "<rect width=\"" << width << "\" height=\"" << height
      << "\" fill=\"" << Hex(kUnobservedColor) << "\"/>\n";
  for (int row = 0; row < grid.height; ++row) {
    for (int column = 0; column < grid.width; ++column) {
      const CellClass c =
          grid.at({grid.offset.k + column, grid.offset.l + row});
      if (c == CellClass::kUnobserved) continue;
      out << "<rect x=\"" << column * scale << "\" y=\""
          << (grid.height - 1 - row) * scale << "\" width=\"" << scale
          << "\" height=\"" << scale << "\" fill=\"" << Hex(ColorOf(c))
          << "\"/>\n";
    }
  }
  for (const Point2& p : frontier) {
    const double x = (p.x / grid.resolution - grid.offset.k) * scale;
    const double y = height - (p.y / grid.resolution - grid.offset.l) * scale;
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\""
        << 0.35 * scale << "\" fill=\"" << Hex(kFrontierColor) << "\"/>\n";
  }
  out << "</svg>\n";
  if (!out) throw std::runtime_error("cannot write " + path);
}

}  // namespace frontier
