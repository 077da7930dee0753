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

#include "frontier/geometry.h"

#include <algorithm>
#include <stdexcept>

namespace frontier {

std::ostream& operator<<(std::ostream& os, const Point2& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

double NormalizeAngle(double angle) {
  constexpr double kTwoPi = 2. * std::numbers::pi;
  double a = std::fmod(angle, kTwoPi);
  if (a <= -std::numbers::pi) a += kTwoPi;
  if (a > std::numbers::pi) a -= kTwoPi;
  return a;
}

RigidTransform2 RigidTransform2::inverse() const {
  const double c = std::cos(rotation_);
  const double s = std::sin(rotation_);
  return {{-c * translation_.x - s * translation_.y,
           s * translation_.x - c * translation_.y},
          -rotation_};
}

RigidTransform2 operator*(const RigidTransform2& a, const RigidTransform2& b) {
  return {a * b.translation(), a.rotation() + b.rotation()};
}

Point2 operator*(const RigidTransform2& t, const Point2& p) {
  const double c = std::cos(t.rotation());
  const double s = std::sin(t.rotation());
  return {c * p.x - s * p.y + t.translation().x,
          s * p.x + c * p.y + t.translation().y};
}

std::ostream& operator<<(std::ostream& os, const RigidTransform2& t) {
  return os << "{t: " << t.translation() << ", r: " << t.rotation() << "}";
}

bool Intersects(const BoundingBox& a, const BoundingBox& b) {
  return a.min.x <= b.max.x && b.min.x <= a.max.x && a.min.y <= b.max.y &&
         b.min.y <= a.max.y;
}

BoundingBox TransformBox(const BoundingBox& local,
                         const RigidTransform2& pose) {
  const std::array<Point2, 4> corners = {
      pose * local.min, pose * Point2{local.max.x, local.min.y},
      pose * local.max, pose * Point2{local.min.x, local.max.y}};
  BoundingBox box{corners[0], corners[0]};
  for (const Point2& c : corners) {
    box.min.x = std::min(box.min.x, c.x);
    box.min.y = std::min(box.min.y, c.y);
    box.max.x = std::max(box.max.x, c.x);
    box.max.y = std::max(box.max.y, c.y);
  }
  return box;
}

}  // namespace frontier
