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

#ifndef FRONTIER_GEOMETRY_H_
#define FRONTIER_GEOMETRY_H_

#include <array>
#include <cmath>
#include <numbers>
#include <ostream>

namespace frontier {

struct Point2 {
  double x = 0.;
  double y = 0.;

  friend bool operator==(const Point2&, const Point2&) = default;
  friend Point2 operator+(const Point2& a, const Point2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend Point2 operator-(const Point2& a, const Point2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend Point2 operator*(double s, const Point2& p) { return {s * p.x, s * p.y}; }
  double Norm() const { return std::hypot(x, y); }
};

std::ostream& operator<<(std::ostream& os, const Point2& p);

// Normalizes an angle to (-pi, pi].
double NormalizeAngle(double angle);

// Planar rigid transformation. Applying it to a point expressed in the source
// frame yields the point in the target frame: p_target = R(rotation) p + t.
class RigidTransform2 {
 public:
  RigidTransform2() = default;
  RigidTransform2(Point2 translation, double rotation)
      : translation_(translation), rotation_(NormalizeAngle(rotation)) {}

  static RigidTransform2 Identity() { return {}; }
  static RigidTransform2 Translation(double x, double y) {
    return {{x, y}, 0.};
  }
  static RigidTransform2 Rotation(double angle) { return {{0., 0.}, angle}; }

  const Point2& translation() const { return translation_; }
  double rotation() const { return rotation_; }

  RigidTransform2 inverse() const;

  friend bool operator==(const RigidTransform2&,
                         const RigidTransform2&) = default;

 private:
  Point2 translation_;
  double rotation_ = 0.;
};

// a * b applies b first, then a.
RigidTransform2 operator*(const RigidTransform2& a, const RigidTransform2& b);
Point2 operator*(const RigidTransform2& t, const Point2& p);

inline RigidTransform2 Compose(const RigidTransform2& a,
                               const RigidTransform2& b) {
  return a * b;
}
inline RigidTransform2 Invert(const RigidTransform2& t) { return t.inverse(); }
inline Point2 ProjectPoint(const RigidTransform2& t, const Point2& p) {
  return t * p;
}

std::ostream& operator<<(std::ostream& os, const RigidTransform2& t);

// Axis-aligned box. Closed on all sides: boxes sharing an edge intersect.
struct BoundingBox {
  Point2 min;
  Point2 max;

  bool Contains(const Point2& p) const {
    return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y;
  }
  friend bool operator==(const BoundingBox&, const BoundingBox&) = default;
};

bool Intersects(const BoundingBox& a, const BoundingBox& b);

// Axis-aligned box in the target frame enclosing `local` after transforming
// its four corners by `pose`.
BoundingBox TransformBox(const BoundingBox& local, const RigidTransform2& pose);

}  // namespace frontier

#endif  // FRONTIER_GEOMETRY_H_
