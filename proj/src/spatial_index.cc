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

#include "frontier/spatial_index.h"

#include <algorithm>
#include <iterator>
#include <string>
#include <unordered_set>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

namespace frontier {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;

namespace {

using BgPoint = bg::model::point<double, 2, bg::cs::cartesian>;
using BgBox = bg::model::box<BgPoint>;
using Value = std::pair<BgBox, SubmapId>;

BgBox ToBg(const BoundingBox& box) {
  return {{box.min.x, box.min.y}, {box.max.x, box.max.y}};
}

}  // namespace

struct BoundingBoxIndex::Tree {
  bgi::rtree<Value, bgi::quadratic<16>> rtree;
};

BoundingBoxIndex::BoundingBoxIndex() : tree_(std::make_unique<Tree>()) {}
BoundingBoxIndex::~BoundingBoxIndex() = default;
BoundingBoxIndex::BoundingBoxIndex(BoundingBoxIndex&&) noexcept = default;
BoundingBoxIndex& BoundingBoxIndex::operator=(BoundingBoxIndex&&) noexcept =
    default;

void BoundingBoxIndex::Insert(SubmapId id, const BoundingBox& box) {
  if (!boxes_.emplace(id, box).second) {
    throw SpatialIndexError("submap " + std::to_string(id) +
                            " already in bounding box index");
  }
  tree_->rtree.insert({ToBg(box), id});
}

std::vector<SubmapId> BoundingBoxIndex::QueryIntersecting(
    const BoundingBox& box) const {
  std::vector<Value> hits;
  tree_->rtree.query(bgi::intersects(ToBg(box)), std::back_inserter(hits));
  std::vector<SubmapId> ids;
  ids.reserve(hits.size());
  for (const auto& hit : hits) ids.push_back(hit.second);
  std::sort(ids.begin(), ids.end());
  return ids;
}

void BoundingBoxIndex::Rebuild(
    const std::vector<std::pair<SubmapId, BoundingBox>>& entries) {
  std::unordered_set<SubmapId> seen;
  for (const auto& [id, box] : entries) {
    if (!seen.insert(id).second) {
      throw SpatialIndexError("duplicate submap " + std::to_string(id) +
                              " in rebuild");
    }
  }
  std::vector<Value> values;
  values.reserve(entries.size());
  boxes_.clear();
  for (const auto& [id, box] : entries) {
    values.push_back({ToBg(box), id});
    boxes_.emplace(id, box);
  }
  // Bulk-loading constructor.
  tree_->rtree = bgi::rtree<Value, bgi::quadratic<16>>(values);
}

void BoundingBoxIndex::Clear() {
  tree_->rtree.clear();
  boxes_.clear();
}

}  // namespace frontier
