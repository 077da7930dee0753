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

#ifndef FRONTIER_SPATIAL_INDEX_H_
#define FRONTIER_SPATIAL_INDEX_H_

#include <memory>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frontier/geometry.h"

namespace frontier {

using SubmapId = int;

class SpatialIndexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Global bounding boxes of finished submaps. Queries return every entry whose
// box intersects the query box, edges included, sorted by id.
class BoundingBoxIndex {
 public:
  BoundingBoxIndex();
  ~BoundingBoxIndex();
  BoundingBoxIndex(BoundingBoxIndex&&) noexcept;
  BoundingBoxIndex& operator=(BoundingBoxIndex&&) noexcept;

  void Insert(SubmapId id, const BoundingBox& box);
  std::vector<SubmapId> QueryIntersecting(const BoundingBox& box) const;
  // Replaces the contents; equivalent to inserting `entries` into a fresh
  // index. Leaves the index unchanged when `entries` has duplicate ids.
  void Rebuild(const std::vector<std::pair<SubmapId, BoundingBox>>& entries);
  void Clear();

  bool Contains(SubmapId id) const { return boxes_.contains(id); }
  std::size_t size() const { return boxes_.size(); }

 private:
  struct Tree;
  std::unique_ptr<Tree> tree_;
  std::unordered_map<SubmapId, BoundingBox> boxes_;
};

}  // namespace frontier

#endif  // FRONTIER_SPATIAL_INDEX_H_
