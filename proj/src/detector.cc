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

#include "frontier/detector.h"

#include <algorithm>
#include <string>

#include "frontier/kernels.h"

namespace frontier {

bool SameSubmap(const Submap& a, const Submap& b) {
  return a.id() == b.id() && a.resolution() == b.resolution() &&
         a.num_scans() == b.num_scans() &&
         a.inserted_scans() == b.inserted_scans() &&
         a.finished() == b.finished() && a.offset() == b.offset() &&
         a.width() == b.width() && a.height() == b.height() &&
         std::ranges::equal(a.cells(), b.cells());
}

bool operator==(const SubmapSnapshot& a, const SubmapSnapshot& b) {
  if (a.global_pose != b.global_pose || a.local_pose != b.local_pose) {
    return false;
  }
  if (!a.submap || !b.submap) return a.submap == b.submap;
  return SameSubmap(*a.submap, *b.submap);
}

bool operator==(const ScanInserted& a, const ScanInserted& b) {
  return a.epoch == b.epoch && a.active == b.active;
}
bool operator==(const SubmapFinished& a, const SubmapFinished& b) {
  return a.epoch == b.epoch && a.id == b.id;
}
bool operator==(const OptimizationDone& a, const OptimizationDone& b) {
  return a.solution == b.solution;
}

bool StabbingQueryTest(const Point2& global_point, const Submap& submap,
                       const RigidTransform2& pose, double epsilon) {
  const Point2 local = pose.inverse() * global_point;
  return Classify(submap.value(CellIndexOf(local, submap.resolution())),
                  epsilon) == CellClass::kUnobserved;
}

LocalFrontier DetectLocalFrontier(const Submap& submap,
                                  const DetectorConfig& config,
                                  std::span<const BakingReference> baking) {
  LocalFrontier frontier;
  frontier.owner = submap.id();
  if (submap.empty()) return frontier;
  const ClassGrid classes = ClassifyGrid(submap, config.epsilon);
  std::vector<std::uint8_t> mask(classes.classes.size());
  kernels::FrontierMaskParallel(classes, config.smoothing, mask);
  for (int row = 0; row < classes.height; ++row) {
    for (int column = 0; column < classes.width; ++column) {
      if (!mask[static_cast<std::size_t>(row) * classes.width + column]) {
        continue;
      }
      const CellIndex cell = submap.IndexAt(column, row);
      const Point2 center = CellCenter(cell, submap.resolution());
      const bool baked_out = std::ranges::any_of(
          baking, [&](const BakingReference& ref) {
            return !StabbingQueryTest(center, *ref.submap, ref.from_candidate,
                                      config.epsilon);
          });
      if (!baked_out) frontier.cells.push_back(cell);
    }
  }
  frontier.hints.assign(frontier.cells.size(), std::nullopt);
  return frontier;
}

FrontierDetector::FrontierDetector(DetectorConfig config) : config_(config) {}

void FrontierDetector::SetPose(SubmapState& state,
                               const RigidTransform2& pose) {
  state.pose = pose;
  state.pose_inverse = pose.inverse();
  state.box.reset();
  if (state.submap && !state.submap->empty()) {
    state.box = GlobalBoundingBox(*state.submap, pose);
  }
}

bool FrontierDetector::Stab(const Point2& p, const SubmapState& state) {
  ++last_stats_.stabbing_tests;
  const Submap& submap = *state.submap;
  const CellIndex cell =
      CellIndexOf(state.pose_inverse * p, submap.resolution());
  return Classify(submap.value(cell), config_.epsilon) ==
         CellClass::kUnobserved;
}

std::vector<SubmapId> FrontierDetector::TestSet(
    SubmapId self, const std::vector<SubmapId>& intersecting) const {
  std::vector<SubmapId> ids;
  ids.reserve(intersecting.size() + active_.size());
  std::ranges::set_union(intersecting, active_, std::back_inserter(ids));
  std::erase(ids, self);
  return ids;
}

std::vector<BakingReference> FrontierDetector::BakingReferences(
    SubmapId id) const {
  std::vector<BakingReference> refs;
  const SubmapState& self = states_.at(id);
  for (int back = 1; back <= config_.baking_submaps; ++back) {
    const auto it = states_.find(id - back);
    if (it == states_.end() || !it->second.submap) continue;
    refs.push_back({it->second.submap.get(),
                    it->second.local_pose.inverse() * self.local_pose});
  }
  return refs;
}

std::vector<FrontierUpdate> FrontierDetector::HandleSubmapUpdates(
    const std::vector<SubmapSnapshot>& active) {
  last_stats_ = {};
  std::vector<SubmapId> active_ids;
  for (const SubmapSnapshot& snapshot : active) {
    if (!snapshot.submap) throw DetectorError("submap update without grid");
    active_ids.push_back(snapshot.submap->id());
  }
  std::ranges::sort(active_ids);
  if (std::ranges::adjacent_find(active_ids) != active_ids.end()) {
    throw DetectorError("duplicate submap in update");
  }
  for (const SubmapSnapshot& snapshot : active) {
    SubmapState& state = states_[snapshot.submap->id()];
    if (state.submap && state.submap->finished()) {
      throw DetectorError("update for finished submap " +
                          std::to_string(snapshot.submap->id()));
    }
    state.submap = snapshot.submap;
    state.local_pose = snapshot.local_pose;
    SetPose(state, snapshot.global_pose);
  }
  active_ = active_ids;

  std::vector<SubmapId> updated = active_ids;
  for (const SubmapId si : active_ids) {
    SubmapState& state = states_.at(si);
    state.local = DetectLocalFrontier(*state.submap, config_,
                                      BakingReferences(si));
    state.global.clear();
    if (!state.box) continue;

    const std::vector<SubmapId> intersecting =
        index_.QueryIntersecting(*state.box);
    const std::vector<SubmapId> test_set = TestSet(si, intersecting);
    const double resolution = state.submap->resolution();
    for (std::size_t i = 0; i < state.local.cells.size(); ++i) {
      const Point2 p = state.pose * CellCenter(state.local.cells[i], resolution);
      ++last_stats_.tested_points;
      bool passes = true;
      for (const SubmapId sj : test_set) {
        if (!Stab(p, states_.at(sj))) {
          state.local.hints[i] = sj;
          passes = false;
          break;
        }
      }
      if (passes) {
        state.global.push_back(p);
      } else {
        ++last_stats_.failing_points;
      }
    }

    // Newly observed cells of si can only cover points of its neighbours.
    for (const SubmapId sj : intersecting) {
      std::vector<Point2>& points = states_.at(sj).global;
      const std::size_t before = points.size();
      std::erase_if(points, [&](const Point2& p) { return !Stab(p, state); });
      if (points.size() != before) updated.push_back(sj);
    }
  }

  for (const SubmapId si : active_ids) {
    const SubmapState& state = states_.at(si);
    if (state.submap->finished() && state.box && !index_.Contains(si)) {
      index_.Insert(si, *state.box);
    }
  }

  std::ranges::sort(updated);
  updated.erase(std::unique(updated.begin(), updated.end()), updated.end());
  std::vector<FrontierUpdate> updates;
  for (const SubmapId id : updated) {
    updates.push_back({id, states_.at(id).global});
  }
  return updates;
}

std::vector<FrontierUpdate> FrontierDetector::HandleOptimization(
    const PoseGraphSolution& solution) {
  last_stats_ = {};
  for (const auto& [id, state] : states_) {
    if (!solution.poses.contains(id)) {
      throw DetectorError("pose graph solution misses submap " +
                          std::to_string(id));
    }
  }
  std::vector<std::pair<SubmapId, BoundingBox>> finished_boxes;
  for (auto& [id, state] : states_) {
    SetPose(state, solution.poses.at(id));
    if (state.submap->finished() && state.box) {
      finished_boxes.emplace_back(id, *state.box);
    }
  }
  index_.Rebuild(finished_boxes);

  std::vector<FrontierUpdate> updates;
  for (auto& [si, state] : states_) {
    state.global.clear();
    if (state.box) {
      const std::vector<SubmapId> test_set =
          TestSet(si, index_.QueryIntersecting(*state.box));
      const double resolution = state.submap->resolution();
      for (std::size_t i = 0; i < state.local.cells.size(); ++i) {
        const Point2 p =
            state.pose * CellCenter(state.local.cells[i], resolution);
        ++last_stats_.tested_points;
        const std::uint64_t tests_before = last_stats_.stabbing_tests;
        std::optional<SubmapId>& hint = state.local.hints[i];
        bool passes = true;
        // The failing submap from the previous test usually rejects again.
        if (hint && *hint != si && states_.contains(*hint)) {
          if (!Stab(p, states_.at(*hint))) {
            passes = false;
            ++last_stats_.hint_rejections;
          }
        }
        if (passes) {
          for (const SubmapId sj : test_set) {
            if (hint && sj == *hint) continue;
            if (!Stab(p, states_.at(sj))) {
              hint = sj;
              passes = false;
              break;
            }
          }
        }
        if (passes) {
          hint.reset();
          state.global.push_back(p);
        } else {
          ++last_stats_.failing_points;
          last_stats_.stabbing_tests_on_failing_points +=
              last_stats_.stabbing_tests - tests_before;
        }
      }
    }
    updates.push_back({si, state.global});
  }
  return updates;
}

std::vector<FrontierUpdate> FrontierDetector::HandleEvent(const Event& event) {
  if (const auto* scan = std::get_if<ScanInserted>(&event)) {
    return HandleSubmapUpdates(scan->active);
  }
  if (const auto* optimized = std::get_if<OptimizationDone>(&event)) {
    return HandleOptimization(optimized->solution);
  }
  const auto& finished = std::get<SubmapFinished>(event);
  const auto it = states_.find(finished.id);
  if (it == states_.end() || !it->second.submap->finished() ||
      !index_.Contains(finished.id)) {
    throw DetectorError("finish event for submap " +
                        std::to_string(finished.id) +
                        " without its final update");
  }
  last_stats_ = {};
  return {};
}

std::vector<SubmapId> FrontierDetector::submap_ids() const {
  std::vector<SubmapId> ids;
  for (const auto& [id, state] : states_) ids.push_back(id);
  return ids;
}

const Submap* FrontierDetector::submap(SubmapId id) const {
  const auto it = states_.find(id);
  return it == states_.end() ? nullptr : it->second.submap.get();
}

std::optional<RigidTransform2> FrontierDetector::pose(SubmapId id) const {
  const auto it = states_.find(id);
  if (it == states_.end()) return std::nullopt;
  return it->second.pose;
}

const LocalFrontier* FrontierDetector::local_frontier(SubmapId id) const {
  const auto it = states_.find(id);
  return it == states_.end() ? nullptr : &it->second.local;
}

const std::vector<Point2>& FrontierDetector::global_frontier(
    SubmapId id) const {
  static const std::vector<Point2> kEmpty;
  const auto it = states_.find(id);
  return it == states_.end() ? kEmpty : it->second.global;
}

std::vector<Point2> FrontierDetector::AllGlobalFrontierPoints() const {
  std::vector<Point2> points;
  for (const auto& [id, state] : states_) {
    points.insert(points.end(), state.global.begin(), state.global.end());
  }
  return points;
}

std::size_t FrontierDetector::GlobalFrontierSize() const {
  std::size_t n = 0;
  for (const auto& [id, state] : states_) n += state.global.size();
  return n;
}

bool FrontierDetector::CheckValidityInvariant() const {
  for (const auto& [si, state] : states_) {
    for (const Point2& p : state.global) {
      for (const auto& [sj, other] : states_) {
        if (sj == si) continue;
        if (!StabbingQueryTest(p, *other.submap, other.pose,
                               config_.epsilon)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace frontier
