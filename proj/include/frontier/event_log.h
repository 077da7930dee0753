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

#ifndef FRONTIER_EVENT_LOG_H_
#define FRONTIER_EVENT_LOG_H_

// Event log: a text file of one JSON record per line, preceded by a header
// line. Submap grids live in a sidecar blob (`<log>.bin`) as row-major
// little-endian uint16 cell values; records reference them by offset and
// length in bytes.
//
//   {"format":"frontier-event-log","version":1,"resolution":0.05,...}
//   {"record":0,"type":"scan","epoch":0,"submaps":[{...,"blob_offset":0,...}]}
//   {"record":1,"type":"finished","epoch":0,"id":0}
//   {"record":2,"type":"optimized","epoch":1,"poses":[[0,x,y,theta],...]}

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "frontier/detector.h"
#include "frontier/events.h"

namespace frontier {

inline constexpr int kEventLogVersion = 1;
inline constexpr const char* kEventLogFormat = "frontier-event-log";

class EventLogError : public std::runtime_error {
 public:
  EventLogError(const std::string& what, std::optional<std::size_t> record)
      : std::runtime_error(record ? "record " + std::to_string(*record) +
                                        ": " + what
                                  : what),
        record_(record) {}
  // Index of the record that failed, if the header itself was readable.
  std::optional<std::size_t> record() const { return record_; }

 private:
  std::optional<std::size_t> record_;
};

struct EventLog {
  double resolution = 0.05;
  int n_scans = 100;
  // Resolved run configuration, stored verbatim.
  nlohmann::json config = nlohmann::json::object();
  std::vector<Event> events;
};

std::string BlobPath(const std::string& log_path);

void WriteEventLog(const std::string& path, const EventLog& log);
EventLog ReadEventLog(const std::string& path);

// Frontier update stream: one JSON line per published update.
//   {"event":12,"submap":3,"count":2,"points":[[x,y],[x,y]]}
struct RecordedUpdate {
  std::size_t event_index = 0;
  FrontierUpdate update;
};

nlohmann::json ToJson(std::size_t event_index, const FrontierUpdate& update);
std::vector<RecordedUpdate> ReadFrontierStream(const std::string& path);

nlohmann::json ToJson(const RigidTransform2& pose);
RigidTransform2 PoseFromJson(const nlohmann::json& j);

}  // namespace frontier

#endif  // FRONTIER_EVENT_LOG_H_
