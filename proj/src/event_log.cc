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

#include "frontier/event_log.h"

#include <fstream>
#include <sstream>

namespace frontier {

using nlohmann::json;

std::string BlobPath(const std::string& log_path) { return log_path + ".bin"; }

json ToJson(const RigidTransform2& pose) {
  return json::array(
      {pose.translation().x, pose.translation().y, pose.rotation()});
}

RigidTransform2 PoseFromJson(const json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("bad pose");
  return {{j[0].get<double>(), j[1].get<double>()}, j[2].get<double>()};
}

namespace {

void AppendLittleEndian(std::string& blob, std::span<const std::uint16_t> v) {
  for (const std::uint16_t value : v) {
    blob.push_back(static_cast<char>(value & 0xff));
    blob.push_back(static_cast<char>(value >> 8));
  }
}

json SubmapRecord(const SubmapSnapshot& snapshot, std::string& blob) {
  const Submap& s = *snapshot.submap;
  json j = {{"id", s.id()},
            {"resolution", s.resolution()},
            {"n_scans", s.num_scans()},
            {"offset", {s.offset().k, s.offset().l}},
            {"size", {s.width(), s.height()}},
            {"inserted_scans", s.inserted_scans()},
            {"finished", s.finished()},
            {"pose", ToJson(snapshot.global_pose)},
            {"local_pose", ToJson(snapshot.local_pose)},
            {"blob_offset", blob.size()},
            {"blob_length", s.cells().size() * 2}};
  AppendLittleEndian(blob, s.cells());
  return j;
}

json EventRecord(std::size_t index, const Event& event, std::string& blob) {
  json j = {{"record", index}};
  if (const auto* scan = std::get_if<ScanInserted>(&event)) {
    j["type"] = "scan";
    j["epoch"] = scan->epoch;
    j["submaps"] = json::array();
    for (const SubmapSnapshot& s : scan->active) {
      j["submaps"].push_back(SubmapRecord(s, blob));
    }
  } else if (const auto* finished = std::get_if<SubmapFinished>(&event)) {
    j["type"] = "finished";
    j["epoch"] = finished->epoch;
    j["id"] = finished->id;
  } else {
    const auto& optimized = std::get<OptimizationDone>(event);
    j["type"] = "optimized";
    j["epoch"] = optimized.solution.epoch;
    j["poses"] = json::array();
    for (const auto& [id, pose] : optimized.solution.poses) {
      const json p = ToJson(pose);
      j["poses"].push_back({id, p[0], p[1], p[2]});
    }
  }
  return j;
}

SubmapSnapshot ParseSubmap(const json& j, const std::string& blob) {
  const std::size_t offset = j.at("blob_offset").get<std::size_t>();
  const std::size_t length = j.at("blob_length").get<std::size_t>();
  const int width = j.at("size").at(0).get<int>();
  const int height = j.at("size").at(1).get<int>();
  if (width < 0 || height < 0 ||
      length != static_cast<std::size_t>(width) * height * 2) {
    throw std::invalid_argument("grid size does not match blob length");
  }
  if (offset > blob.size() || length > blob.size() - offset) {
    throw std::invalid_argument("grid blob range beyond end of blob");
  }
  std::vector<std::uint16_t> cells(length / 2);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto lo = static_cast<unsigned char>(blob[offset + 2 * i]);
    const auto hi = static_cast<unsigned char>(blob[offset + 2 * i + 1]);
    cells[i] = static_cast<std::uint16_t>(lo | (hi << 8));
  }
  auto submap = std::make_shared<const Submap>(Submap::FromStorage(
      j.at("id").get<int>(), j.at("resolution").get<double>(),
      j.at("n_scans").get<int>(),
      {j.at("offset").at(0).get<int>(), j.at("offset").at(1).get<int>()},
      width, height, std::move(cells), j.at("inserted_scans").get<int>(),
      j.at("finished").get<bool>()));
  return {std::move(submap), PoseFromJson(j.at("pose")),
          PoseFromJson(j.at("local_pose"))};
}

Event ParseEvent(const json& j, const std::string& blob) {
  const std::string type = j.at("type").get<std::string>();
  const int epoch = j.at("epoch").get<int>();
  if (type == "scan") {
    ScanInserted scan{epoch, {}};
    for (const json& s : j.at("submaps")) {
      scan.active.push_back(ParseSubmap(s, blob));
    }
    return scan;
  }
  if (type == "finished") return SubmapFinished{epoch, j.at("id").get<int>()};
  if (type == "optimized") {
    PoseGraphSolution solution;
    solution.epoch = epoch;
    for (const json& p : j.at("poses")) {
      if (!p.is_array() || p.size() != 4) {
        throw std::invalid_argument("bad pose entry");
      }
      solution.poses[p[0].get<int>()] =
          RigidTransform2({p[1].get<double>(), p[2].get<double>()},
                          p[3].get<double>());
    }
    return OptimizationDone{std::move(solution)};
  }
  throw std::invalid_argument("unknown record type '" + type + "'");
}

std::string BaseName(const std::string& path) {
  const auto slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

}  // namespace

void WriteEventLog(const std::string& path, const EventLog& log) {
  std::string blob;
  std::ostringstream text;
  const json header = {{"format", kEventLogFormat},
                       {"version", kEventLogVersion},
                       {"resolution", log.resolution},
                       {"n_scans", log.n_scans},
                       {"records", log.events.size()},
                       {"blob", BaseName(BlobPath(path))},
                       {"config", log.config}};
  text << header.dump() << '\n';
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    text << EventRecord(i, log.events[i], blob).dump() << '\n';
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  std::ofstream blob_out(BlobPath(path), std::ios::binary | std::ios::trunc);
  if (!out || !blob_out) {
    throw EventLogError("cannot open " + path + " for writing", std::nullopt);
  }
  const std::string body = text.str();
  out.write(body.data(), static_cast<std::streamsize>(body.size()));
  blob_out.write(blob.data(), static_cast<std::streamsize>(blob.size()));
  if (!out || !blob_out) {
    throw EventLogError("write to " + path + " failed", std::nullopt);
  }
}

EventLog ReadEventLog(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw EventLogError("cannot open " + path, std::nullopt);
  std::ostringstream text_stream;
  text_stream << in.rdbuf();
  const std::string text = text_stream.str();
  std::ifstream blob_in(BlobPath(path), std::ios::binary);
  std::string blob;
  if (blob_in) {
    std::ostringstream b;
    b << blob_in.rdbuf();
    blob = b.str();
  }

  std::vector<std::string> lines;
  std::size_t start = 0;
  bool complete = true;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string::npos) {
      lines.push_back(text.substr(start));
      complete = false;
      break;
    }
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  if (lines.empty()) throw EventLogError("missing header", std::nullopt);

  EventLog log;
  std::size_t expected_records = 0;
  try {
    const json header = json::parse(lines[0]);
    if (header.at("format") != kEventLogFormat) {
      throw std::invalid_argument("not an event log");
    }
    if (header.at("version").get<int>() != kEventLogVersion) {
      throw std::invalid_argument("unsupported version");
    }
    log.resolution = header.at("resolution").get<double>();
    log.n_scans = header.at("n_scans").get<int>();
    log.config = header.value("config", json::object());
    expected_records = header.at("records").get<std::size_t>();
  } catch (const std::exception& e) {
    throw EventLogError(std::string("bad header: ") + e.what(), std::nullopt);
  }
  if (!complete && lines.size() == 1) {
    throw EventLogError("truncated header", std::nullopt);
  }

  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t record = i - 1;
    if (i + 1 == lines.size() && !complete) {
      throw EventLogError("truncated record", record);
    }
    try {
      const json j = json::parse(lines[i]);
      if (j.at("record").get<std::size_t>() != record) {
        throw std::invalid_argument("record index out of sequence");
      }
      log.events.push_back(ParseEvent(j, blob));
    } catch (const EventLogError&) {
      throw;
    } catch (const std::exception& e) {
      throw EventLogError(e.what(), record);
    }
  }
  if (log.events.size() != expected_records) {
    throw EventLogError("log ends early: expected " +
                            std::to_string(expected_records) + " records",
                        log.events.size());
  }
  return log;
}

json ToJson(std::size_t event_index, const FrontierUpdate& update) {
  json points = json::array();
  for (const Point2& p : update.points) points.push_back({p.x, p.y});
  return {{"event", event_index},
          {"submap", update.submap},
          {"count", update.points.size()},
          {"points", std::move(points)}};
}

std::vector<RecordedUpdate> ReadFrontierStream(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw EventLogError("cannot open " + path, std::nullopt);
  std::vector<RecordedUpdate> updates;
  std::string line;
  std::size_t index = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      const json j = json::parse(line);
      RecordedUpdate r;
      r.event_index = j.at("event").get<std::size_t>();
      r.update.submap = j.at("submap").get<int>();
      for (const json& p : j.at("points")) {
        r.update.points.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
      }
      if (j.at("count").get<std::size_t>() != r.update.points.size()) {
        throw std::invalid_argument("point count mismatch");
      }
      updates.push_back(std::move(r));
    } catch (const std::exception& e) {
      throw EventLogError(e.what(), index);
    }
    ++index;
  }
  return updates;
}

}  // namespace frontier
