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

// Command-line driver: simulate, verify, bench, render, replay.

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "frontier/bench_report.h"
#include "frontier/config.h"
#include "frontier/detector.h"
#include "frontier/event_log.h"
#include "frontier/harness.h"
#include "frontier/oracle.h"
#include "frontier/render.h"
#include "frontier/run_detector.h"
#include "frontier/verification.h"

namespace {

using frontier::RunConfig;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

// Raised for bad input files and unwritable outputs.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out;
  std::optional<double> epsilon;
  std::optional<int> n_scans;
  std::optional<double> resolution;
  std::optional<bool> skip;
  std::string skip_policy;
  std::optional<int> baking;
  std::optional<bool> smoothing;
  std::optional<int> oracle_every;
  std::optional<int> max_scans;
};

void AddCommonFlags(CLI::App& app, CommonFlags& f) {
  app.add_option("--config", f.config_path, "JSON run configuration")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", f.seed, "Environment and drift seed");
  app.add_option("--out", f.out, "Output path");
  app.add_option("--epsilon", f.epsilon, "Free-space margin epsilon");
  app.add_option("--n-scans", f.n_scans, "Scans per submap");
  app.add_option("--resolution", f.resolution, "Grid resolution in meters");
  app.add_flag("--skip,!--no-skip", f.skip, "Skip superseded submap updates");
  app.add_option("--skip-policy", f.skip_policy,
                 "none, adaptive or final-only");
  app.add_option("--baking", f.baking, "Baking window in submaps");
  app.add_flag("--smoothing", f.smoothing, "Smoothed local frontier");
  app.add_option("--oracle-every", f.oracle_every,
                 "Oracle cadence in events");
  app.add_option("--max-scans", f.max_scans, "Stop after this many scans");
}

void ApplyFlags(const CommonFlags& f, RunConfig& c) {
  if (f.seed) c.SetSeed(*f.seed);
  if (f.epsilon) c.epsilon = *f.epsilon;
  if (f.n_scans) c.n_scans = *f.n_scans;
  if (f.resolution) c.resolution = *f.resolution;
  if (f.skip) {
    c.skip = *f.skip ? frontier::SkipPolicy::kAdaptive
                     : frontier::SkipPolicy::kNone;
  }
  if (!f.skip_policy.empty()) {
    try {
      c.skip = frontier::SkipPolicyFromString(f.skip_policy);
    } catch (const std::exception& e) {
      throw frontier::ConfigError(e.what());
    }
  }
  if (f.baking) c.baking = *f.baking;
  if (f.smoothing) c.smoothing = *f.smoothing;
  if (f.oracle_every) c.oracle_every = *f.oracle_every;
  if (f.max_scans) c.max_scans = *f.max_scans;
  c.Validate();
}

RunConfig ResolveConfig(const CommonFlags& f) {
  RunConfig c = f.config_path.empty() ? RunConfig()
                                      : frontier::LoadRunConfig(f.config_path);
  ApplyFlags(f, c);
  return c;
}

// Config embedded in a log, with flag overrides.
RunConfig ResolveConfig(const CommonFlags& f, const frontier::EventLog& log) {
  RunConfig c = log.config.empty() ? RunConfig()
                                   : RunConfig::FromJson(log.config);
  c.resolution = log.resolution;
  c.n_scans = log.n_scans;
  if (!f.config_path.empty()) c = frontier::LoadRunConfig(f.config_path);
  ApplyFlags(f, c);
  return c;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void WriteJson(const std::filesystem::path& path, const json& j) {
  std::ofstream out = OpenOutput(path);
  out << j.dump(2) << "\n";
  if (!out) throw IoError("cannot write " + path.string());
}

void WriteStream(std::ostream& out, const frontier::ProcessedEvent& event) {
  for (const frontier::FrontierUpdate& u : event.updates) {
    out << frontier::ToJson(event.event_index, u).dump() << "\n";
  }
}

int Simulate(const CommonFlags& flags) {
  const RunConfig config = ResolveConfig(flags);
  const std::filesystem::path dir = flags.out.empty() ? "out" : flags.out;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());

  frontier::Simulator simulator(config.simulation());
  frontier::EventQueue queue;
  std::vector<frontier::Event> events;
  std::exception_ptr producer_error;
  std::thread producer([&] {
    try {
      const auto push = [&](std::vector<frontier::Event> batch) {
        for (frontier::Event& e : batch) {
          events.push_back(e);
          queue.Push(std::move(e));
        }
      };
      while (!simulator.Done()) push(simulator.Step());
      push(simulator.Finish());
    } catch (...) {
      producer_error = std::current_exception();
    }
    queue.Close();
  });

  frontier::FrontierDetector detector(config.detector());
  std::ofstream stream = OpenOutput(dir / "frontier.jsonl");
  frontier::RunStats stats;
  std::exception_ptr consumer_error;
  try {
    stats = frontier::RunDetectorLoop(
        detector, queue, config.skip,
        [&](const frontier::ProcessedEvent& e, const frontier::FrontierDetector&) {
          WriteStream(stream, e);
        });
  } catch (...) {
    consumer_error = std::current_exception();
    // Drain so the producer never blocks.
    while (!queue.PopAll().empty()) {
    }
  }
  producer.join();
  if (producer_error) std::rethrow_exception(producer_error);
  if (consumer_error) std::rethrow_exception(consumer_error);
  if (!stream) throw IoError("cannot write frontier stream");

  frontier::EventLog log{config.resolution, config.n_scans, config.ToJson(),
                         events};
  frontier::WriteEventLog((dir / "events.log").string(), log);

  json metrics = {
      {"config", config.ToJson()},
      {"metrics", frontier::RunMetrics::From(stats).ToJson()},
      {"events", events.size()},
      {"submaps", detector.submap_ids().size()},
      {"final_frontier_points", detector.GlobalFrontierSize()},
      {"max_pose_error_m", simulator.MaxPoseError()},
  };
  int exit_code = kExitOk;
  if (config.verification) {
    frontier::VerificationOptions options;
    options.detector = config.detector();
    options.oracle_every = config.oracle_every;
    const frontier::VerificationResult result =
        frontier::VerifyEvents(events, options);
    metrics["verification"] = result.ToJson();
    std::cout << result.Summary() << "\n";
    if (!result.ok()) exit_code = kExitVerificationFailed;
  }
  WriteJson(dir / "metrics.json", metrics);
  std::cout << "events=" << events.size()
            << " submaps=" << detector.submap_ids().size()
            << " frontier_points=" << detector.GlobalFrontierSize()
            << " out=" << dir.string() << "\n";
  return exit_code;
}

int Verify(const CommonFlags& flags, const std::string& log_path,
           const std::string& frontier_path, bool quiet) {
  const frontier::EventLog log = frontier::ReadEventLog(log_path);
  RunConfig config = ResolveConfig(flags, log);
  // The oracle comparison is exact only without the false-positive filters.
  frontier::DetectorConfig detector;
  if (flags.epsilon) detector.epsilon = *flags.epsilon;
  if (flags.baking) detector.baking_submaps = *flags.baking;
  if (flags.smoothing) detector.smoothing = *flags.smoothing;

  std::vector<frontier::RecordedUpdate> recorded;
  frontier::VerificationOptions options;
  options.detector = detector;
  options.oracle_every = flags.oracle_every ? *flags.oracle_every : 1;
  if (!frontier_path.empty()) {
    recorded = frontier::ReadFrontierStream(frontier_path);
    options.recorded = &recorded;
    const frontier::DetectorConfig logged = config.detector();
    if (logged.epsilon != 0. || logged.baking_submaps != 0 || logged.smoothing) {
      std::cerr << "warning: the stream was recorded with epsilon, baking or "
                   "smoothing enabled; the oracle expects none\n";
    }
  }
  const frontier::VerificationResult result = frontier::VerifyEvents(
      log.events, options, [&](const frontier::EventCheck& check) {
        if (!quiet || !check.report.ok()) {
          std::cout << "event " << check.event_index << ": "
                    << check.report.Summary() << "\n";
        }
      });
  std::cout << result.Summary() << "\n";
  if (!flags.out.empty()) {
    WriteJson(flags.out, {{"config", config.ToJson()},
                          {"verification", result.ToJson()}});
  }
  return result.ok() ? kExitOk : kExitVerificationFailed;
}

int Replay(const CommonFlags& flags, const std::string& log_path) {
  const frontier::EventLog log = frontier::ReadEventLog(log_path);
  const RunConfig config = ResolveConfig(flags, log);
  frontier::FrontierDetector detector(config.detector());
  std::optional<std::ofstream> stream;
  if (!flags.out.empty()) stream = OpenOutput(flags.out);
  const frontier::RunStats stats = frontier::RunDetector(
      detector, log.events, config.skip,
      [&](const frontier::ProcessedEvent& e, const frontier::FrontierDetector&) {
        if (stream) WriteStream(*stream, e);
      });
  if (stream && !*stream) throw IoError("cannot write " + flags.out);
  const json summary = {
      {"config", config.ToJson()},
      {"metrics", frontier::RunMetrics::From(stats).ToJson()},
      {"final_frontier_points", detector.GlobalFrontierSize()}};
  std::cout << summary.dump(2) << "\n";
  return kExitOk;
}

int Render(const CommonFlags& flags, const std::string& log_path,
           const std::string& svg_path, int scale, long last_event) {
  const frontier::EventLog log = frontier::ReadEventLog(log_path);
  const RunConfig config = ResolveConfig(flags, log);
  frontier::FrontierDetector detector(config.detector());
  frontier::OracleInputs inputs;
  const std::size_t end =
      last_event < 0 ? log.events.size()
                     : std::min(log.events.size(),
                                static_cast<std::size_t>(last_event) + 1);
  for (std::size_t i = 0; i < end; ++i) {
    detector.HandleEvent(log.events[i]);
    inputs.Apply(log.events[i]);
  }
  const frontier::GlobalGrid grid = frontier::AssembleGlobalMap(
      inputs.Placed(), log.resolution);
  const std::vector<frontier::Point2> points =
      detector.AllGlobalFrontierPoints();
  const std::string out = flags.out.empty() ? "map.ppm" : flags.out;
  OpenOutput(out).close();
  frontier::WritePpm(out, frontier::RenderMap(grid, points, scale));
  if (!svg_path.empty()) {
    OpenOutput(svg_path).close();
    frontier::WriteSvg(svg_path, grid, points, scale);
  }
  std::cout << "wrote " << out << " (" << grid.width * scale << "x"
            << grid.height * scale << ")\n";
  return kExitOk;
}

std::vector<frontier::Point2> FinalFrontier(const RunConfig& config,
                                            std::span<const frontier::Event> events,
                                            frontier::SkipPolicy policy,
                                            frontier::RunStats* stats) {
  frontier::FrontierDetector detector(config.detector());
  *stats = frontier::RunDetector(detector, events, policy);
  return detector.AllGlobalFrontierPoints();
}

int Bench(const CommonFlags& flags, const std::vector<int>& scales,
          int repetitions, int submaps) {
  RunConfig config = ResolveConfig(flags);
  frontier::Simulator simulator(config.simulation());
  const std::vector<frontier::Event> events = simulator.RunAll();

  frontier::RunStats plain;
  frontier::RunStats skipping;
  const frontier::SkipPolicy policy = config.skip == frontier::SkipPolicy::kNone
                                          ? frontier::SkipPolicy::kAdaptive
                                          : config.skip;
  const auto a = FinalFrontier(config, events, frontier::SkipPolicy::kNone, &plain);
  const auto b = FinalFrontier(config, events, policy, &skipping);

  frontier::ScalingOptions scaling;
  if (!scales.empty()) scaling.room_sides = scales;
  scaling.repetitions = repetitions;
  scaling.submaps = submaps;
  scaling.resolution = config.resolution;
  const std::vector<frontier::ScalingPoint> points =
      frontier::MeasureScaling(scaling);

  const json report = {
      {"config", config.ToJson()},
      {"run",
       {{"no_skip", frontier::RunMetrics::From(plain).ToJson()},
        {"skip",
         frontier::RunMetrics::From(skipping).ToJson()},
        {"skip_policy", frontier::ToString(policy)},
        {"final_frontier_equal", a == b},
        {"final_frontier_points", a.size()}}},
      {"scaling", frontier::ScalingToJson(scaling, points)},
  };
  if (flags.out.empty()) {
    std::cout << report.dump(2) << "\n";
  } else {
    WriteJson(flags.out, report);
    std::cout << "wrote " << flags.out << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense frontier detection for submap-based 2D graph SLAM"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string log_path;
  std::string frontier_path;
  std::string svg_path;
  bool quiet = false;
  int scale = 4;
  long last_event = -1;
  std::vector<int> scales;
  int repetitions = 9;
  int bench_submaps = 6;

  CLI::App* simulate =
      app.add_subcommand("simulate", "Run the simulator and the detector");
  AddCommonFlags(*simulate, flags);

  CLI::App* verify =
      app.add_subcommand("verify", "Replay a log against the oracle");
  AddCommonFlags(*verify, flags);
  verify->add_option("log", log_path, "Event log")->required();
  verify->add_option("--frontier", frontier_path,
                     "Check a recorded frontier stream instead of a replay");
  verify->add_flag("--quiet", quiet, "Print failing events only");

  CLI::App* bench = app.add_subcommand("bench", "Timing report");
  AddCommonFlags(*bench, flags);
  bench->add_option("--scales", scales, "Room sides in cells")->delimiter(',');
  bench->add_option("--repetitions", repetitions)->check(CLI::PositiveNumber);
  bench->add_option("--submaps", bench_submaps)->check(CLI::PositiveNumber);

  CLI::App* render = app.add_subcommand("render", "Render a log to PPM");
  AddCommonFlags(*render, flags);
  render->add_option("log", log_path, "Event log")->required();
  render->add_option("--svg", svg_path, "Also write an SVG");
  render->add_option("--scale", scale, "Pixels per cell")
      ->check(CLI::PositiveNumber);
  render->add_option("--event", last_event, "Stop after this event index");

  CLI::App* replay =
      app.add_subcommand("replay", "Run the detector over a log");
  AddCommonFlags(*replay, flags);
  replay->add_option("log", log_path, "Event log")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (simulate->parsed()) return Simulate(flags);
    if (verify->parsed()) return Verify(flags, log_path, frontier_path, quiet);
    if (bench->parsed()) {
      return Bench(flags, scales, repetitions, bench_submaps);
    }
    if (render->parsed()) {
      return Render(flags, log_path, svg_path, scale, last_event);
    }
    if (replay->parsed()) return Replay(flags, log_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
