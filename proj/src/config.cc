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

#include "frontier/config.h"

#include <cmath>
#include <exception>
#include <fstream>
#include <numbers>
#include <set>
#include <vector>

namespace frontier {

namespace {

using nlohmann::json;

void Require(bool condition, const std::string& message) {
  if (!condition) throw ConfigError("invalid config: " + message);
}

// Reads the keys of `j` into fields, rejecting anything not listed.
class Reader {
 public:
  Reader(const json& j, std::string scope) : j_(j), scope_(std::move(scope)) {
    if (!j_.is_object()) {
      throw ConfigError("config section '" + scope_ + "' must be an object");
    }
  }
  ~Reader() noexcept(false) {
    if (std::uncaught_exceptions() > 0) return;
    for (const auto& [key, value] : j_.items()) {
      if (!seen_.contains(key)) {
        throw ConfigError("unknown config key '" + Qualified(key) + "'");
      }
    }
  }

  template <typename T>
  void operator()(const char* key, T& field) {
    seen_.insert(key);
    if (!j_.contains(key)) return;
    try {
      field = j_.at(key).get<T>();
    } catch (const json::exception& e) {
      throw ConfigError("bad value for '" + Qualified(key) + "': " + e.what());
    }
  }

  const json* Section(const char* key) {
    seen_.insert(key);
    return j_.contains(key) ? &j_.at(key) : nullptr;
  }

  std::string Qualified(const std::string& key) const {
    return scope_.empty() ? key : scope_ + "." + key;
  }

 private:
  const json& j_;
  std::string scope_;
  std::set<std::string> seen_;
};

}  // namespace

void RunConfig::Validate() const {
  Require(resolution > 0. && resolution <= 1., "resolution must be in (0, 1]");
  Require(n_scans >= 2, "n_scans must be >= 2");
  Require(epsilon >= 0. && epsilon < 0.4, "epsilon must be in [0, 0.4)");
  Require(baking >= 0, "baking must be >= 0");
  Require(optimization_every >= 0, "optimization_every must be >= 0");
  Require(oracle_every >= 1, "oracle_every must be >= 1");
  Require(environment.width > 0. && environment.height > 0.,
          "environment size must be positive");
  Require(environment.resolution > 0., "environment.resolution must be > 0");
  Require(environment.corridor_width > 0., "corridor_width must be > 0");
  Require(environment.wall_thickness > 0., "wall_thickness must be > 0");
  Require(environment.obstacles >= 0, "obstacles must be >= 0");
  Require(trajectory.laps >= 1, "trajectory.laps must be >= 1");
  Require(trajectory.max_step > 0. && trajectory.max_turn > 0.,
          "trajectory step limits must be positive");
  Require(lidar.beams >= 1, "lidar.beams must be >= 1");
  Require(lidar.max_range > 0., "lidar.max_range must be > 0");
  Require(lidar.angle_span > 0. && lidar.angle_span <= 2. * std::numbers::pi + 1e-12,
          "lidar.angle_span must be in (0, 2 pi]");
  Require(drift.translation_noise >= 0. && drift.rotation_noise >= 0.,
          "drift noise must be >= 0");
  Require(probabilities.hit_probability > 0.5 && probabilities.hit_probability <= kMaxProbability,
          "probabilities.hit_probability must be in (0.5, 0.9]");
  Require(probabilities.miss_probability < 0.5 && probabilities.miss_probability >= kMinProbability,
          "probabilities.miss_probability must be in [0.1, 0.5)");
}

DetectorConfig RunConfig::detector() const {
  if (verification) return DetectorConfig{};
  return DetectorConfig{epsilon, smoothing, baking};
}

SimulationConfig RunConfig::simulation() const {
  SimulationConfig s;
  s.environment = environment;
  s.environment_seed = environment_seed;
  s.trajectory = trajectory;
  s.lidar = lidar;
  s.drift = drift;
  s.drift.seed = drift_seed;
  s.builder.resolution = resolution;
  s.builder.n_scans = n_scans;
  s.builder.probabilities = probabilities;
  s.optimization_every = optimization_every;
  s.correction = correction;
  s.final_optimization = final_optimization;
  s.lattice_aligned = lattice_aligned;
  s.max_scans = max_scans;
  return s;
}

void RunConfig::SetSeed(std::uint64_t seed) {
  environment_seed = seed;
  drift_seed = seed;
}

nlohmann::json RunConfig::ToJson() const {
  return {
      {"resolution", resolution},
      {"n_scans", n_scans},
      {"epsilon", epsilon},
      {"smoothing", smoothing},
      {"baking", baking},
      {"skip", ToString(skip)},
      {"optimization_every", optimization_every},
      {"correction", ToString(correction)},
      {"final_optimization", final_optimization},
      {"lattice_aligned", lattice_aligned},
      {"environment_seed", environment_seed},
      {"drift_seed", drift_seed},
      {"environment",
       {{"kind", ToString(environment.kind)},
        {"width", environment.width},
        {"height", environment.height},
        {"corridor_width", environment.corridor_width},
        {"wall_thickness", environment.wall_thickness},
        {"obstacles", environment.obstacles},
        {"resolution", environment.resolution}}},
      {"trajectory",
       {{"laps", trajectory.laps},
        {"max_step", trajectory.max_step},
        {"max_turn", trajectory.max_turn}}},
      {"lidar",
       {{"beams", lidar.beams},
        {"max_range", lidar.max_range},
        {"angle_span", lidar.angle_span}}},
      {"drift",
       {{"translation_bias",
         {drift.translation_bias.x, drift.translation_bias.y}},
        {"rotation_bias", drift.rotation_bias},
        {"translation_noise", drift.translation_noise},
        {"rotation_noise", drift.rotation_noise},
        {"consistent_within_submap", drift.consistent_within_submap}}},
      {"probabilities",
       {{"hit", probabilities.hit_probability}, {"miss", probabilities.miss_probability}}},
      {"max_scans", max_scans},
      {"verification", verification},
      {"oracle_every", oracle_every},
  };
}

RunConfig RunConfig::FromJson(const nlohmann::json& j) {
  return FromJson(j, RunConfig());
}

RunConfig RunConfig::FromJson(const nlohmann::json& j, const RunConfig& base) {
  RunConfig c = base;
  Reader r(j, "");
  r("resolution", c.resolution);
  r("n_scans", c.n_scans);
  r("epsilon", c.epsilon);
  r("smoothing", c.smoothing);
  r("baking", c.baking);
  try {
    std::string name;
    r("skip", name);
    if (!name.empty()) c.skip = SkipPolicyFromString(name);
    name.clear();
    r("correction", name);
    if (!name.empty()) c.correction = CorrectionPolicyFromString(name);
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  r("optimization_every", c.optimization_every);
  r("final_optimization", c.final_optimization);
  r("lattice_aligned", c.lattice_aligned);
  r("environment_seed", c.environment_seed);
  r("drift_seed", c.drift_seed);
  r("max_scans", c.max_scans);
  r("verification", c.verification);
  r("oracle_every", c.oracle_every);
  if (const json* e = r.Section("environment")) {
    Reader s(*e, "environment");
    std::string kind;
    s("kind", kind);
    if (!kind.empty()) {
      try {
        c.environment.kind = EnvironmentKindFromString(kind);
      } catch (const std::exception& ex) {
        throw ConfigError(std::string("invalid config: ") + ex.what());
      }
    }
    s("width", c.environment.width);
    s("height", c.environment.height);
    s("corridor_width", c.environment.corridor_width);
    s("wall_thickness", c.environment.wall_thickness);
    s("obstacles", c.environment.obstacles);
    s("resolution", c.environment.resolution);
  }
  if (const json* t = r.Section("trajectory")) {
    Reader s(*t, "trajectory");
    s("laps", c.trajectory.laps);
    s("max_step", c.trajectory.max_step);
    s("max_turn", c.trajectory.max_turn);
  }
  if (const json* l = r.Section("lidar")) {
    Reader s(*l, "lidar");
    s("beams", c.lidar.beams);
    s("max_range", c.lidar.max_range);
    s("angle_span", c.lidar.angle_span);
  }
  if (const json* d = r.Section("drift")) {
    Reader s(*d, "drift");
    std::vector<double> bias{c.drift.translation_bias.x,
                             c.drift.translation_bias.y};
    s("translation_bias", bias);
    if (bias.size() != 2) {
      throw ConfigError("drift.translation_bias must have two entries");
    }
    c.drift.translation_bias = {bias[0], bias[1]};
    s("rotation_bias", c.drift.rotation_bias);
    s("translation_noise", c.drift.translation_noise);
    s("rotation_noise", c.drift.rotation_noise);
    s("consistent_within_submap", c.drift.consistent_within_submap);
  }
  if (const json* p = r.Section("probabilities")) {
    Reader s(*p, "probabilities");
    s("hit", c.probabilities.hit_probability);
    s("miss", c.probabilities.miss_probability);
  }
  return c;
}

RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("cannot parse config file " + path + ": " + e.what());
  }
  RunConfig c = RunConfig::FromJson(j);
  c.Validate();
  return c;
}

}  // namespace frontier
