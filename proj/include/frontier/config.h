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

#ifndef FRONTIER_CONFIG_H_
#define FRONTIER_CONFIG_H_

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"

#include "frontier/detector.h"
#include "frontier/harness.h"
#include "frontier/run_detector.h"

namespace frontier {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Everything needed to reproduce a run. Serialized next to every output.
struct RunConfig {
  double resolution = 0.05;
  int n_scans = 100;
  double epsilon = 0.04;
  bool smoothing = false;
  int baking = 4;
  SkipPolicy skip = SkipPolicy::kNone;

  int optimization_every = 3;
  CorrectionPolicy correction = CorrectionPolicy::kSnapToTruth;
  bool final_optimization = true;
  bool lattice_aligned = true;

  std::uint64_t environment_seed = 1;
  std::uint64_t drift_seed = 1;
  EnvironmentSpec environment;
  TrajectorySpec trajectory;
  LidarConfig lidar;
  DriftModel drift;
  ProbabilityModel probabilities;
  int max_scans = -1;

  // Verification forces epsilon 0, no baking and no smoothing.
  bool verification = false;
  int oracle_every = 1;

  void Validate() const;
  DetectorConfig detector() const;
  SimulationConfig simulation() const;
  // Sets both the environment and the drift seed.
  void SetSeed(std::uint64_t seed);

  nlohmann::json ToJson() const;
  // Keys present in `j` override `base`; unknown keys are an error.
  static RunConfig FromJson(const nlohmann::json& j);
  static RunConfig FromJson(const nlohmann::json& j, const RunConfig& base);
};

RunConfig LoadRunConfig(const std::string& path);

}  // namespace frontier

#endif  // FRONTIER_CONFIG_H_
