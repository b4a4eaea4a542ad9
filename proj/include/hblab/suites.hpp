// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hblab/pairs.hpp"

namespace hblab::suites {

/// Unset fields fall back to per-suite defaults.
struct Options {
  std::optional<double> tol;
  std::optional<int> N;
  std::optional<int> K;
  std::optional<int> J;
  std::optional<int> m;
  std::optional<int> order;
  std::optional<UnimodularPoint> lambda;
  std::optional<CanonicalPair> pair;
  std::optional<std::vector<Complex>> u_zeros;
  std::uint64_t seed = 1;
  int instances = 100;
  int max_degree = 20;
  int max_m = 3;
};

struct Instance {
  std::string suite;
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  nlohmann::json residuals = nlohmann::json::object();
  nlohmann::json thresholds = nlohmann::json::object();
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Instance> instances;
  bool overall_pass = false;
  double wall_time = 0.0;  // seconds
  /// Suite-specific verdict fields copied to the top level of the JSON.
  nlohmann::json summary = nlohmann::json::object();

  nlohmann::json to_json() const;
};

/// lemma1, isometry, theorem1, prop4, fejer-riesz, wandering, dm-norm, all
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown suite name.
Report run(const std::string& suite, const Options& options);

}  // namespace hblab::suites
