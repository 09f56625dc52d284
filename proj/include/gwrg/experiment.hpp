/*
 * Copyright 2026 The gwrg-lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Experiment configuration, dispatch and result emission shared by the CLI
// and the tests.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gwrg/ball.hpp"
#include "gwrg/graph_stats.hpp"
#include "gwrg/walk_engine.hpp"

namespace gwrg {

inline constexpr std::uint64_t kDefaultTrials = 10000;
inline constexpr std::uint64_t kFastTrials = 1000;
inline constexpr std::uint64_t kDefaultRoundCap = 1000;

struct ExperimentConfig {
  std::string experiment;
  std::string host = "btree2";
  std::string n = "1";                   ///< "5" or "2..8"
  std::optional<std::uint64_t> rounds;   ///< rounds i, or the round cap for connectivity
  std::string scheme = "degree";
  std::optional<std::uint64_t> trials;
  bool fast = false;
  std::uint64_t seed = 1;
  std::string out;                       ///< empty writes to stdout without a manifest
  std::string format = "csv";
  unsigned threads = 1;
  std::size_t vertex_cap = kDefaultVertexCap;

  // Experiment-specific inputs. Vertex lists are whitespace separated.
  std::string rule;                      ///< crossings: named boundary-set rule
  std::string edge_view = "multiset";    ///< crossings: multiset | simple
  std::string o;                         ///< naim reference vertex (default root)
  std::string x;                         ///< green/naim first argument
  std::string y;                         ///< green/naim second argument
  std::string k;                         ///< equilibrium set K (default root)
  std::string z;                         ///< interlacement cylinder walk (default root)
  int depth = 0;                         ///< graphon-sample cell depth (default min(n, 2))
  std::string lambda = "mc";             ///< graphon-sample intensities: mc | exact
  std::uint64_t max_steps = 0;           ///< naim: nonzero switches to the trajectory series
  std::string naim_form = "symmetric";   ///< symmetric | printed
  std::string normalization = "conductance";  ///< conductance | visits

  std::uint64_t effective_trials() const { return trials ? *trials : (fast ? kFastTrials : kDefaultTrials); }
};

/// Parses "5" or "2..8"; both ends must be >= 1.
std::pair<int, int> parse_n_range(std::string_view text);

/// Throws UsageError for missing or out-of-range fields.
void validate_config(const ExperimentConfig& config);

/// Flat key=value lines of the resolved configuration.
std::vector<std::pair<std::string, std::string>> resolved_config(const ExperimentConfig& config);

using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string, bool>;

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

struct ExperimentResult {
  ResultTable table;
  std::vector<std::pair<std::string, std::string>> summary;  ///< fit report or suite tally
  bool suite_failed = false;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

/// CSV with a header line, or a JSON array of objects keyed by column.
void write_table(std::ostream& os, const ResultTable& table, std::string_view format);
std::string render_table(const ResultTable& table, std::string_view format);

/// Runs the experiment and writes the result file, `<out>.manifest` and, when
/// present, `<out>.summary`. Returns 0, or 3 when the oracle suite fails.
int execute(const ExperimentConfig& config, std::ostream& log);

// ---------------------------------------------------------------------------
// Campaign helpers

/// Statistics of `trials` independent samples of R^rounds_n, in trial order.
std::vector<SampleStats> sample_stats(const HostSpec& host, int n, std::uint64_t rounds, ParticleScheme scheme,
                                      std::uint64_t trials, std::uint64_t seed, unsigned threads,
                                      std::size_t vertex_cap = kDefaultVertexCap);

std::vector<ConnectivityTimes> sample_connectivity(const HostSpec& host, int n, std::uint64_t round_cap,
                                                   ParticleScheme scheme, std::uint64_t trials,
                                                   std::uint64_t seed, unsigned threads,
                                                   std::size_t vertex_cap = kDefaultVertexCap);

struct FitReport {
  LinearFit fit;
  double reference_slope = 0.26;
  double reference_slope_error = 0.003;
  double reference_intercept = 0.90;
  double reference_intercept_error = 0.02;
  double reference_adjusted_r_squared = 0.9993;
};

/// Least-squares line through (n, mean tau); needs three distinct n values.
FitReport fit_report(std::span<const std::pair<double, double>> n_mean_tau);
std::vector<std::pair<std::string, std::string>> fit_summary(const FitReport& report);

}  // namespace gwrg
