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

// Monte Carlo estimators for boundary quantities of GWRGs, each paired with an
// exact counterpart computed by the oracle on the same finite ball.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwrg/ball.hpp"
#include "gwrg/exact_oracle.hpp"
#include "gwrg/gwrg_sampler.hpp"
#include "gwrg/host_graph.hpp"
#include "gwrg/rng.hpp"
#include "gwrg/walk_engine.hpp"

namespace gwrg {

struct McOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
};

/// One Monte Carlo (or exact, with trials == 0) output.
struct EstimateRecord {
  std::string quantity;
  std::string host;
  int n = 0;
  std::string params;
  double estimate = 0;
  double stderr_ = 0;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

inline constexpr std::string_view kEstimateCsvHeader = "quantity,host,n,params,estimate,stderr,trials,seed";
void write_csv_row(std::ostream& os, const EstimateRecord& r);

/// Sum and sum of squares, accumulated in trial order.
class RunningMoments {
 public:
  void add(double x) {
    sum_ += x;
    sum_sq_ += x * x;
    ++count_;
  }
  std::uint64_t count() const { return count_; }
  double mean() const { return count_ ? sum_ / static_cast<double>(count_) : 0.0; }
  /// Sample standard deviation over sqrt(count); zero below two samples.
  double standard_error() const;

 private:
  double sum_ = 0;
  double sum_sq_ = 0;
  std::uint64_t count_ = 0;
};

// ---------------------------------------------------------------------------
// Boundary sets and crossings

struct BoundarySets {
  std::vector<VertexIndex> x;
  std::vector<VertexIndex> y;
};

/// Maps a ball to concrete boundary sets X_n, Y_n.
using BoundarySetRule = std::function<BoundarySets(const Ball&)>;

/// X and Y are the far sides of two tree edges. Rejects non-tree hosts.
BoundarySetRule branch_rule(const HostSpec& host, TreeEdge x_edge, TreeEdge y_edge);
/// Named rules: "root-branches" and "nested" (trees only), "halves" (any host),
/// "empty" (X empty, Y the whole boundary).
BoundarySetRule named_rule(const HostSpec& host, std::string_view name);

/// Exact expected multiset crossings between X and Y in one round of R_n.
double exact_crossing_expectation(const Ball& ball, std::span<const VertexIndex> x,
                                  std::span<const VertexIndex> y);

struct CrossingPoint {
  int n = 0;
  EstimateRecord mc;
  std::optional<double> exact;  ///< present when the ball fits the oracle
};

struct CrossingCurve {
  std::vector<CrossingPoint> points;
};

/// Mean multiset crossing count of R^rounds_n between the rule's sets for each
/// n in [n_min, n_max]; every n uses a freshly built ball. The exact value is
/// reported for the multiset view only.
CrossingCurve crossing_curve(const HostSpec& host, const BoundarySetRule& rule, int n_min, int n_max,
                             std::uint64_t rounds, ParticleScheme scheme, const McOptions& options,
                             bool with_exact = true, EdgeView view = EdgeView::kMultiset);

// ---------------------------------------------------------------------------
// Green function, Martin and Naim kernels

struct GreenEstimate {
  EstimateRecord record;
  bool degenerate = false;  ///< x or y on the absorbing boundary
};

/// Mean visits to y (time 0 included) by walks from x killed on reaching the boundary.
GreenEstimate green_function(const Ball& ball, VertexIndex x, VertexIndex y, const McOptions& options);
/// Same quantity from the oracle.
double green_function_exact(const Ball& ball, VertexIndex x, VertexIndex y);

enum class NaimForm {
  kSymmetric,  ///< G(x,y) / (G(x,o) G(o,y))
  kPrinted,    ///< G(x,y) / (G(x,o) G(o,x))
};

enum class GreenNormalization {
  kConductance,  ///< Green kernel G(u,v)/c_v, symmetric on reversible networks
  kVisits,       ///< raw expected visit counts
};

struct NaimValue {
  double theta = 0;
  double martin = 0;  ///< K(x,y) = G(x,y) / G(o,y)
};

/// Exact kernels from the Green function killed on `kill`.
NaimValue naim_kernel_exact(const KilledGreen& green, std::uint32_t o, std::uint32_t x, std::uint32_t y,
                            NaimForm form = NaimForm::kSymmetric,
                            GreenNormalization norm = GreenNormalization::kConductance);

/// Boundary-pair kernel on a finite network: the reference vertex sits at x
/// and the walk is killed at the remaining boundary vertices.
double boundary_naim_kernel(const Network& net, std::span<const std::uint32_t> boundary,
                            std::uint32_t x, std::uint32_t y);

/// Ratio of three independent killed-walk Green estimates on the ball; the
/// standard error follows from the delta method.
EstimateRecord naim_kernel_mc(const Ball& ball, VertexIndex o, VertexIndex x, VertexIndex y,
                              const McOptions& options, NaimForm form = NaimForm::kSymmetric,
                              GreenNormalization norm = GreenNormalization::kConductance);

struct NaimSeries {
  std::vector<double> theta;  ///< Theta(x_t, y_t) at t = 0, 1, ...
  bool truncated = false;     ///< a walk reached the boundary before max_steps
  double oscillation = 0;     ///< max |theta_t - theta_last| over the last quarter
};

/// Two independent walks from the root inside the radius-n_max ball, with the
/// kernel evaluated exactly along the matched trajectories.
std::vector<NaimSeries> naim_convergence_experiment(const HostSpec& host, int n_max,
                                                    std::uint64_t max_steps, const McOptions& options,
                                                    NaimForm form = NaimForm::kSymmetric,
                                                    GreenNormalization norm = GreenNormalization::kConductance);

double stabilization_diagnostic(std::span<const double> series);

// ---------------------------------------------------------------------------
// Equilibrium measure, interlacements, reversibility

/// e_K(x) = d(x) * P_x[reach the boundary before returning to K], exact.
std::vector<std::pair<VertexIndex, double>> equilibrium_measure_exact(const Ball& ball,
                                                                      std::span<const VertexIndex> k);
/// Monte Carlo version: one record per x in K.
std::vector<EstimateRecord> equilibrium_measure(const Ball& ball, std::span<const VertexIndex> k,
                                                const McOptions& options);

/// True when `z` or its reversal occurs as consecutive entries of `path`.
bool contains_subwalk(std::span<const VertexIndex> path, std::span<const VertexIndex> z);

/// Throws UsageError unless consecutive entries are host-adjacent.
void validate_cylinder(const HostSpec& host, std::span<const Vertex> z);

/// Mean number of traces of one degree-count round of R_n containing Z (either
/// orientation). Z leaving the ball gives an exact zero.
EstimateRecord interlacement_intensity(const Ball& ball, std::span<const Vertex> z,
                                       const McOptions& options);

struct ReversibilityResult {
  double lhs = 0;  ///< c_x P_x[X_tau = *]
  double rhs = 0;  ///< c_* P_*[X_tau = x]
  double residual = 0;
};

/// Both sides on the contracted graph G*_n with stopping set K plus the star.
ReversibilityResult reversibility_check(const Ball& ball, std::span<const VertexIndex> k, VertexIndex x);

// ---------------------------------------------------------------------------
// Graphon-style sampling from crossing intensities

using CrossingMatrix = std::vector<std::vector<double>>;

/// Cells of boundary vertices grouped by their ancestor at `depth` (trees).
std::vector<std::vector<VertexIndex>> subtree_cells(const Ball& ball, int depth);

/// lambda_ab = expected crossings between cells a != b in one round; zero diagonal.
CrossingMatrix crossing_matrix_exact(const Ball& ball, const std::vector<std::vector<VertexIndex>>& cells);
/// Monte Carlo mean over `options.trials` rounds.
CrossingMatrix crossing_matrix_mc(const Ball& ball, const std::vector<std::vector<VertexIndex>>& cells,
                                  const McOptions& options);

/// Joins cells a < b independently with probability 1 - exp(-lambda_ab).
std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_from_crossing_matrix(
    const CrossingMatrix& lambda, RandomStream& rng);

}  // namespace gwrg
