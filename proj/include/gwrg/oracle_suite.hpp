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

// Agreement checks between every Monte Carlo estimator and the exact solver
// on small balls.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gwrg/estimators.hpp"

namespace gwrg {

struct OracleCheck {
  std::string quantity;
  std::string fixture;  ///< host and radius, e.g. "z2:n=3"
  double estimate = 0;
  double stderr_ = 0;
  double exact = 0;
  bool replicated = false;  ///< first estimate missed and a replicate was drawn
  double replicate_estimate = 0;
  double replicate_stderr = 0;
  bool pass = false;
};

/// Seed offset for the single confirmatory replicate of a missed check.
inline constexpr std::uint64_t kReplicateSeedMask = 0x9e3779b97f4a7c15ull;

struct OracleFixture {
  HostSpec host;
  int n;
};

/// Host/radius pairs used by the suite; every ball has at most 200 vertices.
std::vector<OracleFixture> oracle_fixtures();

/// Passes when |estimate - exact| <= 3 standard errors (or the two agree to
/// 1e-12 when the standard error vanishes).
bool within_three_sigma(double estimate, double stderr_, double exact);

/// Mean indicator that a walk from x first meets the boundary inside `target`.
EstimateRecord hitting_probability_mc(const Ball& ball, VertexIndex x, std::span<const VertexIndex> target,
                                      const McOptions& options);

/// Mean visits to x during one degree-count round (time 0 and the end included).
EstimateRecord round_visits_mc(const Ball& ball, VertexIndex x, const McOptions& options);

/// Each check passes at three standard errors. With dozens of checks some
/// would miss by chance, so a miss is re-estimated once on an independent
/// stream and the check passes only if that replicate is within tolerance.
std::vector<OracleCheck> run_oracle_suite(const McOptions& options);

}  // namespace gwrg
