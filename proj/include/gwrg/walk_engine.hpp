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

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "gwrg/ball.hpp"
#include "gwrg/rng.hpp"

namespace gwrg {

/// One stopped walk from a boundary vertex to its first return to the boundary.
struct WalkTrace {
  VertexIndex start = 0;
  VertexIndex end = 0;
  std::uint64_t steps = 0;
  /// start, ..., end when recording was requested; empty otherwise.
  std::vector<VertexIndex> path;
};

enum class ParticleScheme {
  kDegreeCount,    ///< d(v) particles at each boundary vertex v
  kPoissonDegree,  ///< Poisson(d(v)) particles, redrawn every round
};

ParticleScheme parse_scheme(std::string_view name);
std::string_view scheme_name(ParticleScheme scheme);

/// Simple random walk inside the ball from `start` (a boundary vertex),
/// stopped at the first time t >= 1 it stands on the boundary.
WalkTrace run_walk(const Ball& ball, VertexIndex start, RandomStream& rng, bool record);

/// Lane used for the particle-count draw of (round, vertex) under the Poisson scheme.
inline constexpr std::uint64_t kCountLane = ~std::uint64_t{0};

/// Launches every particle of one round. Particle p at boundary vertex v in
/// round r draws from source.stream(r, v, p). Traces come back ordered by
/// (boundary index, particle index).
std::vector<WalkTrace> run_round(const Ball& ball, ParticleScheme scheme, const StreamSource& source,
                                 std::uint64_t round, bool record);

/// Occupancy counts per ball vertex: every time step of every trace counts,
/// including the start at time 0 and the final boundary vertex.
/// Throws UsageError if a trace has no recorded path.
std::vector<std::uint64_t> visit_counts(std::span<const WalkTrace> traces, const Ball& ball);

/// Trace dump line: "start end steps [path...]".
std::string format_trace(const WalkTrace& trace);

}  // namespace gwrg
