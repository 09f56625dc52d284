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

#include "gwrg/walk_engine.hpp"

#include <cassert>
#include <sstream>
#include <string>

#include "gwrg/error.hpp"

namespace gwrg {

ParticleScheme parse_scheme(std::string_view name) {
  if (name == "degree") return ParticleScheme::kDegreeCount;
  if (name == "poisson") return ParticleScheme::kPoissonDegree;
  throw UsageError("unknown particle scheme '" + std::string(name) + "'");
}

std::string_view scheme_name(ParticleScheme scheme) {
  return scheme == ParticleScheme::kDegreeCount ? "degree" : "poisson";
}

WalkTrace run_walk(const Ball& ball, VertexIndex start, RandomStream& rng, bool record) {
  if (start >= ball.size() || !ball.on_boundary(start)) {
    throw UsageError("walks start on the boundary");
  }
  assert(ball.degree(start) > 0);
  WalkTrace trace;
  trace.start = start;
  if (record) {
    trace.path.push_back(start);
  }
  VertexIndex at = start;
  do {
    const auto nbrs = ball.neighbors(at);
    at = nbrs[rng.uniform_index(nbrs.size())];
    ++trace.steps;
    if (record) {
      trace.path.push_back(at);
    }
  } while (!ball.on_boundary(at));
  trace.end = at;
  return trace;
}

std::vector<WalkTrace> run_round(const Ball& ball, ParticleScheme scheme, const StreamSource& source,
                                 std::uint64_t round, bool record) {
  std::vector<WalkTrace> traces;
  for (VertexIndex v : ball.boundary()) {
    std::uint64_t count = ball.degree(v);
    if (scheme == ParticleScheme::kPoissonDegree) {
      auto rng = source.stream(round, v, kCountLane);
      count = sample_poisson(rng, static_cast<double>(ball.degree(v)));
    }
    for (std::uint64_t p = 0; p < count; ++p) {
      auto rng = source.stream(round, v, p);
      traces.push_back(run_walk(ball, v, rng, record));
    }
  }
  return traces;
}

std::vector<std::uint64_t> visit_counts(std::span<const WalkTrace> traces, const Ball& ball) {
  std::vector<std::uint64_t> counts(ball.size(), 0);
  for (const WalkTrace& t : traces) {
    if (t.path.empty()) {
      throw UsageError("visit counts need traces recorded with their paths");
    }
    for (VertexIndex v : t.path) {
      ++counts.at(v);
    }
  }
  return counts;
}

std::string format_trace(const WalkTrace& trace) {
  std::ostringstream os;
  os << trace.start << ' ' << trace.end << ' ' << trace.steps;
  for (VertexIndex v : trace.path) {
    os << ' ' << v;
  }
  return os.str();
}

}  // namespace gwrg
