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
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gwrg/ball.hpp"
#include "gwrg/gwrg_sampler.hpp"
#include "gwrg/walk_engine.hpp"

namespace gwrg {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::uint32_t find(std::uint32_t v);
  /// Returns true when the two sets were distinct.
  bool unite(std::uint32_t a, std::uint32_t b);
  std::size_t set_count() const { return sets_; }
  std::uint32_t set_size(std::uint32_t v) { return size_[find(v)]; }

 private:
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::size_t sets_;
};

/// Undirected simple graph as adjacency lists; loops and duplicates are the caller's problem.
using AdjacencyList = std::vector<std::vector<std::uint32_t>>;

struct SampleStats {
  int n = 0;
  std::uint64_t i = 0;
  std::size_t boundary_size = 0;
  std::size_t isolated = 0;
  std::size_t components = 0;
  std::size_t largest_size = 0;
  std::size_t largest_diameter = 0;
};

/// Observables of the simple graph. The largest component is the one with the
/// most vertices, ties going to the one holding the smallest vertex index; its
/// diameter is exact.
SampleStats compute_stats(const AdjacencyList& graph);
SampleStats compute_stats(const GwrgState& state);

AdjacencyList simple_graph(const GwrgState& state);

/// Eccentricities by BFS; unreachable vertices are ignored.
std::uint32_t eccentricity(const AdjacencyList& graph, std::uint32_t source,
                           std::uint32_t* farthest = nullptr);

struct ConnectivityTimes {
  std::optional<std::uint64_t> tau;       ///< first round with a connected simple graph
  std::optional<std::uint64_t> tau_star;  ///< first round without isolated vertices
  bool censored = false;                  ///< round cap hit before both happened
};

/// Adds rounds until R^i_n is connected and free of isolated vertices, or
/// until `round_cap` rounds have run.
ConnectivityTimes connectivity_times(std::shared_ptr<const Ball> ball, ParticleScheme scheme,
                                     const StreamSource& source, std::uint64_t round_cap);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r_squared = 0;
  double adjusted_r_squared = 0;
  double slope_stderr = 0;
  double intercept_stderr = 0;
  std::size_t points = 0;
};

/// Ordinary least squares of y on x. Needs >= 3 points and non-constant x.
LinearFit linear_fit(std::span<const std::pair<double, double>> points);

}  // namespace gwrg
