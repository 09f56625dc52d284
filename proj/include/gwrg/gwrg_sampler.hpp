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
#include <iosfwd>
#include <memory>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gwrg/ball.hpp"
#include "gwrg/rng.hpp"
#include "gwrg/walk_engine.hpp"

namespace gwrg {

enum class EdgeView { kMultiset, kSimple };

/// R^i_n: the cumulative walk-edge multiset on the boundary of a ball after i
/// rounds. Vertices are boundary positions 0..k-1 (see Ball::boundary_position).
class GwrgState {
 public:
  /// Unordered pair (u <= v) of boundary positions; u == v is a self-loop.
  using Edge = std::pair<std::uint32_t, std::uint32_t>;

  explicit GwrgState(std::shared_ptr<const Ball> ball);

  const Ball& ball() const { return *ball_; }
  std::shared_ptr<const Ball> ball_ptr() const { return ball_; }
  std::uint64_t rounds_done() const { return rounds_; }
  std::size_t vertex_count() const { return ball_->boundary().size(); }

  /// Runs round number rounds_done() through the walk engine and merges its traces.
  std::vector<WalkTrace> advance_round(ParticleScheme scheme, const StreamSource& source,
                                       bool record = false);

  /// Merges one round's traces (rounds_done increments by one).
  void add_round(std::span<const WalkTrace> traces);

  std::uint64_t multiplicity(std::uint32_t u, std::uint32_t v) const;
  std::uint64_t total_multiplicity() const { return total_; }
  /// Multiset edges sorted by (u, v).
  std::vector<std::pair<Edge, std::uint64_t>> sorted_edges() const;

  /// Simple-graph neighbors (no loops, no repeats) of a boundary position.
  const std::vector<std::uint32_t>& simple_neighbors(std::uint32_t u) const { return simple_adj_[u]; }
  std::size_t simple_edge_count() const { return simple_edges_; }

  /// "u v multiplicity" lines after a '#' header carrying host, n, i and seed.
  void dump_edges(std::ostream& os, const std::string& seed) const;

 private:
  static std::uint64_t key(std::uint32_t u, std::uint32_t v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | v;
  }

  std::shared_ptr<const Ball> ball_;
  std::uint64_t rounds_ = 0;
  std::uint64_t total_ = 0;
  std::unordered_map<std::uint64_t, std::uint64_t> multiset_;
  std::vector<std::vector<std::uint32_t>> simple_adj_;
  std::size_t simple_edges_ = 0;
};

/// Edges with one endpoint in X and the other in Y (ball indices of boundary
/// vertices). An edge inside X and Y counts once, as does a self-loop there.
std::uint64_t crossing_count(const GwrgState& state, std::span<const VertexIndex> x,
                             std::span<const VertexIndex> y, EdgeView view = EdgeView::kMultiset);

/// Same count over a list of traces, one edge per trace.
std::uint64_t crossing_count(std::span<const WalkTrace> traces, const Ball& ball,
                             std::span<const VertexIndex> x, std::span<const VertexIndex> y);

}  // namespace gwrg
