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
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gwrg/host_graph.hpp"

namespace gwrg {

using VertexIndex = std::uint32_t;

inline constexpr std::size_t kDefaultVertexCap = 5'000'000;

/// The ball G_n around the host root as an indexed finite graph. Indices are
/// assigned in BFS order, so index 0 is the root and the boundary (distance
/// exactly n) occupies a contiguous block at the end.
class Ball {
 public:
  static Ball build(const HostSpec& host, int radius, std::size_t vertex_cap = kDefaultVertexCap);

  const HostSpec& host() const { return host_; }
  int radius() const { return radius_; }
  std::size_t size() const { return vertices_.size(); }

  const Vertex& vertex(VertexIndex v) const { return vertices_.at(v); }
  std::span<const VertexIndex> neighbors(VertexIndex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::uint32_t degree(VertexIndex v) const { return offsets_[v + 1] - offsets_[v]; }
  /// Degree in the infinite host; exceeds degree(v) only on the boundary.
  std::uint32_t host_degree(VertexIndex v) const { return host_degree_[v]; }
  std::uint32_t distance(VertexIndex v) const { return distance_[v]; }

  bool on_boundary(VertexIndex v) const { return distance_[v] == static_cast<std::uint32_t>(radius_); }
  std::span<const VertexIndex> boundary() const { return boundary_; }
  /// Position of a boundary vertex within boundary(); throws for interior vertices.
  std::uint32_t boundary_position(VertexIndex v) const;

  std::optional<VertexIndex> find(const Vertex& v) const;
  /// Throws UsageError when the vertex lies outside the ball.
  VertexIndex index_of(const Vertex& v) const;

  /// One line per vertex: "<index> <vertex> : <neighbor indices...>".
  void dump(std::ostream& os) const;

 private:
  Ball(HostSpec host, int radius) : host_(std::move(host)), radius_(radius) {}

  HostSpec host_;
  int radius_;
  std::vector<Vertex> vertices_;
  std::vector<std::uint32_t> offsets_;
  std::vector<VertexIndex> adjacency_;
  std::vector<std::uint32_t> host_degree_;
  std::vector<std::uint32_t> distance_;
  std::vector<VertexIndex> boundary_;
  std::unordered_map<Vertex, VertexIndex, VertexHash> index_;
};

/// An edge of a tree host, given by its two endpoints in either order.
struct TreeEdge {
  Vertex a;
  Vertex b;
};

/// Boundary vertices on the far side of `edge` (the component of G minus the
/// edge that avoids the root) and the rest, both in ball index order.
std::pair<std::vector<VertexIndex>, std::vector<VertexIndex>> boundary_partition_by_branch(
    const Ball& ball, const TreeEdge& edge);

/// The endpoint of a tree edge farther from the root. Validates the edge.
TreeWord lower_endpoint(const HostSpec& host, const TreeEdge& edge);

/// True when `v` lies in the subtree hanging below `top`.
bool in_subtree(const TreeWord& top, const TreeWord& v);

}  // namespace gwrg
