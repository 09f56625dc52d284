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

#include "gwrg/ball.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "gwrg/error.hpp"

namespace gwrg {

Ball Ball::build(const HostSpec& host, int radius, std::size_t vertex_cap) {
  if (radius < 1) {
    throw UsageError("ball radius must be >= 1");
  }
  Ball ball(host, radius);
  const auto n = static_cast<std::uint32_t>(radius);

  ball.vertices_.push_back(host.root());
  ball.distance_.push_back(0);
  ball.index_.emplace(host.root(), 0);

  std::vector<Vertex> nbrs;
  for (std::size_t head = 0; head < ball.vertices_.size(); ++head) {
    const std::uint32_t d = ball.distance_[head];
    if (d == n) {
      break;
    }
    nbrs.clear();
    append_neighbors(host, ball.vertices_[head], nbrs);
    for (Vertex& w : nbrs) {
      if (ball.index_.contains(w)) {
        continue;
      }
      if (ball.vertices_.size() >= vertex_cap) {
        throw ResourceError("ball of radius " + std::to_string(radius) + " on " + host.name() +
                            " exceeds the vertex cap of " + std::to_string(vertex_cap));
      }
      ball.index_.emplace(w, static_cast<VertexIndex>(ball.vertices_.size()));
      ball.vertices_.push_back(std::move(w));
      ball.distance_.push_back(d + 1);
    }
  }

  // Every vertex within distance n is known now, so an unknown neighbor of a
  // boundary vertex is outside the ball.
  ball.offsets_.reserve(ball.vertices_.size() + 1);
  ball.offsets_.push_back(0);
  ball.host_degree_.reserve(ball.vertices_.size());
  for (std::size_t v = 0; v < ball.vertices_.size(); ++v) {
    nbrs.clear();
    append_neighbors(host, ball.vertices_[v], nbrs);
    ball.host_degree_.push_back(static_cast<std::uint32_t>(nbrs.size()));
    for (const Vertex& w : nbrs) {
      if (auto it = ball.index_.find(w); it != ball.index_.end()) {
        ball.adjacency_.push_back(it->second);
      }
    }
    ball.offsets_.push_back(static_cast<std::uint32_t>(ball.adjacency_.size()));
    if (ball.distance_[v] == n) {
      ball.boundary_.push_back(static_cast<VertexIndex>(v));
    }
  }
  return ball;
}

std::uint32_t Ball::boundary_position(VertexIndex v) const {
  if (v >= size() || !on_boundary(v)) {
    throw UsageError("vertex " + std::to_string(v) + " is not on the boundary");
  }
  // BFS order puts the boundary in one trailing block.
  return v - boundary_.front();
}

std::optional<VertexIndex> Ball::find(const Vertex& v) const {
  if (auto it = index_.find(v); it != index_.end()) {
    return it->second;
  }
  return std::nullopt;
}

VertexIndex Ball::index_of(const Vertex& v) const {
  if (auto idx = find(v)) {
    return *idx;
  }
  throw UsageError("vertex " + serialize(v) + " is outside the ball of radius " +
                   std::to_string(radius_));
}

void Ball::dump(std::ostream& os) const {
  for (VertexIndex v = 0; v < size(); ++v) {
    os << v << ' ' << serialize(vertices_[v]) << " :";
    for (VertexIndex w : neighbors(v)) {
      os << ' ' << w;
    }
    os << '\n';
  }
}

bool in_subtree(const TreeWord& top, const TreeWord& v) {
  return v.letters.size() >= top.letters.size() &&
         std::equal(top.letters.begin(), top.letters.end(), v.letters.begin());
}

TreeWord lower_endpoint(const HostSpec& host, const TreeEdge& edge) {
  if (!host.is_tree()) {
    throw UsageError("branches are only defined on tree hosts, not " + host.name());
  }
  validate(host, edge.a);
  validate(host, edge.b);
  const auto& a = std::get<TreeWord>(edge.a);
  const auto& b = std::get<TreeWord>(edge.b);
  const TreeWord& upper = a.letters.size() < b.letters.size() ? a : b;
  const TreeWord& lower = a.letters.size() < b.letters.size() ? b : a;
  if (lower.letters.size() != upper.letters.size() + 1 || !in_subtree(upper, lower)) {
    throw UsageError("not a tree edge: " + serialize(edge.a) + " -- " + serialize(edge.b));
  }
  return lower;
}

std::pair<std::vector<VertexIndex>, std::vector<VertexIndex>> boundary_partition_by_branch(
    const Ball& ball, const TreeEdge& edge) {
  const TreeWord lower = lower_endpoint(ball.host(), edge);
  if (lower.letters.size() > static_cast<std::size_t>(ball.radius())) {
    throw UsageError("edge lies outside the ball");
  }
  std::pair<std::vector<VertexIndex>, std::vector<VertexIndex>> split;
  for (VertexIndex v : ball.boundary()) {
    const auto& word = std::get<TreeWord>(ball.vertex(v));
    (in_subtree(lower, word) ? split.first : split.second).push_back(v);
  }
  return split;
}

}  // namespace gwrg
