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

#include "gwrg/gwrg_sampler.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "gwrg/error.hpp"

namespace gwrg {

namespace {

// Membership flags per boundary position: bit 0 for X, bit 1 for Y.
std::vector<std::uint8_t> membership(const Ball& ball, std::span<const VertexIndex> x,
                                     std::span<const VertexIndex> y) {
  std::vector<std::uint8_t> flags(ball.boundary().size(), 0);
  for (VertexIndex v : x) flags[ball.boundary_position(v)] |= 1;
  for (VertexIndex v : y) flags[ball.boundary_position(v)] |= 2;
  return flags;
}

bool crosses(std::uint8_t a, std::uint8_t b) { return ((a & 1) && (b & 2)) || ((a & 2) && (b & 1)); }

}  // namespace

GwrgState::GwrgState(std::shared_ptr<const Ball> ball)
    : ball_(std::move(ball)), simple_adj_(ball_->boundary().size()) {}

std::vector<WalkTrace> GwrgState::advance_round(ParticleScheme scheme, const StreamSource& source,
                                                bool record) {
  auto traces = run_round(*ball_, scheme, source, rounds_, record);
  add_round(traces);
  return traces;
}

void GwrgState::add_round(std::span<const WalkTrace> traces) {
  for (const WalkTrace& t : traces) {
    const std::uint32_t u = ball_->boundary_position(t.start);
    const std::uint32_t v = ball_->boundary_position(t.end);
    if (multiset_[key(u, v)]++ == 0 && u != v) {
      simple_adj_[u].push_back(v);
      simple_adj_[v].push_back(u);
      ++simple_edges_;
    }
    ++total_;
  }
  ++rounds_;
}

std::uint64_t GwrgState::multiplicity(std::uint32_t u, std::uint32_t v) const {
  auto it = multiset_.find(key(u, v));
  return it == multiset_.end() ? 0 : it->second;
}

std::vector<std::pair<GwrgState::Edge, std::uint64_t>> GwrgState::sorted_edges() const {
  std::vector<std::pair<Edge, std::uint64_t>> out;
  out.reserve(multiset_.size());
  for (const auto& [k, m] : multiset_) {
    out.push_back({{static_cast<std::uint32_t>(k >> 32), static_cast<std::uint32_t>(k)}, m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

void GwrgState::dump_edges(std::ostream& os, const std::string& seed) const {
  os << "# host=" << ball_->host().name() << " n=" << ball_->radius() << " i=" << rounds_
     << " seed=" << seed << '\n';
  for (const auto& [e, m] : sorted_edges()) {
    os << e.first << ' ' << e.second << ' ' << m << '\n';
  }
}

std::uint64_t crossing_count(const GwrgState& state, std::span<const VertexIndex> x,
                             std::span<const VertexIndex> y, EdgeView view) {
  const auto flags = membership(state.ball(), x, y);
  std::uint64_t total = 0;
  for (const auto& [e, m] : state.sorted_edges()) {
    if (view == EdgeView::kSimple && e.first == e.second) {
      continue;
    }
    if (crosses(flags[e.first], flags[e.second])) {
      total += view == EdgeView::kMultiset ? m : 1;
    }
  }
  return total;
}

std::uint64_t crossing_count(std::span<const WalkTrace> traces, const Ball& ball,
                             std::span<const VertexIndex> x, std::span<const VertexIndex> y) {
  const auto flags = membership(ball, x, y);
  std::uint64_t total = 0;
  for (const WalkTrace& t : traces) {
    total += crosses(flags[ball.boundary_position(t.start)], flags[ball.boundary_position(t.end)]);
  }
  return total;
}

}  // namespace gwrg
