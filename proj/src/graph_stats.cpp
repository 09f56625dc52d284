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

#include "gwrg/graph_stats.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>

#include "gwrg/error.hpp"

namespace gwrg {

UnionFind::UnionFind(std::size_t n) : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0u);
}

std::uint32_t UnionFind::find(std::uint32_t v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

bool UnionFind::unite(std::uint32_t a, std::uint32_t b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

std::uint32_t eccentricity(const AdjacencyList& graph, std::uint32_t source, std::uint32_t* farthest) {
  constexpr auto kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(graph.size(), kUnseen);
  std::vector<std::uint32_t> queue{source};
  dist[source] = 0;
  std::uint32_t far = source;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t u = queue[head];
    if (dist[u] > dist[far]) far = u;
    for (std::uint32_t w : graph[u]) {
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (farthest) *farthest = far;
  return dist[far];
}

SampleStats compute_stats(const AdjacencyList& graph) {
  const auto k = static_cast<std::uint32_t>(graph.size());
  SampleStats s;
  s.boundary_size = k;
  UnionFind uf(k);
  for (std::uint32_t u = 0; u < k; ++u) {
    if (graph[u].empty()) ++s.isolated;
    for (std::uint32_t w : graph[u]) uf.unite(u, w);
  }
  s.components = uf.set_count();
  if (k == 0) return s;

  // Scanning in index order makes the first maximal root the tie winner.
  std::uint32_t best_root = uf.find(0);
  for (std::uint32_t u = 1; u < k; ++u) {
    if (uf.set_size(u) > uf.set_size(best_root)) best_root = uf.find(u);
  }
  s.largest_size = uf.set_size(best_root);

  std::vector<std::uint32_t> members;
  for (std::uint32_t u = 0; u < k; ++u) {
    if (uf.find(u) == best_root) members.push_back(u);
  }
  // Double sweep gives a lower bound that the exhaustive pass must reach.
  std::uint32_t far = 0;
  eccentricity(graph, members.front(), &far);
  const std::uint32_t lower = eccentricity(graph, far);
  std::uint32_t diameter = lower;
  for (std::uint32_t u : members) {
    diameter = std::max(diameter, eccentricity(graph, u));
  }
  assert(diameter >= lower);
  s.largest_diameter = diameter;
  return s;
}

AdjacencyList simple_graph(const GwrgState& state) {
  AdjacencyList g(state.vertex_count());
  for (std::uint32_t u = 0; u < g.size(); ++u) {
    g[u] = state.simple_neighbors(u);
  }
  return g;
}

SampleStats compute_stats(const GwrgState& state) {
  SampleStats s = compute_stats(simple_graph(state));
  s.n = state.ball().radius();
  s.i = state.rounds_done();
  return s;
}

ConnectivityTimes connectivity_times(std::shared_ptr<const Ball> ball, ParticleScheme scheme,
                                     const StreamSource& source, std::uint64_t round_cap) {
  if (round_cap < 1) {
    throw UsageError("round cap must be >= 1");
  }
  const std::size_t k = ball->boundary().size();
  UnionFind uf(k);
  std::vector<std::uint32_t> simple_degree(k, 0);
  std::size_t isolated = k;
  ConnectivityTimes result;
  GwrgState state(std::move(ball));
  for (std::uint64_t i = 1; i <= round_cap; ++i) {
    const std::size_t before = state.simple_edge_count();
    state.advance_round(scheme, source);
    if (state.simple_edge_count() != before) {
      // Only new simple edges can change degrees or components.
      for (std::uint32_t u = 0; u < k; ++u) {
        const auto& nbrs = state.simple_neighbors(u);
        for (std::size_t j = simple_degree[u]; j < nbrs.size(); ++j) uf.unite(u, nbrs[j]);
        if (simple_degree[u] == 0 && !nbrs.empty()) --isolated;
        simple_degree[u] = static_cast<std::uint32_t>(nbrs.size());
      }
    }
    if (!result.tau_star && isolated == 0) result.tau_star = i;
    if (!result.tau && uf.set_count() == 1) result.tau = i;
    if (result.tau && result.tau_star) return result;
  }
  result.censored = true;
  return result;
}

LinearFit linear_fit(std::span<const std::pair<double, double>> points) {
  const std::size_t m = points.size();
  if (m < 3) {
    throw UsageError("linear fit needs at least 3 points");
  }
  double mx = 0, my = 0;
  for (const auto& [x, y] : points) {
    mx += x;
    my += y;
  }
  mx /= static_cast<double>(m);
  my /= static_cast<double>(m);
  double sxx = 0, sxy = 0, syy = 0;
  for (const auto& [x, y] : points) {
    sxx += (x - mx) * (x - mx);
    sxy += (x - mx) * (y - my);
    syy += (y - my) * (y - my);
  }
  if (sxx <= 0.0 || sxx <= 1e-300 * static_cast<double>(m)) {
    throw UsageError("linear fit needs at least two distinct x values");
  }
  LinearFit fit;
  fit.points = m;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double sse = 0;
  for (const auto& [x, y] : points) {
    const double r = y - (fit.intercept + fit.slope * x);
    sse += r * r;
  }
  const auto dm = static_cast<double>(m);
  fit.r_squared = syy > 0 ? 1.0 - sse / syy : 1.0;
  fit.adjusted_r_squared = 1.0 - (1.0 - fit.r_squared) * (dm - 1.0) / (dm - 2.0);
  const double sigma2 = sse / (dm - 2.0);
  fit.slope_stderr = std::sqrt(sigma2 / sxx);
  double sum_x2 = 0;
  for (const auto& p : points) sum_x2 += p.first * p.first;
  fit.intercept_stderr = std::sqrt(sigma2 * sum_x2 / (dm * sxx));
  return fit;
}

}  // namespace gwrg
