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

#include <cmath>
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "gwrg/error.hpp"
#include "gwrg/exact_oracle.hpp"

using namespace gwrg;

namespace {

Network path_network(std::uint32_t vertices) {
  Network net(vertices);
  for (std::uint32_t v = 0; v + 1 < vertices; ++v) net.add_edge(v, v + 1);
  return net;
}

std::vector<std::uint32_t> boundary_of(const Ball& ball) { return {ball.boundary().begin(), ball.boundary().end()}; }

}  // namespace

TEST_CASE("gambler's ruin hitting probabilities") {
  // Vertices 0..4 stand for -2..2.
  const auto net = path_network(5);
  const std::vector<std::uint32_t> ends{0, 4};
  const auto p = hitting_distribution(net, 3, ends);
  CHECK(p[1] == doctest::Approx(0.75).epsilon(1e-12));
  CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-12));
  const auto point = hitting_distribution(net, 4, ends);
  CHECK(point[0] == 0.0);
  CHECK(point[1] == 1.0);
}

TEST_CASE("symmetric boundary orbits receive equal mass") {
  const auto ball = Ball::build(HostSpec::rooted_tree(2), 4);
  const auto net = Network::from_ball(ball);
  const auto p = hitting_distribution(net, 0, boundary_of(ball));
  double total = 0;
  for (double x : p) {
    CHECK(x == doctest::Approx(1.0 / 16).epsilon(1e-12));
    total += x;
  }
  CHECK(std::abs(total - 1.0) < 1e-9);
}

TEST_CASE("disconnected targets are singular") {
  Network net(4);
  net.add_edge(0, 1);
  net.add_edge(2, 3);
  const std::vector<std::uint32_t> target{3};
  CHECK_THROWS_AS(hitting_distribution(net, 0, target), SingularSystemError);
  CHECK_THROWS_AS(effective_conductance(net, 0, 3), SingularSystemError);
}

TEST_CASE("killed Green function on a three-vertex path") {
  // x - m - y with x and y killed: from m the walk is killed after one step,
  // so m is visited exactly once.
  const auto net = path_network(3);
  const std::vector<std::uint32_t> kill{0, 2};
  const KilledGreen g(net, kill);
  CHECK(g(1, 1) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(g.interior(1, 0) == 0.0);
  CHECK(g(0, 0) == 1.0);
  CHECK(g(0, 1) == 0.0);

  // Killing only one end: from m, G(m, m) = 1 / P(no return) = 2.
  const std::vector<std::uint32_t> one_end{2};
  const KilledGreen h(net, one_end);
  CHECK(h(1, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(h(0, 0) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(h(0, 1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(h(1, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("detailed balance of killed Green functions") {
  for (const auto& [host, n] : std::vector<std::pair<HostSpec, int>>{{HostSpec::grid(2), 3},
                                                                      {HostSpec::homogeneous_tree(3), 3},
                                                                      {HostSpec::hyperbolic_tree(), 3},
                                                                      {HostSpec::lamplighter(), 3}}) {
    const auto ball = Ball::build(host, n);
    const auto net = Network::from_ball(ball);
    const KilledGreen g(net, boundary_of(ball));
    const auto m = g.matrix();
    for (std::uint32_t x = 0; x < ball.size(); ++x) {
      if (g.killed(x)) continue;
      for (std::uint32_t y = 0; y < ball.size(); ++y) {
        if (g.killed(y)) continue;
        CHECK(std::abs(net.conductance(x) * m[x][y] - net.conductance(y) * m[y][x]) < 1e-9);
      }
    }
  }
}

TEST_CASE("expected visits equal the degree") {
  for (const auto& [host, n] : std::vector<std::pair<HostSpec, int>>{{HostSpec::grid(1), 3},
                                                                      {HostSpec::grid(2), 3},
                                                                      {HostSpec::rooted_tree(2), 4},
                                                                      {HostSpec::homogeneous_tree(3), 3},
                                                                      {HostSpec::hyperbolic_tree(), 3},
                                                                      {HostSpec::lamplighter(), 4}}) {
    const auto ball = Ball::build(host, n);
    const auto visits = expected_visits_constant_boundary(ball);
    CHECK(visits.size() == ball.size() - ball.boundary().size());
    for (const auto& [x, v] : visits) CHECK(std::abs(v - ball.degree(x)) < 1e-9);
  }
}

TEST_CASE("iterative solver above the dense limit") {
  const auto ball = Ball::build(HostSpec::grid(2), 40);
  REQUIRE(ball.size() - ball.boundary().size() > kDenseSolveLimit);
  const auto visits = expected_visits_constant_boundary(ball);
  double worst = 0;
  for (const auto& [x, v] : visits) worst = std::max(worst, std::abs(v - ball.degree(x)));
  CHECK(worst < 1e-6);
}

TEST_CASE("oracle cap") {
  const auto ball = Ball::build(HostSpec::grid(2), 110);
  REQUIRE(ball.size() > kOracleVertexCap);
  CHECK_THROWS_AS(expected_visits_constant_boundary(ball), ResourceError);
}

TEST_CASE("effective conductance series and parallel laws") {
  CHECK(effective_conductance(path_network(3), 0, 2) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(effective_conductance(path_network(5), 0, 4) == doctest::Approx(0.25).epsilon(1e-12));

  Network doubled(2);
  doubled.add_edge(0, 1);
  doubled.add_edge(0, 1);
  CHECK(doubled.weight(0, 1) == 2.0);
  CHECK(effective_conductance(doubled, 0, 1) == doctest::Approx(2.0).epsilon(1e-12));

  // Two 2-step paths in parallel: 1/2 + 1/2.
  Network cycle(4);
  cycle.add_edge(0, 1);
  cycle.add_edge(1, 2);
  cycle.add_edge(2, 3);
  cycle.add_edge(3, 0);
  CHECK(effective_conductance(cycle, 0, 2) == doctest::Approx(1.0).epsilon(1e-12));
  // Adjacent vertices of the 4-cycle: 1 + 1/3.
  CHECK(effective_conductance(cycle, 0, 1) == doctest::Approx(4.0 / 3).epsilon(1e-12));

  // Weighted series pair 2 and 3: 6/5; a dangling vertex does not matter.
  Network weighted(4);
  weighted.add_edge(0, 1, 2.0);
  weighted.add_edge(1, 2, 3.0);
  weighted.add_edge(1, 3);
  CHECK(effective_conductance(weighted, 0, 2) == doctest::Approx(1.2).epsilon(1e-12));
  CHECK_THROWS_AS(effective_conductance(weighted, 1, 1), UsageError);
  CHECK_THROWS_AS(weighted.add_edge(2, 2), UsageError);
}

TEST_CASE("escape probability on the 3-regular tree approaches 1/2 monotonically") {
  const auto tree = HostSpec::homogeneous_tree(3);
  const std::vector<VertexIndex> root{0};
  double last = 1.0;
  for (int n = 2; n <= 12; ++n) {
    const double p = escape_probability(Ball::build(tree, n), root, 0);
    CHECK(p <= last + 1e-12);
    CHECK(p >= 0.5);
    last = p;
  }
  CHECK(std::abs(last - 0.5) < 1e-3);
}

TEST_CASE("escape probability edge cases") {
  const auto ball = Ball::build(HostSpec::grid(2), 3);
  std::vector<VertexIndex> interior;
  for (VertexIndex v = 0; v < ball.size(); ++v) {
    if (!ball.on_boundary(v)) interior.push_back(v);
  }
  for (VertexIndex x : interior) {
    double exits = 0;
    for (VertexIndex w : ball.neighbors(x)) exits += ball.on_boundary(w);
    CHECK(escape_probability(ball, interior, x) == doctest::Approx(exits / ball.degree(x)).epsilon(1e-12));
  }
  // The root surrounded by K cannot escape.
  std::vector<VertexIndex> shell{0};
  for (VertexIndex w : ball.neighbors(0)) shell.push_back(w);
  for (VertexIndex v = 0; v < ball.size(); ++v) {
    if (ball.distance(v) == 2) shell.push_back(v);
  }
  CHECK(escape_probability(ball, shell, 0) == doctest::Approx(0.0).epsilon(1e-12));
  const std::vector<VertexIndex> touching{ball.boundary().front()};
  CHECK_THROWS_AS(escape_probability(ball, touching, touching.front()), UsageError);
  const std::vector<VertexIndex> k{0};
  CHECK_THROWS_AS(escape_probability(ball, k, ball.neighbors(0)[0]), UsageError);
}

TEST_CASE("contracted network adds the star with host multiplicities") {
  const auto ball = Ball::build(HostSpec::grid(2), 2);
  const auto net = Network::contracted(ball);
  REQUIRE(net.size() == ball.size() + 1);
  const auto star = static_cast<std::uint32_t>(ball.size());
  double expected = 0;
  for (VertexIndex b : ball.boundary()) {
    const double links = ball.host_degree(b) - ball.degree(b);
    CHECK(net.weight(b, star) == links);
    CHECK(net.conductance(b) == ball.host_degree(b));
    expected += links;
  }
  CHECK(net.conductance(star) == expected);
}

TEST_CASE("laplacian dump rows sum to zero") {
  const auto net = Network::from_ball(Ball::build(HostSpec::grid(1), 2));
  std::ostringstream os;
  net.dump_laplacian(os);
  std::istringstream in(os.str());
  std::vector<double> row_sum(net.size(), 0.0);
  std::uint32_t i = 0, j = 0;
  double value = 0;
  while (in >> i >> j >> value) row_sum[i] += value;
  for (double s : row_sum) CHECK(s == 0.0);
}
