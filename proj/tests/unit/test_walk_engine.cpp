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

#include "doctest.h"
#include "gwrg/error.hpp"
#include "gwrg/exact_oracle.hpp"
#include "gwrg/walk_engine.hpp"

using namespace gwrg;

namespace {

bool within_3se(double mean, double se, double target) { return std::abs(mean - target) <= 3 * se; }

}  // namespace

TEST_CASE("gambler's ruin from the end of a path") {
  const auto ball = Ball::build(HostSpec::grid(1), 2);
  const VertexIndex plus2 = ball.index_of(LatticePoint{{2}});
  const VertexIndex minus2 = ball.index_of(LatticePoint{{-2}});
  const StreamSource source(derive_seed(11, "walk", 2, 0));
  const int trials = 10000;
  int home = 0;
  for (int t = 0; t < trials; ++t) {
    auto rng = source.stream(t);
    const auto trace = run_walk(ball, plus2, rng, true);
    CHECK(trace.start == plus2);
    CHECK((trace.end == plus2 || trace.end == minus2));
    home += trace.end == plus2;
  }
  const double p = static_cast<double>(home) / trials;
  CHECK(within_3se(p, std::sqrt(0.75 * 0.25 / trials), 0.75));

  const auto net = Network::from_ball(ball);
  const std::vector<std::uint32_t> targets{plus2, minus2};
  const auto exact = first_passage_distribution(net, plus2, targets);
  CHECK(exact[0] == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("end distribution on the smallest binary tree matches the oracle") {
  const auto ball = Ball::build(HostSpec::rooted_tree(2), 1);
  const auto net = Network::from_ball(ball);
  const std::vector<std::uint32_t> leaves(ball.boundary().begin(), ball.boundary().end());
  const auto exact = first_passage_distribution(net, leaves[0], leaves);
  const StreamSource source(derive_seed(12, "walk", 1, 0));
  const int trials = 10000;
  int same = 0;
  for (int t = 0; t < trials; ++t) {
    auto rng = source.stream(t);
    same += run_walk(ball, leaves[0], rng, false).end == leaves[0];
  }
  const double p = static_cast<double>(same) / trials;
  CHECK(within_3se(p, std::sqrt(exact[0] * (1 - exact[0]) / trials), exact[0]));
}

TEST_CASE("trace invariants") {
  for (const auto& host : {HostSpec::rooted_tree(2), HostSpec::grid(2), HostSpec::hyperbolic_tree(),
                           HostSpec::lamplighter()}) {
    const auto ball = Ball::build(host, 3);
    const StreamSource source(derive_seed(13, host.name(), 3, 0));
    for (VertexIndex b : ball.boundary()) {
      auto rng = source.stream(b);
      const auto t = run_walk(ball, b, rng, true);
      REQUIRE(t.path.size() == t.steps + 1);
      CHECK(t.steps >= 1);
      CHECK(t.path.front() == t.start);
      CHECK(t.path.back() == t.end);
      CHECK(ball.on_boundary(t.end));
      for (std::size_t k = 1; k + 1 < t.path.size(); ++k) CHECK_FALSE(ball.on_boundary(t.path[k]));
      for (std::size_t k = 0; k + 1 < t.path.size(); ++k) {
        const auto nbrs = ball.neighbors(t.path[k]);
        CHECK(std::find(nbrs.begin(), nbrs.end(), t.path[k + 1]) != nbrs.end());
      }
      if (host.is_tree()) CHECK(t.steps >= 2);
    }
  }
}

TEST_CASE("walks are deterministic in their stream") {
  const auto ball = Ball::build(HostSpec::grid(2), 4);
  const StreamSource source(derive_seed(14, "walk", 4, 0));
  auto a = source.stream(1, 2, 3);
  auto b = source.stream(1, 2, 3);
  const auto ta = run_walk(ball, ball.boundary()[3], a, true);
  const auto tb = run_walk(ball, ball.boundary()[3], b, true);
  CHECK(format_trace(ta) == format_trace(tb));
  auto c = source.stream(1, 2, 3);
  const auto tc = run_walk(ball, ball.boundary()[3], c, false);
  CHECK(tc.end == ta.end);
  CHECK(tc.steps == ta.steps);
  CHECK(tc.path.empty());
}

TEST_CASE("walks must start on the boundary") {
  const auto ball = Ball::build(HostSpec::grid(2), 2);
  auto rng = StreamSource(derive_seed(1, "walk", 2, 0)).stream(0);
  CHECK_THROWS_AS(run_walk(ball, 0, rng, false), UsageError);
}

TEST_CASE("round sizes") {
  const StreamSource source(derive_seed(15, "round", 0, 0));
  CHECK(run_round(Ball::build(HostSpec::grid(1), 2), ParticleScheme::kDegreeCount, source, 0, false).size() == 2);
  CHECK(run_round(Ball::build(HostSpec::homogeneous_tree(3), 2), ParticleScheme::kDegreeCount, source, 0, false)
            .size() == 6);

  const auto z2 = Ball::build(HostSpec::grid(2), 3);
  double degree_sum = 0;
  for (VertexIndex b : z2.boundary()) degree_sum += z2.degree(b);
  const auto fixed = run_round(z2, ParticleScheme::kDegreeCount, source, 0, false);
  CHECK(static_cast<double>(fixed.size()) == degree_sum);

  const int rounds = 10000;
  double sum = 0, sq = 0;
  for (int r = 0; r < rounds; ++r) {
    const auto x = static_cast<double>(run_round(z2, ParticleScheme::kPoissonDegree, source, r, false).size());
    sum += x;
    sq += x * x;
  }
  const double mean = sum / rounds;
  const double se = std::sqrt((sq / rounds - mean * mean) / rounds);
  CHECK(within_3se(mean, se, degree_sum));
}

TEST_CASE("round traces are ordered by boundary vertex") {
  const auto ball = Ball::build(HostSpec::grid(2), 3);
  const auto traces = run_round(ball, ParticleScheme::kDegreeCount, StreamSource(derive_seed(3, "r", 3, 0)), 0, false);
  for (std::size_t k = 1; k < traces.size(); ++k) CHECK(traces[k - 1].start <= traces[k].start);
}

TEST_CASE("visit counts reproduce the degree at interior vertices") {
  const auto ball = Ball::build(HostSpec::grid(2), 2);
  CHECK(visit_counts({}, ball) == std::vector<std::uint64_t>(ball.size(), 0));

  const StreamSource source(derive_seed(16, "visits", 2, 0));
  const int rounds = 10000;
  double sum = 0, sq = 0;
  for (int r = 0; r < rounds; ++r) {
    const auto traces = run_round(ball, ParticleScheme::kDegreeCount, source, r, true);
    const auto x = static_cast<double>(visit_counts(traces, ball)[0]);
    sum += x;
    sq += x * x;
  }
  const double mean = sum / rounds;
  CHECK(within_3se(mean, std::sqrt((sq / rounds - mean * mean) / rounds), ball.degree(0)));

  for (const auto& [x, visits] : expected_visits_constant_boundary(ball)) {
    CHECK(std::abs(visits - ball.degree(x)) < 1e-9);
  }
  const auto no_path = run_round(ball, ParticleScheme::kDegreeCount, source, 0, false);
  CHECK_THROWS_AS(visit_counts(no_path, ball), UsageError);
}

TEST_CASE("scheme names") {
  CHECK(parse_scheme("degree") == ParticleScheme::kDegreeCount);
  CHECK(parse_scheme("poisson") == ParticleScheme::kPoissonDegree);
  CHECK(scheme_name(ParticleScheme::kPoissonDegree) == "poisson");
  CHECK_THROWS_AS(parse_scheme("uniform"), UsageError);
}
