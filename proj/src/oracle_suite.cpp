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

#include "gwrg/oracle_suite.hpp"

#include <algorithm>
#include <cmath>

#include "gwrg/error.hpp"
#include "gwrg/parallel.hpp"

namespace gwrg {

std::vector<OracleFixture> oracle_fixtures() {
  return {
      {HostSpec::grid(1), 3},          {HostSpec::grid(2), 3},
      {HostSpec::grid(3), 2},          {HostSpec::rooted_tree(2), 4},
      {HostSpec::homogeneous_tree(3), 3}, {HostSpec::hyperbolic_tree(), 3},
      {HostSpec::lamplighter(), 3},
  };
}

bool within_three_sigma(double estimate, double stderr_, double exact) {
  const double gap = std::abs(estimate - exact);
  if (stderr_ == 0.0) return gap <= 1e-12;
  return gap <= 3.0 * stderr_;
}

EstimateRecord hitting_probability_mc(const Ball& ball, VertexIndex x, std::span<const VertexIndex> target,
                                      const McOptions& options) {
  if (options.trials < 2) throw UsageError("Monte Carlo estimates need at least 2 trials");
  std::vector<bool> in_target(ball.size(), false);
  for (VertexIndex v : target) {
    ball.boundary_position(v);
    in_target[v] = true;
  }
  const auto hits = run_trials(options.trials, options.threads, [&](std::uint64_t t) {
    auto rng = StreamSource(derive_seed(options.seed, "hitting", static_cast<std::uint64_t>(ball.radius()), t))
                   .stream(x);
    VertexIndex at = x;
    while (!ball.on_boundary(at)) {
      const auto nbrs = ball.neighbors(at);
      at = nbrs[rng.uniform_index(nbrs.size())];
    }
    return in_target[at] ? 1 : 0;
  });
  RunningMoments m;
  for (int h : hits) m.add(h);
  return {"hitting", ball.host().name(), ball.radius(), "x=" + serialize(ball.vertex(x)),
          m.mean(),  m.standard_error(),  m.count(),    options.seed};
}

EstimateRecord round_visits_mc(const Ball& ball, VertexIndex x, const McOptions& options) {
  if (options.trials < 2) throw UsageError("Monte Carlo estimates need at least 2 trials");
  const auto visits = run_trials(options.trials, options.threads, [&](std::uint64_t t) {
    const StreamSource source(derive_seed(options.seed, "visits", static_cast<std::uint64_t>(ball.radius()), t));
    const auto traces = run_round(ball, ParticleScheme::kDegreeCount, source, 0, true);
    return visit_counts(traces, ball)[x];
  });
  RunningMoments m;
  for (auto v : visits) m.add(static_cast<double>(v));
  return {"visits", ball.host().name(), ball.radius(), "x=" + serialize(ball.vertex(x)),
          m.mean(), m.standard_error(),   m.count(),    options.seed};
}

std::vector<OracleCheck> run_oracle_suite(const McOptions& options) {
  std::vector<OracleCheck> checks;
  for (const auto& [host, n] : oracle_fixtures()) {
    const Ball ball = Ball::build(host, n);
    const std::string fixture = host.name() + ":n=" + std::to_string(n);
    McOptions replicate = options;
    replicate.seed = options.seed ^ kReplicateSeedMask;
    auto add = [&](std::string quantity, const auto& estimator, double exact) {
      const EstimateRecord r = estimator(options);
      OracleCheck check{std::move(quantity), fixture, r.estimate, r.stderr_, exact};
      check.pass = within_three_sigma(r.estimate, r.stderr_, exact);
      if (!check.pass) {
        const EstimateRecord again = estimator(replicate);
        check.replicated = true;
        check.replicate_estimate = again.estimate;
        check.replicate_stderr = again.stderr_;
        check.pass = within_three_sigma(again.estimate, again.stderr_, exact);
      }
      checks.push_back(std::move(check));
    };
    const Network net = Network::from_ball(ball);
    const std::vector<std::uint32_t> boundary(ball.boundary().begin(), ball.boundary().end());
    const VertexIndex o = 0;

    // Hitting distribution, summarized by the mass of the first half of the boundary.
    const std::vector<VertexIndex> half(ball.boundary().begin(),
                                        ball.boundary().begin() + ball.boundary().size() / 2);
    const auto dist = hitting_distribution(net, o, boundary);
    double half_mass = 0.0;
    for (std::size_t k = 0; k < half.size(); ++k) half_mass += dist[k];
    add("hitting", [&](const McOptions& opt) { return hitting_probability_mc(ball, o, half, opt); }, half_mass);

    add("green", [&](const McOptions& opt) { return green_function(ball, o, o, opt).record; },
        green_function_exact(ball, o, o));

    const auto visits = expected_visits_constant_boundary(ball);
    add("visits", [&](const McOptions& opt) { return round_visits_mc(ball, o, opt); }, visits.front().second);

    const auto sets = named_rule(host, host.is_tree() ? "root-branches" : "halves")(ball);
    const double crossings_exact = exact_crossing_expectation(ball, sets.x, sets.y);
    add("crossings",
        [&](const McOptions& opt) {
          return crossing_curve(host, [&](const Ball&) { return sets; }, n, n, 1, ParticleScheme::kDegreeCount,
                                opt, false)
              .points.front()
              .mc;
        },
        crossings_exact);

    const std::vector<VertexIndex> k{o};
    const double escape_exact = equilibrium_measure_exact(ball, k).front().second;
    add("escape", [&](const McOptions& opt) { return equilibrium_measure(ball, k, opt).front(); }, escape_exact);

    const std::vector<Vertex> z{ball.vertex(o)};
    add("mu-single-vertex", [&](const McOptions& opt) { return interlacement_intensity(ball, z, opt); },
        escape_exact);

    // Naim kernel at two distinct interior neighbors of the root.
    std::vector<VertexIndex> inner;
    for (VertexIndex v : ball.neighbors(o)) {
      if (!ball.on_boundary(v)) inner.push_back(v);
    }
    if (inner.size() >= 2) {
      const KilledGreen green(net, boundary);
      const double exact = naim_kernel_exact(green, o, inner.front(), inner.back()).theta;
      add("naim", [&](const McOptions& opt) { return naim_kernel_mc(ball, o, inner.front(), inner.back(), opt); },
          exact);
    }
  }
  return checks;
}

}  // namespace gwrg
