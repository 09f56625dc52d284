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

// Command-line front end: gwrg_cli --experiment <name> [options]

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "gwrg/ball.hpp"
#include "gwrg/error.hpp"
#include "gwrg/exact_oracle.hpp"
#include "gwrg/experiment.hpp"
#include "gwrg/gwrg_sampler.hpp"
#include "gwrg/rng.hpp"
#include "gwrg/walk_engine.hpp"

namespace {

struct DumpPaths {
  std::string ball;
  std::string traces;
  std::string edges;
  std::string laplacian;
};

std::ofstream open_dump(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw gwrg::UsageError("cannot write '" + path + "'");
  return f;
}

// Debug dumps for the largest radius, using the trial-0 stream of the experiment.
void write_dumps(const gwrg::ExperimentConfig& config, const DumpPaths& dumps) {
  if (dumps.ball.empty() && dumps.traces.empty() && dumps.edges.empty() && dumps.laplacian.empty()) return;
  const auto host = gwrg::HostSpec::parse(config.host);
  const int n = gwrg::parse_n_range(config.n).second;
  const auto ball = std::make_shared<const gwrg::Ball>(gwrg::Ball::build(host, n, config.vertex_cap));
  if (!dumps.ball.empty()) {
    auto f = open_dump(dumps.ball);
    ball->dump(f);
  }
  if (!dumps.laplacian.empty()) {
    auto f = open_dump(dumps.laplacian);
    gwrg::Network::from_ball(*ball).dump_laplacian(f);
  }
  if (!dumps.traces.empty() || !dumps.edges.empty()) {
    const auto seed = gwrg::derive_seed(config.seed, config.experiment, static_cast<std::uint64_t>(n), 0);
    const gwrg::StreamSource source(seed);
    const auto scheme = gwrg::parse_scheme(config.scheme);
    gwrg::GwrgState state(ball);
    std::ofstream traces;
    if (!dumps.traces.empty()) traces = open_dump(dumps.traces);
    for (std::uint64_t r = 0; r < config.rounds.value_or(1); ++r) {
      for (const auto& t : state.advance_round(scheme, source, !dumps.traces.empty())) {
        if (traces.is_open()) traces << gwrg::format_trace(t) << '\n';
      }
    }
    if (!dumps.edges.empty()) {
      auto f = open_dump(dumps.edges);
      state.dump_edges(f, seed.hex());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group-walk random graph experiments"};
  app.set_version_flag("--version", GWRG_VERSION);
  app.set_config("--config", "", "key=value configuration file; command-line flags take precedence");

  gwrg::ExperimentConfig config;
  DumpPaths dumps;
  app.add_option("--experiment", config.experiment,
                 "stats | connectivity | crossings | naim | green | equilibrium | interlacement | "
                 "graphon-sample | oracle-suite")
      ->required();
  app.add_option("--host", config.host, "btree<b> | tree-d<k> | z<d> | hyptree | lamplighter")
      ->capture_default_str();
  app.add_option("--n", config.n, "radius n or range a..b")->capture_default_str();
  app.add_option("--i", config.rounds, "rounds i (connectivity: round cap, default 1000)");
  app.add_option("--scheme", config.scheme, "degree | poisson")->capture_default_str();
  app.add_option("--trials", config.trials, "trials per n (default 10000)");
  app.add_flag("--fast", config.fast, "use 1000 trials unless --trials is given");
  app.add_option("--seed", config.seed, "master seed")->capture_default_str();
  app.add_option("--out", config.out, "result file; a .manifest is written next to it");
  app.add_option("--format", config.format, "csv | json")->capture_default_str();
  app.add_option("--threads", config.threads, "worker threads")->capture_default_str();
  app.add_option("--vertex-cap", config.vertex_cap, "largest ball allowed")->capture_default_str();
  app.add_option("--rule", config.rule, "crossings: root-branches | nested | halves | empty");
  app.add_option("--edge-view", config.edge_view, "crossings: multiset | simple")->capture_default_str();
  app.add_option("--o", config.o, "naim: reference vertex (default root)");
  app.add_option("--x", config.x, "green/naim: first vertex (default root)");
  app.add_option("--y", config.y, "green/naim: second vertex (default root)");
  app.add_option("--K", config.k, "equilibrium: whitespace-separated vertices (default root)");
  app.add_option("--Z", config.z, "interlacement: whitespace-separated walk (default root)");
  app.add_option("--depth", config.depth, "graphon-sample: cell depth (default min(n, 2))");
  app.add_option("--lambda", config.lambda, "graphon-sample: mc | exact")->capture_default_str();
  app.add_option("--max-steps", config.max_steps, "naim: trajectory length; 0 evaluates at fixed x, y");
  app.add_option("--naim-form", config.naim_form, "symmetric | printed")->capture_default_str();
  app.add_option("--normalization", config.normalization, "conductance | visits")->capture_default_str();
  app.add_option("--dump-ball", dumps.ball, "write the ball adjacency for the largest n");
  app.add_option("--dump-traces", dumps.traces, "write walk traces of one sample");
  app.add_option("--dump-edges", dumps.edges, "write the edge multiset of one sample");
  app.add_option("--dump-laplacian", dumps.laplacian, "write the ball Laplacian as triplets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    const int status = gwrg::execute(config, std::cerr);
    write_dumps(config, dumps);
    return status;
  } catch (const gwrg::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 1;
  } catch (const gwrg::SingularSystemError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
