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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "gwrg/error.hpp"
#include "gwrg/experiment.hpp"

using namespace gwrg;

namespace {

ExperimentConfig base(std::string experiment, std::string host, std::string n) {
  ExperimentConfig c;
  c.experiment = std::move(experiment);
  c.host = std::move(host);
  c.n = std::move(n);
  c.trials = 40;
  c.seed = 17;
  return c;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  const std::string cmd = std::string(GWRG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "gwrg-unit";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("radius ranges") {
  CHECK(parse_n_range("5") == std::pair{5, 5});
  CHECK(parse_n_range("2..8") == std::pair{2, 8});
  CHECK_THROWS_AS(parse_n_range("0"), UsageError);
  CHECK_THROWS_AS(parse_n_range("8..2"), UsageError);
  CHECK_THROWS_AS(parse_n_range("x"), UsageError);
  CHECK_THROWS_AS(parse_n_range("3.."), UsageError);
}

TEST_CASE("configuration validation") {
  auto c = base("stats", "btree2", "3");
  CHECK_NOTHROW(validate_config(c));
  c.trials = 0;
  CHECK_THROWS_AS(validate_config(c), UsageError);
  c = base("nonsense", "btree2", "3");
  CHECK_THROWS_AS(validate_config(c), UsageError);
  c = base("stats", "btree2", "3");
  c.format = "xml";
  CHECK_THROWS_AS(validate_config(c), UsageError);
  c = base("crossings", "z2", "3");
  c.rule = "root-branches";
  CHECK_THROWS_AS(run_experiment(c), UsageError);
  c = base("stats", "hyptree", "12");
  c.vertex_cap = 1000;
  CHECK_THROWS_AS(run_experiment(c), ResourceError);

  c = base("stats", "btree2", "3");
  c.trials.reset();
  CHECK(c.effective_trials() == kDefaultTrials);
  c.fast = true;
  CHECK(c.effective_trials() == kFastTrials);
}

TEST_CASE("results do not depend on the worker count") {
  std::vector<ExperimentConfig> configs = {
      base("stats", "z2", "2..4"),          base("connectivity", "btree2", "2..4"),
      base("crossings", "btree2", "2..3"),  base("green", "tree-d3", "3"),
      base("naim", "z3", "2"),              base("equilibrium", "hyptree", "3"),
      base("interlacement", "lamplighter", "3"), base("graphon-sample", "btree2", "4"),
      base("oracle-suite", "btree2", "1"),
  };
  configs[1].scheme = "poisson";
  configs[4].x = "Z:(1,0,0)";
  configs[4].y = "Z:(0,1,0)";
  auto series = base("naim", "tree-d3", "5");
  series.max_steps = 20;
  configs.push_back(series);
  for (auto c : configs) {
    c.threads = 1;
    const auto one = run_experiment(c);
    const std::string csv = render_table(one.table, "csv");
    const std::string json = render_table(one.table, "json");
    CHECK_FALSE(one.table.rows.empty());
    for (unsigned threads : {2u, 8u}) {
      c.threads = threads;
      const auto many = run_experiment(c);
      CHECK_MESSAGE(render_table(many.table, "csv") == csv, c.experiment);
      CHECK_MESSAGE(render_table(many.table, "json") == json, c.experiment);
    }
  }
}

TEST_CASE("csv and json carry the same rows") {
  auto c = base("connectivity", "btree2", "3");
  const auto result = run_experiment(c);
  const std::string csv = render_table(result.table, "csv");
  CHECK(csv.rfind("host,n,seed,tau,tau_star,censored\n", 0) == 0);
  const std::string json = render_table(result.table, "json");
  CHECK(json.find("\"tau_star\"") != std::string::npos);
  std::size_t lines = 0;
  for (char ch : csv) lines += ch == '\n';
  CHECK(lines == result.table.rows.size() + 1);

  auto stats = base("stats", "btree2", "3");
  CHECK(render_table(run_experiment(stats).table, "csv")
            .rfind("host,n,i,seed,boundary_size,isolated,components,largest_size,diameter\n", 0) == 0);
  auto green = base("green", "z2", "3");
  CHECK(render_table(run_experiment(green).table, "csv").rfind("quantity,host,n,params,estimate,stderr,trials,seed\n", 0) == 0);
}

TEST_CASE("fit report") {
  std::vector<std::pair<double, double>> line{{2, 1.42}, {3, 1.68}, {4, 1.94}, {5, 2.2}};
  const auto r = fit_report(line);
  CHECK(r.fit.slope == doctest::Approx(0.26));
  CHECK(r.fit.intercept == doctest::Approx(0.90));
  CHECK(r.fit.adjusted_r_squared == doctest::Approx(1.0));
  const auto summary = fit_summary(r);
  CHECK(summary.size() == 8);
  CHECK(summary[5].first == "reference.slope");

  std::vector<std::pair<double, double>> two{{2, 1}, {3, 2}};
  CHECK_THROWS_AS(fit_report(two), UsageError);
  std::vector<std::pair<double, double>> repeated{{2, 1}, {2, 1.1}, {3, 2}};
  CHECK_THROWS_AS(fit_report(repeated), UsageError);
}

TEST_CASE("execute writes results, manifest and summary") {
  auto c = base("connectivity", "btree2", "2..4");
  c.out = scratch("conn.csv").string();
  std::ostringstream log;
  CHECK(execute(c, log) == 0);
  const std::string first = slurp(c.out);
  const std::string manifest = slurp(c.out + ".manifest");
  CHECK(manifest.find("experiment=connectivity\n") != std::string::npos);
  CHECK(manifest.find("seed=17\n") != std::string::npos);
  CHECK(manifest.find("trials=40\n") != std::string::npos);
  CHECK(manifest.find("version=") != std::string::npos);
  CHECK(manifest.find("wall_time_seconds=") != std::string::npos);
  CHECK(slurp(c.out + ".summary").find("fit.slope=") != std::string::npos);
  c.threads = 8;
  CHECK(execute(c, log) == 0);
  CHECK(slurp(c.out) == first);
}

TEST_CASE("command-line exit codes") {
  const auto out = scratch("cli.csv").string();
  CHECK(run_cli("--experiment stats --host btree2 --n 3 --trials 5 --out " + out) == 0);
  CHECK(run_cli("--experiment stats --host btree2 --n 3 --trials 0") == 1);
  CHECK(run_cli("--experiment stats --host torus --n 3") == 1);
  CHECK(run_cli("--experiment crossings --host z2 --n 3 --rule root-branches --trials 5") == 1);
  CHECK(run_cli("--experiment stats --host hyptree --n 12 --trials 5 --vertex-cap 1000") == 2);
  CHECK(run_cli("--experiment oracle-suite --fast --out " + scratch("suite.csv").string()) == 0);
  CHECK(run_cli("--bogus") == 1);
}

TEST_CASE("flags override the configuration file") {
  const auto cfg = scratch("run.cfg");
  {
    std::ofstream f(cfg);
    f << "experiment=stats\nhost=z2\nn=2\ntrials=7\nseed=3\n";
  }
  const auto out = scratch("cfg.csv").string();
  REQUIRE(run_cli("--config " + cfg.string() + " --trials 4 --out " + out) == 0);
  const std::string manifest = slurp(out + ".manifest");
  CHECK(manifest.find("host=z2\n") != std::string::npos);
  CHECK(manifest.find("trials=4\n") != std::string::npos);
  CHECK(manifest.find("seed=3\n") != std::string::npos);
}

TEST_CASE("debug dumps") {
  const auto dir = scratch("dumps");
  std::filesystem::create_directories(dir);
  const std::string args = "--experiment stats --host z1 --n 2 --trials 2 --i 2 --out " + (dir / "s.csv").string() +
                           " --dump-ball " + (dir / "ball.txt").string() + " --dump-traces " +
                           (dir / "traces.txt").string() + " --dump-edges " + (dir / "edges.txt").string() +
                           " --dump-laplacian " + (dir / "lap.txt").string();
  REQUIRE(run_cli(args) == 0);
  CHECK(slurp(dir / "ball.txt").rfind("0 Z:(0) : 1 2\n", 0) == 0);
  CHECK(slurp(dir / "edges.txt").rfind("# host=z1 n=2 i=2 seed=", 0) == 0);
  std::istringstream traces(slurp(dir / "traces.txt"));
  int lines = 0;
  for (std::string line; std::getline(traces, line);) ++lines;
  CHECK(lines == 4);
  CHECK_FALSE(slurp(dir / "lap.txt").empty());
}
