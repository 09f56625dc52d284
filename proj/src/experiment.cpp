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

#include "gwrg/experiment.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "json.hpp"

#include "gwrg/error.hpp"
#include "gwrg/estimators.hpp"
#include "gwrg/exact_oracle.hpp"
#include "gwrg/gwrg_sampler.hpp"
#include "gwrg/oracle_suite.hpp"
#include "gwrg/parallel.hpp"
#include "gwrg/rng.hpp"

#ifndef GWRG_VERSION
#define GWRG_VERSION "unknown"
#endif

namespace gwrg {

namespace {

const std::set<std::string, std::less<>> kExperiments = {
    "stats",         "connectivity", "crossings",     "naim",        "green",
    "equilibrium",   "interlacement", "graphon-sample", "oracle-suite",
};

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

VertexIndex vertex_or_root(const Ball& ball, const std::string& text) {
  if (text.empty()) return 0;
  return ball.index_of(parse_vertex(text));
}

std::vector<VertexIndex> vertex_list_or_root(const Ball& ball, const std::string& text) {
  std::vector<VertexIndex> out;
  for (const auto& w : split_words(text)) out.push_back(ball.index_of(parse_vertex(w)));
  if (out.empty()) out.push_back(0);
  return out;
}

std::vector<Cell> record_row(const EstimateRecord& r) {
  return {r.quantity, r.host, static_cast<std::int64_t>(r.n), r.params, r.estimate, r.stderr_, r.trials, r.seed};
}

std::vector<std::string> record_columns() {
  std::vector<std::string> cols;
  std::istringstream in{std::string(kEstimateCsvHeader)};
  for (std::string c; std::getline(in, c, ',');) cols.push_back(c);
  return cols;
}

EstimateRecord exact_record(std::string quantity, const Ball& ball, std::string params, double value,
                            std::uint64_t seed) {
  return {std::move(quantity), ball.host().name(), ball.radius(), std::move(params), value, 0.0, 0, seed};
}

Cell optional_cell(const std::optional<std::uint64_t>& v) {
  if (v) return *v;
  return std::monostate{};
}

struct Context {
  const ExperimentConfig& config;
  HostSpec host;
  int n_min;
  int n_max;
  ParticleScheme scheme;
  McOptions options;
};

std::shared_ptr<const Ball> build_ball(const Context& ctx, int n) {
  return std::make_shared<const Ball>(Ball::build(ctx.host, n, ctx.config.vertex_cap));
}

NaimForm parse_form(std::string_view s) {
  if (s == "symmetric") return NaimForm::kSymmetric;
  if (s == "printed") return NaimForm::kPrinted;
  throw UsageError("unknown Naim form '" + std::string(s) + "'");
}

GreenNormalization parse_normalization(std::string_view s) {
  if (s == "conductance") return GreenNormalization::kConductance;
  if (s == "visits") return GreenNormalization::kVisits;
  throw UsageError("unknown Green normalization '" + std::string(s) + "'");
}

ExperimentResult run_stats(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = {"host", "n", "i", "seed", "boundary_size", "isolated", "components", "largest_size",
                       "diameter"};
  const std::uint64_t rounds = ctx.config.rounds.value_or(1);
  for (int n = ctx.n_min; n <= ctx.n_max; ++n) {
    const auto stats = sample_stats(ctx.host, n, rounds, ctx.scheme, ctx.options.trials, ctx.options.seed,
                                    ctx.options.threads, ctx.config.vertex_cap);
    for (std::uint64_t t = 0; t < stats.size(); ++t) {
      const auto& s = stats[t];
      res.table.rows.push_back({ctx.host.name(), static_cast<std::int64_t>(n), rounds,
                                derive_seed(ctx.options.seed, "stats", static_cast<std::uint64_t>(n), t).hex(),
                                static_cast<std::uint64_t>(s.boundary_size), static_cast<std::uint64_t>(s.isolated),
                                static_cast<std::uint64_t>(s.components), static_cast<std::uint64_t>(s.largest_size),
                                static_cast<std::uint64_t>(s.largest_diameter)});
    }
  }
  return res;
}

ExperimentResult run_connectivity(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = {"host", "n", "seed", "tau", "tau_star", "censored"};
  const std::uint64_t cap = ctx.config.rounds.value_or(kDefaultRoundCap);
  // Censored trials are excluded from the means and counted separately.
  std::vector<std::pair<double, double>> means;
  for (int n = ctx.n_min; n <= ctx.n_max; ++n) {
    const auto times = sample_connectivity(ctx.host, n, cap, ctx.scheme, ctx.options.trials, ctx.options.seed,
                                           ctx.options.threads, ctx.config.vertex_cap);
    RunningMoments tau;
    std::uint64_t censored = 0;
    for (std::uint64_t t = 0; t < times.size(); ++t) {
      const auto& c = times[t];
      res.table.rows.push_back(
          {ctx.host.name(), static_cast<std::int64_t>(n),
           derive_seed(ctx.options.seed, "connectivity", static_cast<std::uint64_t>(n), t).hex(),
           optional_cell(c.tau), optional_cell(c.tau_star), c.censored});
      if (c.tau) {
        tau.add(static_cast<double>(*c.tau));
      } else {
        ++censored;
      }
    }
    const std::string suffix = ".n" + std::to_string(n);
    res.summary.emplace_back("mean_tau" + suffix, format_double(tau.mean()));
    res.summary.emplace_back("stderr_tau" + suffix, format_double(tau.standard_error()));
    res.summary.emplace_back("censored" + suffix, std::to_string(censored));
    if (tau.count() > 0) means.emplace_back(n, tau.mean());
  }
  if (means.size() < 3) {
    res.summary.emplace_back("fit", "skipped: needs at least 3 values of n with uncensored trials");
  } else {
    for (auto& kv : fit_summary(fit_report(means))) res.summary.push_back(std::move(kv));
  }
  return res;
}

ExperimentResult run_crossings(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = record_columns();
  const std::string rule_name =
      ctx.config.rule.empty() ? (ctx.host.is_tree() ? "root-branches" : "halves") : ctx.config.rule;
  const auto rule = named_rule(ctx.host, rule_name);
  Ball::build(ctx.host, ctx.n_max, ctx.config.vertex_cap);  // fail early on the cap
  if (ctx.config.edge_view != "multiset" && ctx.config.edge_view != "simple") {
    throw UsageError("--edge-view must be multiset or simple");
  }
  const EdgeView view = ctx.config.edge_view == "simple" ? EdgeView::kSimple : EdgeView::kMultiset;
  const auto curve = crossing_curve(ctx.host, rule, ctx.n_min, ctx.n_max, ctx.config.rounds.value_or(1),
                                    ctx.scheme, ctx.options, true, view);
  for (const auto& p : curve.points) {
    auto mc = p.mc;
    mc.params = "rule=" + rule_name + ";" + mc.params;
    res.table.rows.push_back(record_row(mc));
    if (p.exact) {
      auto ex = mc;
      ex.quantity = "crossings-exact";
      ex.estimate = *p.exact;
      ex.stderr_ = 0.0;
      ex.trials = 0;
      res.table.rows.push_back(record_row(ex));
    }
  }
  return res;
}

ExperimentResult run_green(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = record_columns();
  for (int n = ctx.n_min; n <= ctx.n_max; ++n) {
    const auto ball = build_ball(ctx, n);
    const VertexIndex x = vertex_or_root(*ball, ctx.config.x);
    const VertexIndex y = vertex_or_root(*ball, ctx.config.y);
    const auto mc = green_function(*ball, x, y, ctx.options).record;
    res.table.rows.push_back(record_row(mc));
    if (ball->size() <= kOracleVertexCap) {
      res.table.rows.push_back(record_row(
          exact_record("green-exact", *ball, mc.params, green_function_exact(*ball, x, y), ctx.options.seed)));
    }
  }
  return res;
}

ExperimentResult run_naim(const Context& ctx) {
  ExperimentResult res;
  const NaimForm form = parse_form(ctx.config.naim_form);
  const GreenNormalization norm = parse_normalization(ctx.config.normalization);
  if (ctx.config.max_steps > 0) {
    res.table.columns = {"host", "n", "sample", "t", "theta", "truncated", "oscillation"};
    const auto series =
        naim_convergence_experiment(ctx.host, ctx.n_max, ctx.config.max_steps, ctx.options, form, norm);
    for (std::uint64_t s = 0; s < series.size(); ++s) {
      for (std::uint64_t t = 0; t < series[s].theta.size(); ++t) {
        res.table.rows.push_back({ctx.host.name(), static_cast<std::int64_t>(ctx.n_max), s, t,
                                  series[s].theta[t], series[s].truncated, series[s].oscillation});
      }
    }
    return res;
  }
  res.table.columns = record_columns();
  for (int n = ctx.n_min; n <= ctx.n_max; ++n) {
    const auto ball = build_ball(ctx, n);
    const VertexIndex o = vertex_or_root(*ball, ctx.config.o);
    const VertexIndex x = vertex_or_root(*ball, ctx.config.x);
    const VertexIndex y = vertex_or_root(*ball, ctx.config.y);
    const auto mc = naim_kernel_mc(*ball, o, x, y, ctx.options, form, norm);
    res.table.rows.push_back(record_row(mc));
    if (ball->size() <= kOracleVertexCap) {
      const Network net = Network::from_ball(*ball);
      const std::vector<std::uint32_t> boundary(ball->boundary().begin(), ball->boundary().end());
      const KilledGreen green(net, boundary);
      const auto exact = naim_kernel_exact(green, o, x, y, form, norm);
      res.table.rows.push_back(record_row(exact_record("naim-exact", *ball, mc.params, exact.theta, ctx.options.seed)));
      res.table.rows.push_back(
          record_row(exact_record("martin-exact", *ball, mc.params, exact.martin, ctx.options.seed)));
    }
  }
  return res;
}

ExperimentResult run_equilibrium(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = record_columns();
  for (int n = ctx.n_min; n <= ctx.n_max; ++n) {
    const auto ball = build_ball(ctx, n);
    const auto k = vertex_list_or_root(*ball, ctx.config.k);
    for (const auto& r : equilibrium_measure(*ball, k, ctx.options)) res.table.rows.push_back(record_row(r));
    if (ball->size() <= kOracleVertexCap) {
      for (const auto& [x, e] : equilibrium_measure_exact(*ball, k)) {
        res.table.rows.push_back(record_row(
            exact_record("equilibrium-exact", *ball, "x=" + serialize(ball->vertex(x)), e, ctx.options.seed)));
      }
    }
  }
  return res;
}

ExperimentResult run_interlacement(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = record_columns();
  std::vector<Vertex> z;
  for (const auto& w : split_words(ctx.config.z)) z.push_back(parse_vertex(w));
  if (z.empty()) z.push_back(ctx.host.root());
  for (int n = ctx.n_min; n <= ctx.n_max; ++n) {
    const auto ball = build_ball(ctx, n);
    const auto mc = interlacement_intensity(*ball, z, ctx.options);
    res.table.rows.push_back(record_row(mc));
    // A single interior vertex is met by an expected e_{x}(x) traces per round.
    const auto idx = ball->find(z.front());
    if (z.size() == 1 && idx && !ball->on_boundary(*idx) && ball->size() <= kOracleVertexCap) {
      const std::vector<VertexIndex> k{*idx};
      res.table.rows.push_back(record_row(exact_record(
          "equilibrium-exact", *ball, mc.params, equilibrium_measure_exact(*ball, k).front().second,
          ctx.options.seed)));
    }
  }
  return res;
}

ExperimentResult run_graphon(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = {"host", "n", "cell_a", "cell_b", "lambda", "edge_probability", "frequency", "samples",
                       "seed"};
  const auto ball = build_ball(ctx, ctx.n_max);
  const int depth = ctx.config.depth > 0 ? ctx.config.depth : std::min(ctx.n_max, 2);
  const auto cells = subtree_cells(*ball, depth);
  CrossingMatrix lambda;
  if (ctx.config.lambda == "exact") {
    lambda = crossing_matrix_exact(*ball, cells);
  } else if (ctx.config.lambda == "mc") {
    lambda = crossing_matrix_mc(*ball, cells, ctx.options);
  } else {
    throw UsageError("--lambda must be mc or exact");
  }
  const std::size_t m = cells.size();
  const auto draws = run_trials(ctx.options.trials, ctx.options.threads, [&](std::uint64_t s) {
    auto rng = StreamSource(derive_seed(ctx.options.seed, "graphon-sample", static_cast<std::uint64_t>(ctx.n_max), s))
                   .stream(0);
    return sample_from_crossing_matrix(lambda, rng);
  });
  std::vector<std::uint64_t> counts(m * m, 0);
  for (const auto& edges : draws) {
    for (const auto& [a, b] : edges) ++counts[a * m + b];
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      res.table.rows.push_back({ctx.host.name(), static_cast<std::int64_t>(ctx.n_max),
                                serialize(ball->vertex(cells[a].front())), serialize(ball->vertex(cells[b].front())),
                                lambda[a][b], -std::expm1(-lambda[a][b]),
                                static_cast<double>(counts[a * m + b]) / static_cast<double>(ctx.options.trials),
                                ctx.options.trials, ctx.options.seed});
    }
  }
  return res;
}

ExperimentResult run_suite(const Context& ctx) {
  ExperimentResult res;
  res.table.columns = {"quantity", "fixture", "estimate", "stderr", "exact", "replicate_estimate",
                       "replicate_stderr", "pass"};
  std::size_t passed = 0;
  const auto checks = run_oracle_suite(ctx.options);
  for (const auto& c : checks) {
    res.table.rows.push_back({c.quantity, c.fixture, c.estimate, c.stderr_, c.exact,
                              c.replicated ? Cell{c.replicate_estimate} : Cell{},
                              c.replicated ? Cell{c.replicate_stderr} : Cell{}, c.pass});
    passed += c.pass;
  }
  res.summary.emplace_back("checks", std::to_string(checks.size()));
  res.summary.emplace_back("passed", std::to_string(passed));
  res.suite_failed = passed != checks.size();
  return res;
}

std::string cell_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::string>) {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string out = "\"";
          for (char ch : v) {
            if (ch == '"') out += '"';
            out += ch;
          }
          return out + "\"";
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else {
          return std::to_string(v);
        }
      },
      c);
}

}  // namespace

std::pair<int, int> parse_n_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int v = 0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end || v < 1) {
      throw UsageError("bad radius '" + std::string(text) + "'; expected n or a..b with n >= 1");
    }
    return v;
  };
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const int n = parse_int(text);
    return {n, n};
  }
  const int a = parse_int(text.substr(0, dots));
  const int b = parse_int(text.substr(dots + 2));
  if (b < a) throw UsageError("empty radius range '" + std::string(text) + "'");
  return {a, b};
}

void validate_config(const ExperimentConfig& config) {
  if (!kExperiments.contains(config.experiment)) {
    throw UsageError("unknown experiment '" + config.experiment + "'");
  }
  HostSpec::parse(config.host);
  parse_n_range(config.n);
  parse_scheme(config.scheme);
  if (config.trials && *config.trials == 0) throw UsageError("--trials must be positive");
  if (config.effective_trials() < 2 && config.experiment != "stats" && config.experiment != "connectivity" &&
      config.experiment != "graphon-sample") {
    throw UsageError("Monte Carlo estimates need at least 2 trials");
  }
  if (config.rounds && *config.rounds == 0) throw UsageError("--i must be positive");
  if (config.threads == 0) throw UsageError("--threads must be positive");
  if (config.vertex_cap == 0) throw UsageError("--vertex-cap must be positive");
  if (config.format != "csv" && config.format != "json") throw UsageError("--format must be csv or json");
  if (config.depth < 0) throw UsageError("--depth must be positive");
}

std::vector<std::pair<std::string, std::string>> resolved_config(const ExperimentConfig& c) {
  std::vector<std::pair<std::string, std::string>> kv = {
      {"experiment", c.experiment},
      {"host", c.host},
      {"n", c.n},
      {"i", c.rounds ? std::to_string(*c.rounds)
                     : (c.experiment == "connectivity" ? std::to_string(kDefaultRoundCap) : "1")},
      {"scheme", c.scheme},
      {"trials", std::to_string(c.effective_trials())},
      {"seed", std::to_string(c.seed)},
      {"out", c.out},
      {"format", c.format},
      {"threads", std::to_string(c.threads)},
      {"vertex-cap", std::to_string(c.vertex_cap)},
  };
  auto add_if = [&](const char* key, const std::string& v) {
    if (!v.empty()) kv.emplace_back(key, v);
  };
  add_if("rule", c.rule);
  if (c.experiment == "crossings") kv.emplace_back("edge-view", c.edge_view);
  add_if("o", c.o);
  add_if("x", c.x);
  add_if("y", c.y);
  add_if("K", c.k);
  add_if("Z", c.z);
  if (c.depth > 0) kv.emplace_back("depth", std::to_string(c.depth));
  if (c.experiment == "graphon-sample") kv.emplace_back("lambda", c.lambda);
  if (c.experiment == "naim") {
    kv.emplace_back("max-steps", std::to_string(c.max_steps));
    kv.emplace_back("naim-form", c.naim_form);
    kv.emplace_back("normalization", c.normalization);
  }
  return kv;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  validate_config(config);
  const auto [n_min, n_max] = parse_n_range(config.n);
  const Context ctx{config,
                    HostSpec::parse(config.host),
                    n_min,
                    n_max,
                    parse_scheme(config.scheme),
                    {config.effective_trials(), config.seed, config.threads}};
  const std::string& e = config.experiment;
  if (e == "stats") return run_stats(ctx);
  if (e == "connectivity") return run_connectivity(ctx);
  if (e == "crossings") return run_crossings(ctx);
  if (e == "naim") return run_naim(ctx);
  if (e == "green") return run_green(ctx);
  if (e == "equilibrium") return run_equilibrium(ctx);
  if (e == "interlacement") return run_interlacement(ctx);
  if (e == "graphon-sample") return run_graphon(ctx);
  return run_suite(ctx);
}

void write_table(std::ostream& os, const ResultTable& table, std::string_view format) {
  if (format == "json") {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        std::visit(
            [&](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, std::monostate>) {
                obj[table.columns[c]] = nullptr;
              } else {
                obj[table.columns[c]] = v;
              }
            },
            row[c]);
      }
      rows.push_back(std::move(obj));
    }
    os << rows.dump(2) << '\n';
    return;
  }
  for (std::size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << cell_text(row[c]);
    os << '\n';
  }
}

std::string render_table(const ResultTable& table, std::string_view format) {
  std::ostringstream os;
  write_table(os, table, format);
  return os.str();
}

int execute(const ExperimentConfig& config, std::ostream& log) {
  const auto started = std::chrono::steady_clock::now();
  const ExperimentResult result = run_experiment(config);
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  if (config.out.empty()) {
    write_table(std::cout, result.table, config.format);
    for (const auto& [k, v] : result.summary) log << k << '=' << v << '\n';
  } else {
    auto open = [](const std::string& path) {
      std::ofstream f(path, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + path + "'");
      return f;
    };
    {
      auto f = open(config.out);
      write_table(f, result.table, config.format);
    }
    if (!result.summary.empty()) {
      auto f = open(config.out + ".summary");
      for (const auto& [k, v] : result.summary) f << k << '=' << v << '\n';
    }
    auto f = open(config.out + ".manifest");
    for (const auto& [k, v] : resolved_config(config)) f << k << '=' << v << '\n';
    f << "version=" << GWRG_VERSION << '\n';
    f << "wall_time_seconds=" << format_double(wall) << '\n';
    for (const auto& [k, v] : result.summary) log << k << '=' << v << '\n';
  }
  return result.suite_failed ? 3 : 0;
}

// ---------------------------------------------------------------------------

std::vector<SampleStats> sample_stats(const HostSpec& host, int n, std::uint64_t rounds, ParticleScheme scheme,
                                      std::uint64_t trials, std::uint64_t seed, unsigned threads,
                                      std::size_t vertex_cap) {
  const auto ball = std::make_shared<const Ball>(Ball::build(host, n, vertex_cap));
  return run_trials(trials, threads, [&](std::uint64_t t) {
    GwrgState state(ball);
    const StreamSource source(derive_seed(seed, "stats", static_cast<std::uint64_t>(n), t));
    for (std::uint64_t r = 0; r < rounds; ++r) state.advance_round(scheme, source);
    auto s = compute_stats(state);
    s.n = n;
    s.i = rounds;
    return s;
  });
}

std::vector<ConnectivityTimes> sample_connectivity(const HostSpec& host, int n, std::uint64_t round_cap,
                                                   ParticleScheme scheme, std::uint64_t trials,
                                                   std::uint64_t seed, unsigned threads,
                                                   std::size_t vertex_cap) {
  const auto ball = std::make_shared<const Ball>(Ball::build(host, n, vertex_cap));
  return run_trials(trials, threads, [&](std::uint64_t t) {
    const StreamSource source(derive_seed(seed, "connectivity", static_cast<std::uint64_t>(n), t));
    return connectivity_times(ball, scheme, source, round_cap);
  });
}

FitReport fit_report(std::span<const std::pair<double, double>> n_mean_tau) {
  std::set<double> distinct;
  for (const auto& p : n_mean_tau) distinct.insert(p.first);
  if (distinct.size() < 3) {
    throw UsageError("fit report needs at least 3 distinct values of n");
  }
  FitReport report;
  report.fit = linear_fit(n_mean_tau);
  return report;
}

std::vector<std::pair<std::string, std::string>> fit_summary(const FitReport& r) {
  return {
      {"fit.slope", format_double(r.fit.slope)},
      {"fit.slope_stderr", format_double(r.fit.slope_stderr)},
      {"fit.intercept", format_double(r.fit.intercept)},
      {"fit.intercept_stderr", format_double(r.fit.intercept_stderr)},
      {"fit.adjusted_r_squared", format_double(r.fit.adjusted_r_squared)},
      {"reference.slope", format_double(r.reference_slope) + "+-" + format_double(r.reference_slope_error)},
      {"reference.intercept",
       format_double(r.reference_intercept) + "+-" + format_double(r.reference_intercept_error)},
      {"reference.adjusted_r_squared", format_double(r.reference_adjusted_r_squared)},
  };
}

}  // namespace gwrg
