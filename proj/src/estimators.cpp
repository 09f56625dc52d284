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

#include "gwrg/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <ostream>

#include "gwrg/error.hpp"
#include "gwrg/gwrg_sampler.hpp"
#include "gwrg/parallel.hpp"

namespace gwrg {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::uint32_t> as_u32(std::span<const VertexIndex> vs) { return {vs.begin(), vs.end()}; }

std::vector<bool> indicator(std::size_t n, std::span<const VertexIndex> vs) {
  std::vector<bool> out(n, false);
  for (auto v : vs) out.at(v) = true;
  return out;
}

// Solves for the harmonic extension of boundary data 1_S into the interior of
// the ball, for several sets S over one factorization.
class BoundaryHarmonics {
 public:
  explicit BoundaryHarmonics(const Ball& ball) : ball_(ball), net_(Network::from_ball(ball)) {
    std::vector<bool> interior(ball.size(), false);
    for (VertexIndex v = 0; v < ball.size(); ++v) interior[v] = !ball.on_boundary(v);
    solver_ = std::make_unique<DirichletSolver>(net_, std::move(interior));
  }

  std::vector<double> extend(const std::vector<bool>& in_set) const {
    std::vector<double> rhs(ball_.size(), 0.0);
    for (VertexIndex u = 0; u < ball_.size(); ++u) {
      if (ball_.on_boundary(u)) continue;
      for (VertexIndex w : ball_.neighbors(u)) {
        if (ball_.on_boundary(w) && in_set[w]) rhs[u] += 1.0;
      }
    }
    auto h = solver_->solve(rhs).values;
    for (VertexIndex b : ball_.boundary()) h[b] = in_set[b] ? 1.0 : 0.0;
    return h;
  }

  /// d(v) * P_v[first return to the boundary lands in S].
  double launch_mass(VertexIndex v, const std::vector<double>& h) const {
    double total = 0.0;
    for (VertexIndex w : ball_.neighbors(v)) total += h[w];
    return total;
  }

 private:
  const Ball& ball_;
  Network net_;
  std::unique_ptr<DirichletSolver> solver_;
};

std::vector<VertexIndex> far_side(const Ball& ball, const TreeEdge& edge) {
  return boundary_partition_by_branch(ball, edge).first;
}

RandomStream trial_stream(const McOptions& options, std::string_view quantity, int n, std::uint64_t t,
                          std::uint64_t lane = 0) {
  return StreamSource(derive_seed(options.seed, quantity, static_cast<std::uint64_t>(n), t)).stream(lane);
}

void check_trials(const McOptions& options) {
  if (options.trials < 2) {
    throw UsageError("Monte Carlo estimates need at least 2 trials");
  }
}

EstimateRecord make_record(std::string quantity, const Ball& ball, std::string params,
                           const RunningMoments& m, const McOptions& options) {
  return {std::move(quantity), ball.host().name(), ball.radius(), std::move(params),
          m.mean(),           m.standard_error(),  m.count(),     options.seed};
}

}  // namespace

void write_csv_row(std::ostream& os, const EstimateRecord& r) {
  os << csv_field(r.quantity) << ',' << csv_field(r.host) << ',' << r.n << ',' << csv_field(r.params)
     << ',' << number(r.estimate) << ',' << number(r.stderr_) << ',' << r.trials << ',' << r.seed
     << '\n';
}

double RunningMoments::standard_error() const {
  if (count_ < 2) return 0.0;
  const auto m = static_cast<double>(count_);
  const double mean = sum_ / m;
  const double var = std::max(0.0, (sum_sq_ - m * mean * mean) / (m - 1.0));
  return std::sqrt(var / m);
}

// ---------------------------------------------------------------------------
// Crossings

BoundarySetRule branch_rule(const HostSpec& host, TreeEdge x_edge, TreeEdge y_edge) {
  lower_endpoint(host, x_edge);
  lower_endpoint(host, y_edge);
  return [x_edge = std::move(x_edge), y_edge = std::move(y_edge)](const Ball& ball) {
    return BoundarySets{far_side(ball, x_edge), far_side(ball, y_edge)};
  };
}

BoundarySetRule named_rule(const HostSpec& host, std::string_view name) {
  const TreeWord root;
  const TreeWord zero{{0}};
  const TreeWord one{{1}};
  const TreeWord zero_zero{{0, 0}};
  if (name == "root-branches") {
    return branch_rule(host, {root, zero}, {root, one});
  }
  if (name == "nested") {
    return branch_rule(host, {zero, zero_zero}, {root, zero});
  }
  if (name == "empty") {
    return [](const Ball& ball) {
      return BoundarySets{{}, {ball.boundary().begin(), ball.boundary().end()}};
    };
  }
  if (name == "halves") {
    return [](const Ball& ball) {
      BoundarySets sets;
      for (VertexIndex b : ball.boundary()) {
        int side = 0;
        std::visit(
            [&side](const auto& v) {
              using T = std::decay_t<decltype(v)>;
              if constexpr (std::is_same_v<T, TreeWord>) {
                side = v.letters.front() == 0 ? 1 : -1;
              } else if constexpr (std::is_same_v<T, LatticePoint>) {
                side = v.coords.front() > 0 ? 1 : (v.coords.front() < 0 ? -1 : 0);
              } else if constexpr (std::is_same_v<T, LamplighterState>) {
                side = v.position > 0 ? 1 : (v.position < 0 ? -1 : 0);
              } else {
                side = v.index < (std::uint64_t{1} << (v.level - 1)) ? 1 : -1;
              }
            },
            ball.vertex(b));
        if (side > 0) sets.x.push_back(b);
        if (side < 0) sets.y.push_back(b);
      }
      return sets;
    };
  }
  throw UsageError("unknown boundary-set rule '" + std::string(name) + "'");
}

double exact_crossing_expectation(const Ball& ball, std::span<const VertexIndex> x,
                                  std::span<const VertexIndex> y) {
  for (auto v : x) ball.boundary_position(v);
  for (auto v : y) ball.boundary_position(v);
  const auto in_x = indicator(ball.size(), x);
  const auto in_y = indicator(ball.size(), y);
  std::vector<bool> in_union(ball.size());
  for (std::size_t v = 0; v < ball.size(); ++v) in_union[v] = in_x[v] || in_y[v];

  const BoundaryHarmonics harmonics(ball);
  const auto hx = harmonics.extend(in_x);
  const auto hy = harmonics.extend(in_y);
  const auto hu = harmonics.extend(in_union);
  double total = 0.0;
  for (VertexIndex v : ball.boundary()) {
    if (in_x[v] && in_y[v]) {
      total += harmonics.launch_mass(v, hu);
    } else if (in_x[v]) {
      total += harmonics.launch_mass(v, hy);
    } else if (in_y[v]) {
      total += harmonics.launch_mass(v, hx);
    }
  }
  return total;
}

CrossingCurve crossing_curve(const HostSpec& host, const BoundarySetRule& rule, int n_min, int n_max,
                             std::uint64_t rounds, ParticleScheme scheme, const McOptions& options,
                             bool with_exact, EdgeView view) {
  check_trials(options);
  if (n_min < 1 || n_max < n_min || rounds < 1) {
    throw UsageError("crossing curve needs 1 <= n_min <= n_max and rounds >= 1");
  }
  CrossingCurve curve;
  for (int n = n_min; n <= n_max; ++n) {
    auto ball = std::make_shared<const Ball>(Ball::build(host, n));
    const BoundarySets sets = rule(*ball);
    const auto counts = run_trials(options.trials, options.threads, [&](std::uint64_t t) {
      GwrgState state(ball);
      const StreamSource source(derive_seed(options.seed, "crossings", static_cast<std::uint64_t>(n), t));
      for (std::uint64_t r = 0; r < rounds; ++r) state.advance_round(scheme, source);
      return crossing_count(state, sets.x, sets.y, view);
    });
    RunningMoments m;
    for (auto c : counts) m.add(static_cast<double>(c));
    CrossingPoint point;
    point.n = n;
    point.mc = make_record("crossings", *ball,
                           "i=" + std::to_string(rounds) + ";scheme=" + std::string(scheme_name(scheme)) +
                               (view == EdgeView::kSimple ? ";view=simple" : ""),
                           m, options);
    if (with_exact && view == EdgeView::kMultiset && ball->size() <= kOracleVertexCap) {
      point.exact = static_cast<double>(rounds) * exact_crossing_expectation(*ball, sets.x, sets.y);
    }
    curve.points.push_back(std::move(point));
  }
  return curve;
}

// ---------------------------------------------------------------------------
// Green function and kernels

GreenEstimate green_function(const Ball& ball, VertexIndex x, VertexIndex y, const McOptions& options) {
  check_trials(options);
  if (x >= ball.size() || y >= ball.size()) {
    throw UsageError("Green function arguments must lie in the ball");
  }
  const std::string params = "x=" + serialize(ball.vertex(x)) + ";y=" + serialize(ball.vertex(y));
  GreenEstimate out;
  if (ball.on_boundary(x) || ball.on_boundary(y)) {
    out.degenerate = true;
    out.record = {"green", ball.host().name(), ball.radius(), params + ";degenerate", 0.0, 0.0,
                  options.trials, options.seed};
    return out;
  }
  const auto visits = run_trials(options.trials, options.threads, [&](std::uint64_t t) {
    auto rng = trial_stream(options, "green", ball.radius(), t);
    std::uint64_t count = x == y ? 1 : 0;
    VertexIndex at = x;
    for (;;) {
      const auto nbrs = ball.neighbors(at);
      at = nbrs[rng.uniform_index(nbrs.size())];
      if (ball.on_boundary(at)) return count;
      if (at == y) ++count;
    }
  });
  RunningMoments m;
  for (auto v : visits) m.add(static_cast<double>(v));
  out.record = make_record("green", ball, params, m, options);
  return out;
}

double green_function_exact(const Ball& ball, VertexIndex x, VertexIndex y) {
  const Network net = Network::from_ball(ball);
  const std::vector<std::uint32_t> boundary(ball.boundary().begin(), ball.boundary().end());
  return KilledGreen(net, boundary).interior(x, y);
}

namespace {

double kernel_ratio(double gxy, double gxo, double goy, double c_o, double c_y, double c_x, NaimForm form,
                    GreenNormalization norm) {
  // Normalized kernel g(u, v) = G(u, v) / c_v.
  const bool scale = norm == GreenNormalization::kConductance;
  const double nxy = scale ? gxy / c_y : gxy;
  const double nxo = scale ? gxo / c_o : gxo;
  const double second = scale ? goy / (form == NaimForm::kSymmetric ? c_y : c_x) : goy;
  if (nxo == 0.0 || second == 0.0) {
    throw UsageError("Naim kernel denominator vanishes; the reference vertex is cut off");
  }
  return nxy / (nxo * second);
}

}  // namespace

NaimValue naim_kernel_exact(const KilledGreen& green, std::uint32_t o, std::uint32_t x, std::uint32_t y,
                            NaimForm form, GreenNormalization norm) {
  const Network& net = green.network();
  const auto row_x = green.row(x);
  const auto row_o = green.row(o);
  const double second = form == NaimForm::kSymmetric ? row_o[y] : row_o[x];
  NaimValue out;
  out.theta = kernel_ratio(row_x[y], row_x[o], second, net.conductance(o), net.conductance(y),
                           net.conductance(x), form, norm);
  if (row_o[y] == 0.0) {
    throw UsageError("Martin kernel denominator vanishes");
  }
  out.martin = row_x[y] / row_o[y];
  return out;
}

double boundary_naim_kernel(const Network& net, std::span<const std::uint32_t> boundary, std::uint32_t x,
                            std::uint32_t y) {
  if (x == y) {
    throw UsageError("boundary kernel needs two distinct boundary vertices");
  }
  if (std::find(boundary.begin(), boundary.end(), x) == boundary.end() ||
      std::find(boundary.begin(), boundary.end(), y) == boundary.end()) {
    throw UsageError("x and y must be boundary vertices");
  }
  std::vector<std::uint32_t> kill;
  for (auto b : boundary) {
    if (b != x) kill.push_back(b);
  }
  const KilledGreen green(net, kill);
  return naim_kernel_exact(green, x, x, y).theta;
}

EstimateRecord naim_kernel_mc(const Ball& ball, VertexIndex o, VertexIndex x, VertexIndex y,
                              const McOptions& options, NaimForm form, GreenNormalization norm) {
  McOptions part = options;
  const auto gxy = green_function(ball, x, y, part).record;
  part.seed = options.seed + 1;
  const auto gxo = green_function(ball, x, o, part).record;
  part.seed = options.seed + 2;
  const auto g2 = form == NaimForm::kSymmetric ? green_function(ball, o, y, part).record
                                               : green_function(ball, o, x, part).record;
  const double theta = kernel_ratio(gxy.estimate, gxo.estimate, g2.estimate, ball.degree(o), ball.degree(y),
                                    ball.degree(x), form, norm);
  auto rel = [](const EstimateRecord& r) { return r.estimate > 0 ? r.stderr_ / r.estimate : 0.0; };
  const double rel_err = std::sqrt(rel(gxy) * rel(gxy) + rel(gxo) * rel(gxo) + rel(g2) * rel(g2));
  return {"naim",
          ball.host().name(),
          ball.radius(),
          "o=" + serialize(ball.vertex(o)) + ";x=" + serialize(ball.vertex(x)) + ";y=" +
              serialize(ball.vertex(y)),
          theta,
          std::abs(theta) * rel_err,
          options.trials,
          options.seed};
}

double stabilization_diagnostic(std::span<const double> series) {
  if (series.empty()) return 0.0;
  const double last = series.back();
  double worst = 0.0;
  for (std::size_t t = (3 * series.size()) / 4; t < series.size(); ++t) {
    worst = std::max(worst, std::abs(series[t] - last));
  }
  return worst;
}

std::vector<NaimSeries> naim_convergence_experiment(const HostSpec& host, int n_max, std::uint64_t max_steps,
                                                    const McOptions& options, NaimForm form,
                                                    GreenNormalization norm) {
  if (!host.is_transient()) {
    throw UsageError("Naim convergence needs a transient host; " + host.name() + " is recurrent");
  }
  if (options.trials < 1 || max_steps < 1) {
    throw UsageError("need at least one sample and one step");
  }
  const Ball ball = Ball::build(host, n_max);
  const Network net = Network::from_ball(ball);
  const std::vector<std::uint32_t> boundary(ball.boundary().begin(), ball.boundary().end());
  const KilledGreen green(net, boundary);
  const VertexIndex o = 0;
  std::map<VertexIndex, std::vector<double>> rows;
  auto row = [&](VertexIndex v) -> const std::vector<double>& {
    auto it = rows.find(v);
    if (it == rows.end()) it = rows.emplace(v, green.row(v)).first;
    return it->second;
  };

  // Interior positions of a walk from the root, cut at the boundary or max_steps.
  auto trajectory = [&](RandomStream rng, bool& truncated) {
    std::vector<VertexIndex> path{o};
    while (path.size() <= max_steps) {
      const auto nbrs = ball.neighbors(path.back());
      const VertexIndex next = nbrs[rng.uniform_index(nbrs.size())];
      if (ball.on_boundary(next)) {
        truncated = true;
        break;
      }
      path.push_back(next);
    }
    return path;
  };

  std::vector<NaimSeries> out;
  for (std::uint64_t s = 0; s < options.trials; ++s) {
    const StreamSource source(derive_seed(options.seed, "naim", static_cast<std::uint64_t>(n_max), s));
    NaimSeries series;
    const auto xs = trajectory(source.stream(0), series.truncated);
    const auto ys = trajectory(source.stream(1), series.truncated);
    const std::size_t len = std::min(xs.size(), ys.size());
    for (std::size_t t = 0; t < len; ++t) {
      const auto& rx = row(xs[t]);
      const auto& ro = row(o);
      const double second = form == NaimForm::kSymmetric ? ro[ys[t]] : ro[xs[t]];
      series.theta.push_back(kernel_ratio(rx[ys[t]], rx[o], second, net.conductance(o),
                                          net.conductance(ys[t]), net.conductance(xs[t]), form, norm));
    }
    series.oscillation = stabilization_diagnostic(series.theta);
    out.push_back(std::move(series));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Equilibrium measure and interlacements

std::vector<std::pair<VertexIndex, double>> equilibrium_measure_exact(const Ball& ball,
                                                                      std::span<const VertexIndex> k) {
  std::vector<std::pair<VertexIndex, double>> out;
  for (VertexIndex x : k) {
    out.emplace_back(x, ball.degree(x) * escape_probability(ball, k, x));
  }
  return out;
}

std::vector<EstimateRecord> equilibrium_measure(const Ball& ball, std::span<const VertexIndex> k,
                                                const McOptions& options) {
  check_trials(options);
  const auto in_k = indicator(ball.size(), k);
  for (VertexIndex v : k) {
    if (ball.on_boundary(v)) throw UsageError("K must lie strictly inside the ball");
  }
  std::vector<EstimateRecord> out;
  for (VertexIndex x : k) {
    const auto escaped = run_trials(options.trials, options.threads, [&](std::uint64_t t) {
      auto rng = trial_stream(options, "equilibrium", ball.radius(), t, x);
      VertexIndex at = x;
      for (;;) {
        const auto nbrs = ball.neighbors(at);
        at = nbrs[rng.uniform_index(nbrs.size())];
        if (ball.on_boundary(at)) return 1;
        if (in_k[at]) return 0;
      }
    });
    RunningMoments m;
    for (int e : escaped) m.add(ball.degree(x) * static_cast<double>(e));
    out.push_back(make_record("equilibrium", ball, "x=" + serialize(ball.vertex(x)), m, options));
  }
  return out;
}

bool contains_subwalk(std::span<const VertexIndex> path, std::span<const VertexIndex> z) {
  if (z.empty() || z.size() > path.size()) return false;
  for (std::size_t s = 0; s + z.size() <= path.size(); ++s) {
    if (std::equal(z.begin(), z.end(), path.begin() + static_cast<std::ptrdiff_t>(s)) ||
        std::equal(z.rbegin(), z.rend(), path.begin() + static_cast<std::ptrdiff_t>(s))) {
      return true;
    }
  }
  return false;
}

void validate_cylinder(const HostSpec& host, std::span<const Vertex> z) {
  if (z.empty()) {
    throw UsageError("cylinder walk needs at least one vertex");
  }
  for (const Vertex& v : z) validate(host, v);
  for (std::size_t k = 0; k + 1 < z.size(); ++k) {
    if (!host_adjacent(host, z[k], z[k + 1])) {
      throw UsageError("cylinder walk steps between non-adjacent vertices " + serialize(z[k]) + " and " +
                       serialize(z[k + 1]));
    }
  }
}

EstimateRecord interlacement_intensity(const Ball& ball, std::span<const Vertex> z, const McOptions& options) {
  check_trials(options);
  validate_cylinder(ball.host(), z);
  std::string params = "Z=";
  for (std::size_t k = 0; k < z.size(); ++k) params += (k ? " " : "") + serialize(z[k]);

  std::vector<VertexIndex> zi;
  for (const Vertex& v : z) {
    const auto idx = ball.find(v);
    if (!idx) {
      return {"interlacement", ball.host().name(), ball.radius(), params + ";outside", 0.0, 0.0,
              options.trials, options.seed};
    }
    zi.push_back(*idx);
  }
  const auto counts = run_trials(options.trials, options.threads, [&](std::uint64_t t) {
    const StreamSource source(
        derive_seed(options.seed, "interlacement", static_cast<std::uint64_t>(ball.radius()), t));
    const auto traces = run_round(ball, ParticleScheme::kDegreeCount, source, 0, true);
    std::uint64_t hits = 0;
    for (const auto& trace : traces) hits += contains_subwalk(trace.path, zi);
    return hits;
  });
  RunningMoments m;
  for (auto c : counts) m.add(static_cast<double>(c));
  return make_record("interlacement", ball, params, m, options);
}

ReversibilityResult reversibility_check(const Ball& ball, std::span<const VertexIndex> k, VertexIndex x) {
  if (std::find(k.begin(), k.end(), x) == k.end()) {
    throw UsageError("x must belong to K");
  }
  const Network net = Network::contracted(ball);
  const auto star = static_cast<std::uint32_t>(ball.size());
  std::vector<std::uint32_t> targets = as_u32(k);
  targets.push_back(star);
  const auto pos = [&](std::uint32_t v) {
    return static_cast<std::size_t>(std::find(targets.begin(), targets.end(), v) - targets.begin());
  };
  ReversibilityResult r;
  r.lhs = net.conductance(x) * first_passage_distribution(net, x, targets)[pos(star)];
  r.rhs = net.conductance(star) * first_passage_distribution(net, star, targets)[pos(x)];
  r.residual = std::abs(r.lhs - r.rhs);
  return r;
}

// ---------------------------------------------------------------------------
// Crossing matrices

std::vector<std::vector<VertexIndex>> subtree_cells(const Ball& ball, int depth) {
  if (!ball.host().is_tree()) {
    throw UsageError("subtree cells need a tree host");
  }
  if (depth < 1 || depth > ball.radius()) {
    throw UsageError("cell depth must be in [1, n]");
  }
  std::map<std::vector<std::uint32_t>, std::vector<VertexIndex>> cells;
  for (VertexIndex b : ball.boundary()) {
    const auto& letters = std::get<TreeWord>(ball.vertex(b)).letters;
    cells[{letters.begin(), letters.begin() + depth}].push_back(b);
  }
  std::vector<std::vector<VertexIndex>> out;
  for (auto& [prefix, members] : cells) out.push_back(std::move(members));
  return out;
}

namespace {

std::vector<std::int64_t> cell_of(const Ball& ball, const std::vector<std::vector<VertexIndex>>& cells) {
  std::vector<std::int64_t> owner(ball.size(), -1);
  for (std::size_t c = 0; c < cells.size(); ++c) {
    for (VertexIndex v : cells[c]) {
      ball.boundary_position(v);
      if (owner[v] >= 0) throw UsageError("cells must be disjoint");
      owner[v] = static_cast<std::int64_t>(c);
    }
  }
  return owner;
}

}  // namespace

CrossingMatrix crossing_matrix_exact(const Ball& ball, const std::vector<std::vector<VertexIndex>>& cells) {
  cell_of(ball, cells);
  const BoundaryHarmonics harmonics(ball);
  std::vector<std::vector<double>> h;
  for (const auto& cell : cells) h.push_back(harmonics.extend(indicator(ball.size(), cell)));
  CrossingMatrix lambda(cells.size(), std::vector<double>(cells.size(), 0.0));
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = a + 1; b < cells.size(); ++b) {
      double total = 0.0;
      for (VertexIndex v : cells[a]) total += harmonics.launch_mass(v, h[b]);
      for (VertexIndex v : cells[b]) total += harmonics.launch_mass(v, h[a]);
      lambda[a][b] = lambda[b][a] = total;
    }
  }
  return lambda;
}

CrossingMatrix crossing_matrix_mc(const Ball& ball, const std::vector<std::vector<VertexIndex>>& cells,
                                  const McOptions& options) {
  check_trials(options);
  const auto owner = cell_of(ball, cells);
  const std::size_t m = cells.size();
  const auto per_trial = run_trials(options.trials, options.threads, [&](std::uint64_t t) {
    const StreamSource source(
        derive_seed(options.seed, "crossing-matrix", static_cast<std::uint64_t>(ball.radius()), t));
    std::vector<double> counts(m * m, 0.0);
    for (const auto& trace : run_round(ball, ParticleScheme::kDegreeCount, source, 0, false)) {
      const auto a = owner[trace.start];
      const auto b = owner[trace.end];
      if (a >= 0 && b >= 0 && a != b) {
        counts[static_cast<std::size_t>(a) * m + static_cast<std::size_t>(b)] += 1.0;
        counts[static_cast<std::size_t>(b) * m + static_cast<std::size_t>(a)] += 1.0;
      }
    }
    return counts;
  });
  CrossingMatrix lambda(m, std::vector<double>(m, 0.0));
  for (const auto& counts : per_trial) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) lambda[a][b] += counts[a * m + b];
    }
  }
  for (auto& row : lambda) {
    for (auto& v : row) v /= static_cast<double>(options.trials);
  }
  return lambda;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> sample_from_crossing_matrix(const CrossingMatrix& lambda,
                                                                                 RandomStream& rng) {
  const std::size_t m = lambda.size();
  for (const auto& row : lambda) {
    if (row.size() != m) throw UsageError("crossing matrix must be square");
    for (double v : row) {
      if (std::isnan(v) || v < 0.0) throw UsageError("crossing intensities must be nonnegative");
    }
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = a + 1; b < m; ++b) {
      const double p = -std::expm1(-lambda[a][b]);
      if (rng.uniform01() < p) edges.emplace_back(a, b);
    }
  }
  return edges;
}

}  // namespace gwrg
