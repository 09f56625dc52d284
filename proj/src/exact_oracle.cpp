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

#include "gwrg/exact_oracle.hpp"

#include <Eigen/Dense>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <variant>

#include "gwrg/error.hpp"

namespace gwrg {

namespace {

void check_cap(const Network& net) {
  if (net.size() > kOracleVertexCap) {
    throw ResourceError("exact oracle is capped at " + std::to_string(kOracleVertexCap) +
                        " vertices; got " + std::to_string(net.size()));
  }
}

void check_vertex(const Network& net, std::uint32_t v) {
  if (v >= net.size()) {
    throw UsageError("vertex " + std::to_string(v) + " is not in the network");
  }
}

std::vector<bool> mark(std::size_t n, std::span<const std::uint32_t> vs) {
  std::vector<bool> out(n, false);
  for (auto v : vs) out.at(v) = true;
  return out;
}

// Vertices reachable from `seeds` without entering `blocked`.
std::vector<bool> reachable_avoiding(const Network& net, std::span<const std::uint32_t> seeds,
                                     const std::vector<bool>& blocked) {
  std::vector<bool> seen(net.size(), false);
  std::vector<std::uint32_t> stack;
  for (auto s : seeds) {
    if (!blocked[s] && !seen[s]) {
      seen[s] = true;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (const auto& arc : net.arcs(u)) {
      if (!blocked[arc.to] && !seen[arc.to]) {
        seen[arc.to] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace

// ---------------------------------------------------------------------------
// Network

Network Network::from_ball(const Ball& ball) {
  Network net(ball.size());
  for (VertexIndex v = 0; v < ball.size(); ++v) {
    for (VertexIndex w : ball.neighbors(v)) {
      if (v < w) net.add_edge(v, w);
    }
  }
  return net;
}

Network Network::contracted(const Ball& ball) {
  Network net(ball.size() + 1);
  for (VertexIndex v = 0; v < ball.size(); ++v) {
    for (VertexIndex w : ball.neighbors(v)) {
      if (v < w) net.add_edge(v, w);
    }
  }
  const auto star = static_cast<std::uint32_t>(ball.size());
  for (VertexIndex b : ball.boundary()) {
    const std::uint32_t outside = ball.host_degree(b) - ball.degree(b);
    if (outside > 0) net.add_edge(b, star, outside);
  }
  return net;
}

void Network::add_edge(std::uint32_t a, std::uint32_t b, double weight) {
  if (a >= size() || b >= size() || a == b || !(weight > 0)) {
    throw UsageError("bad network edge " + std::to_string(a) + " -- " + std::to_string(b));
  }
  auto bump = [&](std::uint32_t from, std::uint32_t to) {
    auto& list = arcs_[from];
    auto it = std::find_if(list.begin(), list.end(), [to](const Arc& arc) { return arc.to == to; });
    if (it == list.end()) {
      list.push_back({to, weight});
    } else {
      it->weight += weight;
    }
    conductance_[from] += weight;
  };
  bump(a, b);
  bump(b, a);
}

double Network::weight(std::uint32_t a, std::uint32_t b) const {
  for (const auto& arc : arcs_.at(a)) {
    if (arc.to == b) return arc.weight;
  }
  return 0.0;
}

void Network::dump_laplacian(std::ostream& os) const {
  for (std::uint32_t v = 0; v < size(); ++v) {
    os << v << ' ' << v << ' ' << conductance_[v] << '\n';
    for (const auto& arc : arcs_[v]) {
      os << v << ' ' << arc.to << ' ' << -arc.weight << '\n';
    }
  }
}

// ---------------------------------------------------------------------------
// DirichletSolver

struct DirichletSolver::Impl {
  using Sparse = Eigen::SparseMatrix<double>;
  using CG = Eigen::ConjugateGradient<Sparse, Eigen::Lower | Eigen::Upper,
                                      Eigen::DiagonalPreconditioner<double>>;
  Sparse matrix;
  std::variant<std::monostate, Eigen::LLT<Eigen::MatrixXd>, CG> solver;
};

DirichletSolver::DirichletSolver(const Network& net, std::vector<bool> free)
    : net_(&net), free_(std::move(free)), slot_(net.size(), 0), impl_(std::make_unique<Impl>()) {
  check_cap(net);
  if (free_.size() != net.size()) {
    throw UsageError("free-set mask has the wrong size");
  }
  for (std::uint32_t v = 0; v < net.size(); ++v) {
    if (free_[v]) {
      slot_[v] = static_cast<std::uint32_t>(free_list_.size());
      free_list_.push_back(v);
    }
  }

  // Each free component must leak to a fixed vertex, or L_FF is singular.
  std::vector<bool> done(net.size(), false);
  for (auto root : free_list_) {
    if (done[root]) continue;
    bool leaks = false;
    std::vector<std::uint32_t> stack{root};
    done[root] = true;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (const auto& arc : net.arcs(u)) {
        if (!free_[arc.to]) {
          leaks = true;
        } else if (!done[arc.to]) {
          done[arc.to] = true;
          stack.push_back(arc.to);
        }
      }
    }
    if (!leaks) {
      throw SingularSystemError("free vertex " + std::to_string(root) +
                                " cannot reach any fixed vertex");
    }
  }

  const auto nf = static_cast<Eigen::Index>(free_list_.size());
  std::vector<Eigen::Triplet<double>> triplets;
  for (auto v : free_list_) {
    triplets.emplace_back(slot_[v], slot_[v], net.conductance(v));
    for (const auto& arc : net.arcs(v)) {
      if (free_[arc.to]) triplets.emplace_back(slot_[v], slot_[arc.to], -arc.weight);
    }
  }
  impl_->matrix.resize(nf, nf);
  impl_->matrix.setFromTriplets(triplets.begin(), triplets.end());

  if (nf == 0) {
    return;
  }
  if (free_list_.size() <= kDenseSolveLimit) {
    impl_->solver.emplace<Eigen::LLT<Eigen::MatrixXd>>(Eigen::MatrixXd(impl_->matrix));
  } else {
    auto& cg = impl_->solver.emplace<Impl::CG>();
    cg.setTolerance(kSolveTolerance);
    cg.setMaxIterations(10 * nf);
    cg.compute(impl_->matrix);
  }
}

DirichletSolver::~DirichletSolver() = default;
DirichletSolver::DirichletSolver(DirichletSolver&&) noexcept = default;
DirichletSolver& DirichletSolver::operator=(DirichletSolver&&) noexcept = default;

LinearSystemSolution DirichletSolver::solve(std::span<const double> rhs) const {
  if (rhs.size() != net_->size()) {
    throw UsageError("right-hand side has the wrong size");
  }
  LinearSystemSolution out;
  out.values.assign(net_->size(), 0.0);
  const auto nf = static_cast<Eigen::Index>(free_list_.size());
  if (nf == 0) return out;

  Eigen::VectorXd b(nf);
  for (Eigen::Index k = 0; k < nf; ++k) b[k] = rhs[free_list_[static_cast<std::size_t>(k)]];
  const double bnorm = b.norm();
  if (bnorm == 0.0) return out;

  Eigen::VectorXd x;
  if (auto* llt = std::get_if<Eigen::LLT<Eigen::MatrixXd>>(&impl_->solver)) {
    x = llt->solve(b);
  } else {
    x = std::get<Impl::CG>(impl_->solver).solve(b);
  }
  out.residual = (impl_->matrix * x - b).norm() / bnorm;
  if (!std::isfinite(out.residual) || out.residual > kResidualLimit) {
    throw SingularSystemError("Dirichlet solve missed its residual target: " +
                              std::to_string(out.residual));
  }
  for (Eigen::Index k = 0; k < nf; ++k) out.values[free_list_[static_cast<std::size_t>(k)]] = x[k];
  return out;
}

// ---------------------------------------------------------------------------
// Hitting and first-passage distributions

namespace {

// Shared core: q is a distribution of the walker's position at the moment the
// clock starts ticking (concentrated on `seeds`), targets absorb.
std::vector<double> absorb(const Network& net, std::span<const std::uint32_t> targets,
                           const std::vector<std::pair<std::uint32_t, double>>& launch) {
  const auto is_target = mark(net.size(), targets);
  std::vector<double> out(targets.size(), 0.0);
  std::vector<std::uint32_t> seeds;
  for (const auto& [v, p] : launch) {
    if (!is_target[v]) seeds.push_back(v);
  }
  // Targets reached directly.
  std::vector<double> direct(net.size(), 0.0);
  for (const auto& [v, p] : launch) {
    if (is_target[v]) direct[v] += p;
  }
  if (!seeds.empty()) {
    auto free = reachable_avoiding(net, seeds, is_target);
    DirichletSolver solver(net, free);
    // L_FF is symmetric, so one solve against the launch vector gives every
    // target's probability at once.
    std::vector<double> q(net.size(), 0.0);
    for (const auto& [v, p] : launch) {
      if (!is_target[v]) q[v] += p;
    }
    const auto sol = solver.solve(q);
    for (std::uint32_t u = 0; u < net.size(); ++u) {
      if (!free[u] || sol.values[u] == 0.0) continue;
      for (const auto& arc : net.arcs(u)) {
        if (is_target[arc.to]) direct[arc.to] += sol.values[u] * arc.weight;
      }
    }
  }
  for (std::size_t k = 0; k < targets.size(); ++k) out[k] = direct[targets[k]];
  return out;
}

}  // namespace

std::vector<double> hitting_distribution(const Network& net, std::uint32_t start,
                                         std::span<const std::uint32_t> targets) {
  check_cap(net);
  check_vertex(net, start);
  if (targets.empty()) {
    throw UsageError("hitting distribution needs a nonempty target set");
  }
  return absorb(net, targets, {{start, 1.0}});
}

std::vector<double> first_passage_distribution(const Network& net, std::uint32_t start,
                                               std::span<const std::uint32_t> targets) {
  check_cap(net);
  check_vertex(net, start);
  if (targets.empty()) {
    throw UsageError("first-passage distribution needs a nonempty target set");
  }
  if (net.conductance(start) <= 0.0) {
    throw SingularSystemError("start vertex is isolated");
  }
  std::vector<std::pair<std::uint32_t, double>> launch;
  for (const auto& arc : net.arcs(start)) {
    launch.emplace_back(arc.to, arc.weight / net.conductance(start));
  }
  return absorb(net, targets, launch);
}

// ---------------------------------------------------------------------------
// Killed Green function

namespace {

std::vector<bool> complement(std::size_t n, std::span<const std::uint32_t> kill) {
  if (kill.empty()) {
    throw UsageError("killed Green function needs a nonempty kill set");
  }
  auto free = mark(n, kill);
  free.flip();
  return free;
}

}  // namespace

KilledGreen::KilledGreen(const Network& net, std::span<const std::uint32_t> kill)
    : net_(&net), solver_(net, complement(net.size(), kill)) {}

std::vector<double> KilledGreen::row(std::uint32_t x) const {
  check_vertex(*net_, x);
  std::vector<double> out(net_->size(), 0.0);
  if (killed(x)) {
    out[x] = 1.0;
    return out;
  }
  // G = (D^-1 L)^-1 = L^-1 D on the free block, so G(x, v) = L^-1(x, v) c_v;
  // the killing step adds sum_u G(x, u) P(u, k) = sum_u L^-1(x, u) w(u, k).
  std::vector<double> e(net_->size(), 0.0);
  e[x] = 1.0;
  const auto sol = solver_.solve(e);
  for (std::uint32_t v = 0; v < net_->size(); ++v) {
    if (!killed(v)) {
      out[v] = sol.values[v] * net_->conductance(v);
      for (const auto& arc : net_->arcs(v)) {
        if (killed(arc.to)) out[arc.to] += sol.values[v] * arc.weight;
      }
    }
  }
  return out;
}

double KilledGreen::interior(std::uint32_t x, std::uint32_t y) const {
  if (killed(x) || killed(y)) return 0.0;
  return (*this)(x, y);
}

std::vector<std::vector<double>> KilledGreen::matrix() const {
  std::vector<std::vector<double>> m;
  m.reserve(net_->size());
  for (std::uint32_t x = 0; x < net_->size(); ++x) m.push_back(row(x));
  return m;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<VertexIndex, double>> expected_visits_constant_boundary(const Ball& ball) {
  const Network net = Network::from_ball(ball);
  std::vector<bool> interior(ball.size(), false);
  std::vector<double> boundary_links(ball.size(), 0.0);
  for (VertexIndex v = 0; v < ball.size(); ++v) {
    if (ball.on_boundary(v)) continue;
    interior[v] = true;
    for (VertexIndex w : ball.neighbors(v)) {
      if (ball.on_boundary(w)) boundary_links[v] += 1.0;
    }
  }
  std::vector<std::pair<VertexIndex, double>> out;
  if (std::none_of(interior.begin(), interior.end(), [](bool b) { return b; })) {
    return out;
  }
  // A particle from b first steps to w; interior visits from there are
  // G_int(w, x) = L^-1(w, x) d(x). Summed over the d(b) particles of every b,
  // the launch weights collapse to r(w) = number of boundary neighbors of w.
  DirichletSolver solver(net, interior);
  const auto sol = solver.solve(boundary_links);
  for (VertexIndex v = 0; v < ball.size(); ++v) {
    if (interior[v]) out.emplace_back(v, sol.values[v] * ball.degree(v));
  }
  return out;
}

double effective_conductance(const Network& net, std::uint32_t a, std::uint32_t b) {
  check_cap(net);
  check_vertex(net, a);
  check_vertex(net, b);
  if (a == b) {
    throw UsageError("effective conductance needs two distinct vertices");
  }
  const std::vector<bool> none(net.size(), false);
  const std::uint32_t seed[] = {a};
  if (!reachable_avoiding(net, seed, none)[b]) {
    throw SingularSystemError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                              " are disconnected");
  }
  auto fixed = mark(net.size(), std::vector<std::uint32_t>{a, b});
  // Only the component holding a and b carries current.
  std::vector<std::uint32_t> around;
  for (auto e : {a, b}) {
    for (const auto& arc : net.arcs(e)) around.push_back(arc.to);
  }
  const auto free = reachable_avoiding(net, around, fixed);

  DirichletSolver solver(net, free);
  std::vector<double> rhs(net.size(), 0.0);
  for (const auto& arc : net.arcs(a)) {
    if (free[arc.to]) rhs[arc.to] += arc.weight;
  }
  auto potential = solver.solve(rhs).values;
  potential[a] = 1.0;
  potential[b] = 0.0;
  double energy = 0.0;
  for (std::uint32_t u = 0; u < net.size(); ++u) {
    if (!free[u] && !fixed[u]) continue;
    for (const auto& arc : net.arcs(u)) {
      if (arc.to > u && (free[arc.to] || fixed[arc.to])) {
        const double drop = potential[u] - potential[arc.to];
        energy += arc.weight * drop * drop;
      }
    }
  }
  return energy;
}

double escape_probability(const Network& net, std::span<const std::uint32_t> k, std::uint32_t x,
                          std::span<const std::uint32_t> absorbing) {
  if (std::find(k.begin(), k.end(), x) == k.end()) {
    throw UsageError("escape probability is defined for x in K");
  }
  std::vector<std::uint32_t> targets(k.begin(), k.end());
  targets.insert(targets.end(), absorbing.begin(), absorbing.end());
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
  const auto dist = first_passage_distribution(net, x, targets);
  const auto is_absorbing = mark(net.size(), absorbing);
  double p = 0.0;
  for (std::size_t j = 0; j < targets.size(); ++j) {
    if (is_absorbing[targets[j]]) p += dist[j];
  }
  return p;
}

double escape_probability(const Ball& ball, std::span<const VertexIndex> k, VertexIndex x) {
  for (VertexIndex v : k) {
    if (v >= ball.size() || ball.on_boundary(v)) {
      throw UsageError("K must lie strictly inside the ball");
    }
  }
  const Network net = Network::from_ball(ball);
  std::vector<std::uint32_t> boundary(ball.boundary().begin(), ball.boundary().end());
  return escape_probability(net, k, x, boundary);
}

}  // namespace gwrg
