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

#pragma once

// Exact electrical-network computations on small finite graphs. Everything
// reduces to Dirichlet problems L_FF x = b, where L = D - W is the weighted
// graph Laplacian restricted to the free (harmonic) vertices F. That block is
// symmetric positive definite whenever every free component touches a fixed
// vertex, which is checked up front.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "gwrg/ball.hpp"

namespace gwrg {

inline constexpr std::size_t kDenseSolveLimit = 2000;
inline constexpr std::size_t kOracleVertexCap = 20000;
inline constexpr double kSolveTolerance = 1e-10;
inline constexpr double kResidualLimit = 1e-9;

/// Undirected multigraph with positive edge weights (integer multiplicities
/// in practice). Loops are not stored.
class Network {
 public:
  struct Arc {
    std::uint32_t to;
    double weight;
  };

  explicit Network(std::size_t n) : arcs_(n), conductance_(n, 0.0) {}

  /// Unit conductance on every ball edge.
  static Network from_ball(const Ball& ball);
  /// G*_n: the ball plus one extra vertex (index ball.size()) standing for the
  /// contracted complement, joined to each boundary vertex by as many parallel
  /// edges as that vertex has host neighbors outside the ball.
  static Network contracted(const Ball& ball);

  /// Adds weight to the edge {a, b}; parallel additions accumulate.
  void add_edge(std::uint32_t a, std::uint32_t b, double weight = 1.0);

  std::size_t size() const { return arcs_.size(); }
  double conductance(std::uint32_t v) const { return conductance_[v]; }
  std::span<const Arc> arcs(std::uint32_t v) const { return arcs_[v]; }
  double weight(std::uint32_t a, std::uint32_t b) const;

  /// Laplacian in "row col value" triplets, one per line.
  void dump_laplacian(std::ostream& os) const;

 private:
  std::vector<std::vector<Arc>> arcs_;
  std::vector<double> conductance_;
};

struct LinearSystemSolution {
  std::vector<double> values;  ///< indexed by network vertex; zero off the free set
  double residual = 0;         ///< ||L_FF x - b|| / ||b||
};

/// Factorizes L_FF once and answers any number of right-hand sides.
class DirichletSolver {
 public:
  DirichletSolver(const Network& net, std::vector<bool> free);
  ~DirichletSolver();
  DirichletSolver(DirichletSolver&&) noexcept;
  DirichletSolver& operator=(DirichletSolver&&) noexcept;

  bool is_free(std::uint32_t v) const { return free_[v]; }
  std::size_t free_count() const { return free_list_.size(); }

  /// `rhs` is indexed by network vertex; entries off the free set are ignored.
  LinearSystemSolution solve(std::span<const double> rhs) const;

 private:
  struct Impl;
  const Network* net_;
  std::vector<bool> free_;
  std::vector<std::uint32_t> free_list_;
  std::vector<std::uint32_t> slot_;
  std::unique_ptr<Impl> impl_;
};

/// P_start[walk hits `targets` first at each target], aligned with `targets`.
/// A start inside the target set is a point mass.
std::vector<double> hitting_distribution(const Network& net, std::uint32_t start,
                                         std::span<const std::uint32_t> targets);

/// Like hitting_distribution but the clock starts at 1: the walk takes at
/// least one step before it can stop, so a start inside `targets` is allowed
/// to return to itself or reach another target.
std::vector<double> first_passage_distribution(const Network& net, std::uint32_t start,
                                               std::span<const std::uint32_t> targets);

/// Green function of the walk killed on `kill`: G(x, y) is the expected number
/// of visits to y from x up to and including the killing step, i.e. the
/// entries of (I - P_kill)^-1 with the kill rows of P zeroed. A walk started
/// in the kill set is killed at time 0 (row = unit vector).
class KilledGreen {
 public:
  KilledGreen(const Network& net, std::span<const std::uint32_t> kill);

  bool killed(std::uint32_t v) const { return !solver_.is_free(v); }
  /// Full row G(x, .).
  std::vector<double> row(std::uint32_t x) const;
  double operator()(std::uint32_t x, std::uint32_t y) const { return row(x)[y]; }
  /// Convention that drops every visit to the kill set: zero unless x and y are both free.
  double interior(std::uint32_t x, std::uint32_t y) const;
  /// Dense matrix of all rows; intended for small fixtures.
  std::vector<std::vector<double>> matrix() const;
  const Network& network() const { return *net_; }

 private:
  const Network* net_;
  DirichletSolver solver_;
};

/// Expected visits to each interior vertex when every boundary vertex b of the
/// ball emits d(b) particles stopped at their first return to the boundary.
/// Pairs of (interior vertex, expectation) in index order.
std::vector<std::pair<VertexIndex, double>> expected_visits_constant_boundary(const Ball& ball);

/// Effective conductance between a and b: the energy of the unit potential drop.
double effective_conductance(const Network& net, std::uint32_t a, std::uint32_t b);

/// Probability that the walk from x (in K) reaches `absorbing` before coming back to K.
double escape_probability(const Network& net, std::span<const std::uint32_t> k, std::uint32_t x,
                          std::span<const std::uint32_t> absorbing);

/// Escape from K to the ball boundary. K must avoid the boundary.
double escape_probability(const Ball& ball, std::span<const VertexIndex> k, VertexIndex x);

}  // namespace gwrg
