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

// Implicit infinite host graphs. Nothing here materializes more than the
// neighborhood of a single vertex; balls are built on top of this in ball.hpp.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gwrg {

/// Downward moves from the root. For homogeneous trees the first letter picks
/// one of the root's d branches and later letters one of d-1 children.
struct TreeWord {
  std::vector<std::uint32_t> letters;
  auto operator<=>(const TreeWord&) const = default;
};

struct LatticePoint {
  std::vector<std::int64_t> coords;
  auto operator<=>(const LatticePoint&) const = default;
};

/// Lit lamps are kept sorted and duplicate-free.
struct LamplighterState {
  std::vector<std::int64_t> lamps;
  std::int64_t position = 0;
  auto operator<=>(const LamplighterState&) const = default;
};

/// Vertex of the binary tree with level cycles; `index` is the planar
/// (lexicographic) position within the level, in [0, 2^level).
struct HyperbolicVertex {
  std::uint32_t level = 0;
  std::uint64_t index = 0;
  auto operator<=>(const HyperbolicVertex&) const = default;
};

using Vertex = std::variant<TreeWord, LatticePoint, LamplighterState, HyperbolicVertex>;

enum class HostKind { kRootedTree, kHomogeneousTree, kGrid, kHyperbolicTree, kLamplighter };

class HostSpec {
 public:
  /// Rooted b-ary tree: root degree b, every other vertex degree b+1.
  static HostSpec rooted_tree(int branching);
  /// d-regular tree.
  static HostSpec homogeneous_tree(int degree);
  static HostSpec grid(int dimension);
  static HostSpec hyperbolic_tree();
  /// Lamplighter over Z with the switch-or-walk generators.
  static HostSpec lamplighter();

  /// Accepts btree<b>, tree-d<k>, z<d>, hyptree, lamplighter.
  static HostSpec parse(std::string_view name);

  HostKind kind() const { return kind_; }
  int parameter() const { return parameter_; }
  std::string name() const;
  Vertex root() const;
  int max_degree() const;
  bool is_tree() const {
    return kind_ == HostKind::kRootedTree || kind_ == HostKind::kHomogeneousTree;
  }
  /// Grids of dimension <= 2 are recurrent; everything else offered here is transient.
  bool is_transient() const { return !(kind_ == HostKind::kGrid && parameter_ <= 2); }

  bool operator==(const HostSpec&) const = default;

 private:
  HostSpec(HostKind kind, int parameter) : kind_(kind), parameter_(parameter) {}

  HostKind kind_;
  int parameter_;
};

/// Throws EncodingError unless `v` is a well-formed vertex of `host`.
void validate(const HostSpec& host, const Vertex& v);

/// All host neighbors of `v`, duplicate-free, in an order fixed by the encoding.
std::vector<Vertex> neighbors(const HostSpec& host, const Vertex& v);
void append_neighbors(const HostSpec& host, const Vertex& v, std::vector<Vertex>& out);

std::size_t degree(const HostSpec& host, const Vertex& v);

/// Graph distance to the host root.
std::uint64_t dist_to_root(const HostSpec& host, const Vertex& v);

bool host_adjacent(const HostSpec& host, const Vertex& a, const Vertex& b);

std::string serialize(const Vertex& v);
/// Inverse of serialize. Host-independent syntax check only; pair with validate().
Vertex parse_vertex(std::string_view text);

struct VertexHash {
  std::size_t operator()(const Vertex& v) const noexcept;
};

}  // namespace gwrg
