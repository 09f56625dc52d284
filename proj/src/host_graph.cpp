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

#include "gwrg/host_graph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "gwrg/error.hpp"

namespace gwrg {

namespace {

constexpr std::uint32_t kMaxHyperbolicLevel = 60;
constexpr std::size_t kMaxLamplighterCache = 5'000'000;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed + 0x9e3779b97f4a7c15ull + value);
}

template <typename T>
const T& expect(const Vertex& v, const char* what) {
  if (const T* p = std::get_if<T>(&v)) {
    return *p;
  }
  throw EncodingError(std::string("vertex payload is not a ") + what + ": " + serialize(v));
}

// Breadth-first distances on the lamplighter graph, grown lazily and shared by
// all callers.
class LamplighterDistances {
 public:
  static LamplighterDistances& instance() {
    static LamplighterDistances cache;
    return cache;
  }

  std::uint64_t distance(const LamplighterState& s) {
    std::lock_guard lock(mu_);
    const Vertex key = s;
    for (;;) {
      if (auto it = dist_.find(key); it != dist_.end()) {
        return it->second;
      }
      grow();
    }
  }

 private:
  LamplighterDistances() {
    Vertex root = LamplighterState{};
    dist_.emplace(root, 0);
    frontier_.push_back(std::move(root));
  }

  void grow() {
    const HostSpec host = HostSpec::lamplighter();
    std::vector<Vertex> next;
    std::vector<Vertex> nbrs;
    for (const Vertex& v : frontier_) {
      nbrs.clear();
      append_neighbors(host, v, nbrs);
      for (Vertex& w : nbrs) {
        if (dist_.emplace(w, radius_ + 1).second) {
          next.push_back(std::move(w));
        }
      }
    }
    if (dist_.size() > kMaxLamplighterCache) {
      throw ResourceError("lamplighter distance cache exceeded its state limit");
    }
    frontier_ = std::move(next);
    ++radius_;
  }

  std::mutex mu_;
  std::unordered_map<Vertex, std::uint64_t, VertexHash> dist_;
  std::vector<Vertex> frontier_;
  std::uint64_t radius_ = 0;
};

template <typename Int>
Int parse_int(std::string_view text) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw EncodingError("bad integer '" + std::string(text) + "'");
  }
  return value;
}

template <typename Int>
std::vector<Int> parse_int_list(std::string_view text, char sep) {
  std::vector<Int> out;
  if (text.empty()) {
    return out;
  }
  std::size_t begin = 0;
  for (;;) {
    const std::size_t end = text.find(sep, begin);
    out.push_back(parse_int<Int>(text.substr(begin, end - begin)));
    if (end == std::string_view::npos) {
      return out;
    }
    begin = end + 1;
  }
}

std::string_view strip_prefix(std::string_view text, std::string_view prefix) {
  if (text.substr(0, prefix.size()) != prefix) {
    throw EncodingError("expected '" + std::string(prefix) + "' in '" + std::string(text) + "'");
  }
  return text.substr(prefix.size());
}

}  // namespace

HostSpec HostSpec::rooted_tree(int branching) {
  if (branching < 2) {
    throw UsageError("rooted tree needs branching >= 2");
  }
  return {HostKind::kRootedTree, branching};
}

HostSpec HostSpec::homogeneous_tree(int degree) {
  if (degree < 3) {
    throw UsageError("homogeneous tree needs degree >= 3");
  }
  return {HostKind::kHomogeneousTree, degree};
}

HostSpec HostSpec::grid(int dimension) {
  if (dimension < 1) {
    throw UsageError("grid needs dimension >= 1");
  }
  return {HostKind::kGrid, dimension};
}

HostSpec HostSpec::hyperbolic_tree() { return {HostKind::kHyperbolicTree, 2}; }

HostSpec HostSpec::lamplighter() { return {HostKind::kLamplighter, 1}; }

HostSpec HostSpec::parse(std::string_view name) {
  auto number_after = [&](std::string_view prefix) {
    const std::string_view rest = name.substr(prefix.size());
    int value = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
    if (rest.empty() || ec != std::errc() || ptr != rest.data() + rest.size()) {
      throw UsageError("unknown host '" + std::string(name) + "'");
    }
    return value;
  };
  if (name == "hyptree") {
    return hyperbolic_tree();
  }
  if (name == "lamplighter") {
    return lamplighter();
  }
  if (name.starts_with("tree-d")) {
    return homogeneous_tree(number_after("tree-d"));
  }
  if (name.starts_with("btree")) {
    return rooted_tree(number_after("btree"));
  }
  if (name.starts_with("z")) {
    return grid(number_after("z"));
  }
  throw UsageError("unknown host '" + std::string(name) + "'");
}

std::string HostSpec::name() const {
  switch (kind_) {
    case HostKind::kRootedTree:
      return "btree" + std::to_string(parameter_);
    case HostKind::kHomogeneousTree:
      return "tree-d" + std::to_string(parameter_);
    case HostKind::kGrid:
      return "z" + std::to_string(parameter_);
    case HostKind::kHyperbolicTree:
      return "hyptree";
    case HostKind::kLamplighter:
      return "lamplighter";
  }
  return "?";
}

Vertex HostSpec::root() const {
  switch (kind_) {
    case HostKind::kRootedTree:
    case HostKind::kHomogeneousTree:
      return TreeWord{};
    case HostKind::kGrid:
      return LatticePoint{std::vector<std::int64_t>(static_cast<std::size_t>(parameter_), 0)};
    case HostKind::kHyperbolicTree:
      return HyperbolicVertex{};
    case HostKind::kLamplighter:
      return LamplighterState{};
  }
  return TreeWord{};
}

int HostSpec::max_degree() const {
  switch (kind_) {
    case HostKind::kRootedTree:
      return parameter_ + 1;
    case HostKind::kHomogeneousTree:
      return parameter_;
    case HostKind::kGrid:
      return 2 * parameter_;
    case HostKind::kHyperbolicTree:
      return 5;
    case HostKind::kLamplighter:
      return 3;
  }
  return 0;
}

void validate(const HostSpec& host, const Vertex& v) {
  switch (host.kind()) {
    case HostKind::kRootedTree: {
      const auto& w = expect<TreeWord>(v, "tree word");
      for (auto letter : w.letters) {
        if (letter >= static_cast<std::uint32_t>(host.parameter())) {
          throw EncodingError("tree letter out of range: " + serialize(v));
        }
      }
      return;
    }
    case HostKind::kHomogeneousTree: {
      const auto& w = expect<TreeWord>(v, "tree word");
      for (std::size_t k = 0; k < w.letters.size(); ++k) {
        const auto limit = static_cast<std::uint32_t>(host.parameter() - (k == 0 ? 0 : 1));
        if (w.letters[k] >= limit) {
          throw EncodingError("tree letter out of range: " + serialize(v));
        }
      }
      return;
    }
    case HostKind::kGrid: {
      const auto& p = expect<LatticePoint>(v, "lattice point");
      if (p.coords.size() != static_cast<std::size_t>(host.parameter())) {
        throw EncodingError("lattice point has wrong dimension: " + serialize(v));
      }
      return;
    }
    case HostKind::kHyperbolicTree: {
      const auto& h = expect<HyperbolicVertex>(v, "hyperbolic vertex");
      if (h.level > kMaxHyperbolicLevel || h.index >= (std::uint64_t{1} << h.level)) {
        throw EncodingError("hyperbolic vertex out of range: " + serialize(v));
      }
      return;
    }
    case HostKind::kLamplighter: {
      const auto& s = expect<LamplighterState>(v, "lamplighter state");
      if (std::adjacent_find(s.lamps.begin(), s.lamps.end(),
                             [](auto a, auto b) { return a >= b; }) != s.lamps.end()) {
        throw EncodingError("lamps must be sorted and distinct: " + serialize(v));
      }
      return;
    }
  }
}

void append_neighbors(const HostSpec& host, const Vertex& v, std::vector<Vertex>& out) {
  validate(host, v);
  switch (host.kind()) {
    case HostKind::kRootedTree:
    case HostKind::kHomogeneousTree: {
      const auto& w = std::get<TreeWord>(v);
      if (!w.letters.empty()) {
        TreeWord parent = w;
        parent.letters.pop_back();
        out.emplace_back(std::move(parent));
      }
      std::uint32_t children = static_cast<std::uint32_t>(host.parameter());
      if (host.kind() == HostKind::kHomogeneousTree && !w.letters.empty()) {
        --children;
      }
      for (std::uint32_t c = 0; c < children; ++c) {
        TreeWord child = w;
        child.letters.push_back(c);
        out.emplace_back(std::move(child));
      }
      return;
    }
    case HostKind::kGrid: {
      const auto& p = std::get<LatticePoint>(v);
      for (std::size_t axis = 0; axis < p.coords.size(); ++axis) {
        for (std::int64_t step : {1, -1}) {
          LatticePoint q = p;
          q.coords[axis] += step;
          out.emplace_back(std::move(q));
        }
      }
      return;
    }
    case HostKind::kHyperbolicTree: {
      const auto& h = std::get<HyperbolicVertex>(v);
      if (h.level > 0) {
        out.emplace_back(HyperbolicVertex{h.level - 1, h.index / 2});
      }
      out.emplace_back(HyperbolicVertex{h.level + 1, 2 * h.index});
      out.emplace_back(HyperbolicVertex{h.level + 1, 2 * h.index + 1});
      if (h.level == 1) {
        out.emplace_back(HyperbolicVertex{1, 1 - h.index});
      } else if (h.level >= 2) {
        const std::uint64_t width = std::uint64_t{1} << h.level;
        out.emplace_back(HyperbolicVertex{h.level, (h.index + width - 1) % width});
        out.emplace_back(HyperbolicVertex{h.level, (h.index + 1) % width});
      }
      return;
    }
    case HostKind::kLamplighter: {
      const auto& s = std::get<LamplighterState>(v);
      out.emplace_back(LamplighterState{s.lamps, s.position - 1});
      out.emplace_back(LamplighterState{s.lamps, s.position + 1});
      LamplighterState toggled = s;
      auto it = std::lower_bound(toggled.lamps.begin(), toggled.lamps.end(), s.position);
      if (it != toggled.lamps.end() && *it == s.position) {
        toggled.lamps.erase(it);
      } else {
        toggled.lamps.insert(it, s.position);
      }
      out.emplace_back(std::move(toggled));
      return;
    }
  }
}

std::vector<Vertex> neighbors(const HostSpec& host, const Vertex& v) {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(host.max_degree()));
  append_neighbors(host, v, out);
  return out;
}

std::size_t degree(const HostSpec& host, const Vertex& v) { return neighbors(host, v).size(); }

std::uint64_t dist_to_root(const HostSpec& host, const Vertex& v) {
  validate(host, v);
  switch (host.kind()) {
    case HostKind::kRootedTree:
    case HostKind::kHomogeneousTree:
      return std::get<TreeWord>(v).letters.size();
    case HostKind::kGrid: {
      std::uint64_t total = 0;
      for (auto c : std::get<LatticePoint>(v).coords) {
        total += static_cast<std::uint64_t>(c < 0 ? -c : c);
      }
      return total;
    }
    case HostKind::kHyperbolicTree:
      return std::get<HyperbolicVertex>(v).level;
    case HostKind::kLamplighter:
      return LamplighterDistances::instance().distance(std::get<LamplighterState>(v));
  }
  return 0;
}

bool host_adjacent(const HostSpec& host, const Vertex& a, const Vertex& b) {
  const auto nbrs = neighbors(host, a);
  return std::find(nbrs.begin(), nbrs.end(), b) != nbrs.end();
}

std::string serialize(const Vertex& v) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TreeWord>) {
          os << "T:";
          for (std::size_t k = 0; k < x.letters.size(); ++k) {
            os << (k ? "." : "") << x.letters[k];
          }
        } else if constexpr (std::is_same_v<T, LatticePoint>) {
          os << "Z:(";
          for (std::size_t k = 0; k < x.coords.size(); ++k) {
            os << (k ? "," : "") << x.coords[k];
          }
          os << ")";
        } else if constexpr (std::is_same_v<T, LamplighterState>) {
          os << "L:p=" << x.position << ";lamps=";
          for (std::size_t k = 0; k < x.lamps.size(); ++k) {
            os << (k ? "," : "") << x.lamps[k];
          }
        } else {
          os << "H:lvl=" << x.level << ";idx=" << x.index;
        }
      },
      v);
  return os.str();
}

Vertex parse_vertex(std::string_view text) {
  if (text.starts_with("T:")) {
    return TreeWord{parse_int_list<std::uint32_t>(text.substr(2), '.')};
  }
  if (text.starts_with("Z:")) {
    std::string_view body = strip_prefix(text.substr(2), "(");
    if (body.empty() || body.back() != ')') {
      throw EncodingError("unterminated lattice point '" + std::string(text) + "'");
    }
    body.remove_suffix(1);
    auto coords = parse_int_list<std::int64_t>(body, ',');
    if (coords.empty()) {
      throw EncodingError("empty lattice point");
    }
    return LatticePoint{std::move(coords)};
  }
  if (text.starts_with("L:")) {
    std::string_view body = strip_prefix(text.substr(2), "p=");
    const std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) {
      throw EncodingError("missing lamps in '" + std::string(text) + "'");
    }
    LamplighterState s;
    s.position = parse_int<std::int64_t>(body.substr(0, semi));
    s.lamps = parse_int_list<std::int64_t>(strip_prefix(body.substr(semi + 1), "lamps="), ',');
    return s;
  }
  if (text.starts_with("H:")) {
    std::string_view body = strip_prefix(text.substr(2), "lvl=");
    const std::size_t semi = body.find(';');
    if (semi == std::string_view::npos) {
      throw EncodingError("missing index in '" + std::string(text) + "'");
    }
    HyperbolicVertex h;
    h.level = parse_int<std::uint32_t>(body.substr(0, semi));
    h.index = parse_int<std::uint64_t>(strip_prefix(body.substr(semi + 1), "idx="));
    return h;
  }
  throw EncodingError("unrecognized vertex '" + std::string(text) + "'");
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
  std::uint64_t h = mix64(v.index() + 1);
  std::visit(
      [&h](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, TreeWord>) {
          h = hash_combine(h, x.letters.size());
          for (auto l : x.letters) h = hash_combine(h, l);
        } else if constexpr (std::is_same_v<T, LatticePoint>) {
          for (auto c : x.coords) h = hash_combine(h, static_cast<std::uint64_t>(c));
        } else if constexpr (std::is_same_v<T, LamplighterState>) {
          h = hash_combine(h, static_cast<std::uint64_t>(x.position));
          h = hash_combine(h, x.lamps.size());
          for (auto l : x.lamps) h = hash_combine(h, static_cast<std::uint64_t>(l));
        } else {
          h = hash_combine(h, x.level);
          h = hash_combine(h, x.index);
        }
      },
      v);
  return static_cast<std::size_t>(h);
}

}  // namespace gwrg
