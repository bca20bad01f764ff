// Copyright 2026 The evclab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <fstream>
#include <map>
#include <queue>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace evclab {

using Vertex = int;

// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool has(Vertex x) const { return x == u || x == v; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public GraphError {
 public:
  ParseError(int line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Simple undirected graph on dense ids 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adjacency_(check_order(n)) { default_labels(); }

  Graph(int n, std::span<const Edge> edges) : adjacency_(check_order(n)) {
    edges_.assign(edges.begin(), edges.end());
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u < 0 || e.v >= n) {
        throw GraphError("edge " + to_string(e) + " has an endpoint outside 0.." +
                         std::to_string(n - 1));
      }
      if (e.u == e.v) throw GraphError("self-loop on vertex " + std::to_string(e.u));
      if (i > 0 && edges_[i - 1] == e) throw GraphError("duplicate edge " + to_string(e));
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
    default_labels();
  }

  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Graph(int n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  bool contains(Vertex v) const { return v >= 0 && v < order(); }

  // Sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }

  bool has_edge(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b) || a == b) return false;
    const auto& nbrs = adjacency_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }
  bool has_edge(const Edge& e) const { return has_edge(e.u, e.v); }

  // Position of e in edges(), or -1.
  int edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  // Symbol table: display name of each dense id. Defaults to the decimal id.
  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != order()) {
      throw GraphError("label table size does not match vertex count");
    }
    labels_ = std::move(labels);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  static std::size_t check_order(int n) {
    if (n < 0) throw GraphError("negative vertex count");
    return static_cast<std::size_t>(n);
  }
  void default_labels() {
    labels_.resize(adjacency_.size());
    for (std::size_t v = 0; v < labels_.size(); ++v) labels_[v] = std::to_string(v);
  }

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_int(std::string_view token, long long& out) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace detail

// Edge-list document: first non-comment line is n, then one "u v" per line.
// '#' starts a comment; blank lines are ignored.
inline Graph parse_graph(std::string_view text) {
  long long n = -1;
  std::vector<Edge> edges;
  std::map<Edge, int> first_seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto tokens = detail::split_ws(line);
    if (n < 0) {
      if (tokens.size() != 1 || !detail::parse_int(tokens[0], n) || n < 0) {
        throw ParseError(line_no, "expected a non-negative vertex count");
      }
      continue;
    }
    long long a = 0, b = 0;
    if (tokens.size() != 2 || !detail::parse_int(tokens[0], a) ||
        !detail::parse_int(tokens[1], b)) {
      throw ParseError(line_no, "malformed edge line '" + std::string(line) + "'");
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (a == b) throw ParseError(line_no, "self-loop on vertex " + std::to_string(a));
    const Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    auto [it, inserted] = first_seen.emplace(e, line_no);
    if (!inserted) {
      throw ParseError(line_no, "duplicate edge " + to_string(e) + " (first seen at line " +
                                    std::to_string(it->second) + ")");
    }
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  return Graph(static_cast<int>(n), edges);
}

inline Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

inline std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

inline std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(g.order(), 0);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

inline std::vector<Vertex> degree_one_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

inline bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<char> in(g.order(), 0);
  for (Vertex v : cover) in.at(v) = 1;
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> original id
};

// Subgraph on the sorted, de-duplicated vertex set s; labels are inherited.
inline InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  std::vector<Vertex> keep(s.begin(), s.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Vertex> index(g.order(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!g.contains(keep[i])) {
      throw std::out_of_range("unknown vertex id " + std::to_string(keep[i]));
    }
    index[keep[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.emplace_back(index[e.u], index[e.v]);
  }
  InducedSubgraph out{Graph(static_cast<int>(keep.size()), edges), keep};
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (Vertex v : keep) labels.push_back(g.label(v));
  out.graph.set_labels(std::move(labels));
  return out;
}

inline InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> drop) {
  std::vector<char> gone(g.order(), 0);
  for (Vertex v : drop) gone.at(v) = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges(a.edges());
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph(a.order() + b.order(), edges);
}

enum class Side : std::uint8_t { A = 0, B = 1 };

inline Side opposite(Side s) { return s == Side::A ? Side::B : Side::A; }

// Graph together with a certified two-part partition.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;
  BipartiteGraph(Graph g, std::vector<Side> sides) : graph_(std::move(g)), sides_(std::move(sides)) {
    if (static_cast<int>(sides_.size()) != graph_.order()) {
      throw GraphError("side table size does not match vertex count");
    }
    for (const Edge& e : graph_.edges()) {
      if (sides_[e.u] == sides_[e.v]) {
        throw GraphError("edge " + to_string(e) + " lies inside one part");
      }
    }
    for (Vertex v = 0; v < graph_.order(); ++v) {
      (sides_[v] == Side::A ? part_a_ : part_b_).push_back(v);
    }
  }

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }
  int size() const { return graph_.size(); }
  Side side(Vertex v) const { return sides_.at(v); }
  bool in_a(Vertex v) const { return side(v) == Side::A; }
  const std::vector<Side>& sides() const { return sides_; }
  const std::vector<Vertex>& part_a() const { return part_a_; }
  const std::vector<Vertex>& part_b() const { return part_b_; }

 private:
  Graph graph_;
  std::vector<Side> sides_;
  std::vector<Vertex> part_a_;
  std::vector<Vertex> part_b_;
};

// Closed walk with an odd number of edges; front() == back().
struct OddWalk {
  std::vector<Vertex> walk;
  int length() const { return static_cast<int>(walk.size()) - 1; }
};

class NotBipartite : public GraphError {
 public:
  explicit NotBipartite(OddWalk w) : GraphError(describe(w)), witness_(std::move(w)) {}
  const OddWalk& witness() const { return witness_; }

 private:
  static std::string describe(const OddWalk& w) {
    std::string s = "graph is not bipartite; odd closed walk ";
    for (std::size_t i = 0; i < w.walk.size(); ++i) {
      if (i) s += '-';
      s += std::to_string(w.walk[i]);
    }
    return s;
  }
  OddWalk witness_;
};

// BFS 2-colouring. The lowest id of every component lands in part A.
inline std::variant<BipartiteGraph, OddWalk> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(n, -1), parent(n, -1), depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g.neighbors(x)) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          parent[y] = x;
          depth[y] = depth[x] + 1;
          queue.push(y);
        } else if (colour[y] == colour[x]) {
          // Tree paths from x and y meet at their lowest common ancestor.
          std::vector<Vertex> left{x}, right{y};
          Vertex a = x, b = y;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          // left: x..lca, right: y..lca
          OddWalk w;
          w.walk.assign(left.rbegin(), left.rend());
          right.pop_back();
          w.walk.insert(w.walk.end(), right.begin(), right.end());
          w.walk.push_back(w.walk.front());
          return w;
        }
      }
    }
  }
  std::vector<Side> sides(n);
  for (Vertex v = 0; v < n; ++v) sides[v] = colour[v] == 0 ? Side::A : Side::B;
  return BipartiteGraph(g, std::move(sides));
}

inline BipartiteGraph make_bipartite(const Graph& g) {
  auto result = bipartition(g);
  if (auto* walk = std::get_if<OddWalk>(&result)) throw NotBipartite(std::move(*walk));
  return std::get<BipartiteGraph>(std::move(result));
}

struct InducedBipartite {
  BipartiteGraph graph;
  std::vector<Vertex> original;
};

// Induced subgraph that keeps the parent's sides.
inline InducedBipartite induced_subgraph(const BipartiteGraph& g, std::span<const Vertex> s) {
  InducedSubgraph sub = induced_subgraph(g.graph(), s);
  std::vector<Side> sides;
  sides.reserve(sub.original.size());
  for (Vertex v : sub.original) sides.push_back(g.side(v));
  return {BipartiteGraph(std::move(sub.graph), std::move(sides)), std::move(sub.original)};
}

}  // namespace evclab
