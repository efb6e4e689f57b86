//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef TEPC_GRAPH_HPP_
#define TEPC_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tepc {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Undirected edge stored with the smaller endpoint first.
struct Edge {
  VertexId u;
  VertexId v;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

struct Role {
  enum class Kind { kPlain, kSpine, kCopy, kCenter, kRim };

  Kind kind = Kind::kPlain;
  // 1-based indices; `i` is the spine/copy index, `j` the position in a
  // copy or on the rim.
  int i = 0;
  int j = 0;

  static Role plain() { return {}; }
  static Role spine(int i) { return { Kind::kSpine, i, 0 }; }
  static Role copy(int i, int j) { return { Kind::kCopy, i, j }; }
  static Role center() { return { Kind::kCenter, 0, 0 }; }
  static Role rim(int j) { return { Kind::kRim, 0, j }; }

  friend bool operator==(const Role &, const Role &) = default;
};

/// Tag strings: "spine(i)", "copy(i,j)", "center", "rim(j)", "plain".
std::string to_string(const Role &role);
std::optional<Role> parse_role(std::string_view tag);

/// Immutable undirected simple graph on dense vertex ids [0, vertex_count).
///
/// Edges are canonicalized on construction (smaller id first, sorted
/// lexicographically); the position of an edge in `edges()` is its EdgeId and
/// is the bit position used by labelings and by the search oracle.
class Graph {
public:
  Graph() = default;

  /// Throws Error(kInvalidParameter) on self-loops, parallel edges or
  /// out-of-range endpoints. `roles` must be empty or have one entry per
  /// vertex.
  Graph(std::size_t vertex_count, std::vector<Edge> edges,
        std::vector<Role> roles = {});

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge &edge(EdgeId e) const { return edges_[e]; }

  bool has_roles() const noexcept { return !roles_.empty(); }
  std::span<const Role> roles() const noexcept { return roles_; }

  /// Edge ids incident to `v`, ascending.
  std::span<const EdgeId> incident_edges(VertexId v) const {
    return { incidence_.data() + offsets_[v],
             incidence_.data() + offsets_[v + 1] };
  }

  std::size_t degree(VertexId v) const {
    return offsets_[v + 1] - offsets_[v];
  }

  /// Edge id of {a, b}, if present.
  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;

  /// Hash of the vertex count and canonical edge list; labelings carry it to
  /// detect being applied to the wrong graph.
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  /// Same vertices and edges. Roles are annotations and do not participate.
  friend bool operator==(const Graph &a, const Graph &b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<Role> roles_;
  std::vector<std::size_t> offsets_ = { 0 };
  std::vector<EdgeId> incidence_;
  std::uint64_t fingerprint_ = 0;
};

/// Index map of P_n∘P_m or P_n∘C_m. All indices are 1-based as in the usual
/// u_i / v_j^i notation.
class CoronaLayout {
public:
  CoronaLayout(const Graph &graph, int n, int m, bool cycle_copies);

  int n() const noexcept { return n_; }
  int m() const noexcept { return m_; }
  bool cycle_copies() const noexcept { return cycle_copies_; }

  VertexId spine_vertex(int i) const;
  VertexId copy_vertex(int i, int j) const;

  /// u_i u_{i+1}, 1 <= i <= n-1.
  EdgeId spine_edge(int i) const;
  /// u_i v_j^i.
  EdgeId link_edge(int i, int j) const;
  /// v_j^i v_{j+1}^i, 1 <= j <= m-1.
  EdgeId copy_edge(int i, int j) const;
  /// v_1^i v_m^i; cycle copies only.
  EdgeId closure_edge(int i) const;

private:
  int n_;
  int m_;
  bool cycle_copies_;
  std::vector<EdgeId> spine_edges_;
  std::vector<EdgeId> link_edges_;
  std::vector<EdgeId> copy_edges_;
  std::vector<EdgeId> closure_edges_;
};

Graph build_path(int n);
Graph build_cycle(int m);
/// Center is vertex 0, path vertices v_1..v_m are 1..m.
Graph build_fan(int m);
/// Center is vertex 0, rim vertices v_1..v_m are 1..m.
Graph build_wheel(int m);
Graph build_complete(int n);
/// Triangle {0,1,2} with pendant vertex 3 attached to 0.
Graph build_paw();

/// Path/cycle detection used by `corona` to decide whether a layout applies.
bool is_canonical_path(const Graph &g);
bool is_canonical_cycle(const Graph &g);

struct CoronaResult {
  Graph graph;
  std::optional<CoronaLayout> layout;
};

/// G∘H. Vertices of `g` come first, then copy i of `h` occupies the block
/// |V(g)| + (i-1)|V(h)| .. in vertex order. A layout is produced when `g` is
/// build_path(n) and `h` is build_path(m) or build_cycle(m).
CoronaResult corona(const Graph &g, const Graph &h);

/// Degrees sorted non-increasing.
std::vector<std::size_t> degree_sequence(const Graph &g);

/// Exact isomorphism test by permutation search. Throws
/// Error(kUnsupportedSize) above 10 vertices.
bool isomorphic_small(const Graph &g, const Graph &h);

inline constexpr std::size_t kIsomorphismMaxVertices = 10;

} // namespace tepc

#endif // TEPC_GRAPH_HPP_
