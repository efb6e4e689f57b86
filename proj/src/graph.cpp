//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <string>

#include "tepc/error.hpp"

namespace tepc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::kInvalidParameter:
    return "invalid-parameter";
  case ErrorKind::kUnsupportedSize:
    return "unsupported-size";
  case ErrorKind::kBindingMismatch:
    return "binding-mismatch";
  case ErrorKind::kNotLabelable:
    return "not-labelable";
  case ErrorKind::kWitnessFound:
    return "witness-found";
  case ErrorKind::kMalformedInput:
    return "malformed-input";
  }
  return "unknown";
}

std::string to_string(const Role &role) {
  switch (role.kind) {
  case Role::Kind::kPlain:
    return "plain";
  case Role::Kind::kSpine:
    return "spine(" + std::to_string(role.i) + ")";
  case Role::Kind::kCopy:
    return "copy(" + std::to_string(role.i) + "," + std::to_string(role.j)
           + ")";
  case Role::Kind::kCenter:
    return "center";
  case Role::Kind::kRim:
    return "rim(" + std::to_string(role.j) + ")";
  }
  return "plain";
}

namespace {
// Parses "name(a)" or "name(a,b)" argument lists into up to two integers.
bool parse_args(std::string_view body, int *out, int expected) {
  int got = 0;
  while (got < expected) {
    const char *first = body.data(), *last = body.data() + body.size();
    auto [ptr, ec] = std::from_chars(first, last, out[got]);
    if (ec != std::errc() || ptr == first)
      return false;
    ++got;
    body.remove_prefix(static_cast<std::size_t>(ptr - first));
    if (got < expected) {
      if (body.empty() || body.front() != ',')
        return false;
      body.remove_prefix(1);
    }
  }
  return body.empty();
}
} // namespace

std::optional<Role> parse_role(std::string_view tag) {
  if (tag == "plain")
    return Role::plain();
  if (tag == "center")
    return Role::center();

  auto open = tag.find('(');
  if (open == std::string_view::npos || tag.back() != ')')
    return std::nullopt;
  std::string_view name = tag.substr(0, open);
  std::string_view body = tag.substr(open + 1, tag.size() - open - 2);

  int args[2] = { 0, 0 };
  if (name == "spine" && parse_args(body, args, 1))
    return Role::spine(args[0]);
  if (name == "rim" && parse_args(body, args, 1))
    return Role::rim(args[0]);
  if (name == "copy" && parse_args(body, args, 2))
    return Role::copy(args[0], args[1]);
  return std::nullopt;
}

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges,
             std::vector<Role> roles)
    : vertex_count_(vertex_count), edges_(std::move(edges)),
      roles_(std::move(roles)) {
  if (!roles_.empty() && roles_.size() != vertex_count_)
    throw Error(ErrorKind::kInvalidParameter,
                "role table size does not match vertex count");

  for (Edge &e: edges_) {
    if (e.u == e.v)
      throw Error(ErrorKind::kInvalidParameter,
                  "self-loop at vertex " + std::to_string(e.u));
    if (e.u >= vertex_count_ || e.v >= vertex_count_)
      throw Error(ErrorKind::kInvalidParameter,
                  "edge endpoint out of range");
    if (e.u > e.v)
      std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw Error(ErrorKind::kInvalidParameter, "parallel edge");

  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge &e: edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(2 * edges_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    incidence_[cursor[edges_[id].u]++] = id;
    incidence_[cursor[edges_[id].v]++] = id;
  }

  // FNV-1a over (vertex_count, u0, v0, u1, v1, ...)
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int b = 0; b < 8; ++b) {
      h ^= (x >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  mix(vertex_count_);
  for (const Edge &e: edges_) {
    mix(e.u);
    mix(e.v);
  }
  fingerprint_ = h;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  if (a > b)
    std::swap(a, b);
  if (b >= vertex_count_)
    return std::nullopt;
  Edge key { a, b };
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key)
    return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

namespace {
void require(bool ok, const std::string &msg) {
  if (!ok)
    throw Error(ErrorKind::kInvalidParameter, msg);
}

EdgeId must_find(const Graph &g, VertexId a, VertexId b) {
  auto e = g.find_edge(a, b);
  require(e.has_value(), "graph does not match corona layout");
  return *e;
}
} // namespace

CoronaLayout::CoronaLayout(const Graph &graph, int n, int m, bool cycle_copies)
    : n_(n), m_(m), cycle_copies_(cycle_copies) {
  require(n >= 1 && m >= 1 && (!cycle_copies || m >= 3),
          "invalid corona layout parameters");
  require(graph.vertex_count()
              == static_cast<std::size_t>(n) * static_cast<std::size_t>(1 + m),
          "graph does not match corona layout");

  for (int i = 1; i < n; ++i)
    spine_edges_.push_back(must_find(graph, spine_vertex(i),
                                     spine_vertex(i + 1)));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j)
      link_edges_.push_back(must_find(graph, spine_vertex(i),
                                      copy_vertex(i, j)));
    for (int j = 1; j < m; ++j)
      copy_edges_.push_back(must_find(graph, copy_vertex(i, j),
                                      copy_vertex(i, j + 1)));
    if (cycle_copies)
      closure_edges_.push_back(must_find(graph, copy_vertex(i, 1),
                                         copy_vertex(i, m)));
  }

  std::size_t expected = spine_edges_.size() + link_edges_.size()
                         + copy_edges_.size() + closure_edges_.size();
  require(graph.edge_count() == expected,
          "graph does not match corona layout");
}

VertexId CoronaLayout::spine_vertex(int i) const {
  require(1 <= i && i <= n_, "spine index out of range");
  return static_cast<VertexId>(i - 1);
}

VertexId CoronaLayout::copy_vertex(int i, int j) const {
  require(1 <= i && i <= n_ && 1 <= j && j <= m_,
          "copy index out of range");
  return static_cast<VertexId>(n_ + (i - 1) * m_ + (j - 1));
}

EdgeId CoronaLayout::spine_edge(int i) const {
  require(1 <= i && i < n_, "spine edge index out of range");
  return spine_edges_[i - 1];
}

EdgeId CoronaLayout::link_edge(int i, int j) const {
  require(1 <= i && i <= n_ && 1 <= j && j <= m_,
          "link edge index out of range");
  return link_edges_[(i - 1) * m_ + (j - 1)];
}

EdgeId CoronaLayout::copy_edge(int i, int j) const {
  require(1 <= i && i <= n_ && 1 <= j && j < m_,
          "copy edge index out of range");
  return copy_edges_[(i - 1) * (m_ - 1) + (j - 1)];
}

EdgeId CoronaLayout::closure_edge(int i) const {
  require(cycle_copies_, "closure edges exist only for cycle copies");
  require(1 <= i && i <= n_, "closure edge index out of range");
  return closure_edges_[i - 1];
}

Graph build_path(int n) {
  require(n >= 1, "path needs at least one vertex");
  std::vector<Edge> edges;
  for (int k = 0; k + 1 < n; ++k)
    edges.push_back({ static_cast<VertexId>(k), static_cast<VertexId>(k + 1) });
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph build_cycle(int m) {
  require(m >= 3, "cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int k = 0; k < m; ++k)
    edges.push_back({ static_cast<VertexId>(k),
                      static_cast<VertexId>((k + 1) % m) });
  return Graph(static_cast<std::size_t>(m), std::move(edges));
}

namespace {
Graph hub_graph(int m, bool closed) {
  std::vector<Edge> edges;
  std::vector<Role> roles { Role::center() };
  for (int j = 1; j <= m; ++j) {
    roles.push_back(Role::rim(j));
    edges.push_back({ 0, static_cast<VertexId>(j) });
    if (j < m)
      edges.push_back({ static_cast<VertexId>(j),
                        static_cast<VertexId>(j + 1) });
  }
  if (closed)
    edges.push_back({ 1, static_cast<VertexId>(m) });
  return Graph(static_cast<std::size_t>(m + 1), std::move(edges),
               std::move(roles));
}
} // namespace

Graph build_fan(int m) {
  require(m >= 2, "fan needs m >= 2");
  return hub_graph(m, false);
}

Graph build_wheel(int m) {
  require(m >= 3, "wheel needs m >= 3");
  return hub_graph(m, true);
}

Graph build_complete(int n) {
  require(n >= 1, "complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      edges.push_back({ static_cast<VertexId>(a), static_cast<VertexId>(b) });
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

Graph build_paw() {
  return Graph(4, { { 0, 1 }, { 0, 2 }, { 1, 2 }, { 0, 3 } });
}

bool is_canonical_path(const Graph &g) {
  if (g.vertex_count() == 0 || g.edge_count() + 1 != g.vertex_count())
    return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (g.edge(e) != Edge { e, e + 1 })
      return false;
  return true;
}

bool is_canonical_cycle(const Graph &g) {
  std::size_t m = g.vertex_count();
  if (m < 3 || g.edge_count() != m)
    return false;
  for (VertexId k = 0; k + 1 < m; ++k)
    if (!g.find_edge(k, k + 1))
      return false;
  return g.find_edge(0, static_cast<VertexId>(m - 1)).has_value();
}

CoronaResult corona(const Graph &g, const Graph &h) {
  require(g.vertex_count() >= 1, "corona needs a non-empty base graph");

  const std::size_t gn = g.vertex_count(), hn = h.vertex_count();
  const std::size_t total = gn * (1 + hn);
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::vector<Role> roles(total);
  for (std::size_t i = 0; i < gn; ++i) {
    roles[i] = Role::spine(static_cast<int>(i + 1));
    const std::size_t base = gn + i * hn;
    for (std::size_t j = 0; j < hn; ++j) {
      roles[base + j] = Role::copy(static_cast<int>(i + 1),
                                   static_cast<int>(j + 1));
      edges.push_back({ static_cast<VertexId>(i),
                        static_cast<VertexId>(base + j) });
    }
    for (const Edge &e: h.edges())
      edges.push_back({ static_cast<VertexId>(base + e.u),
                        static_cast<VertexId>(base + e.v) });
  }

  CoronaResult result { Graph(total, std::move(edges), std::move(roles)),
                        std::nullopt };
  if (is_canonical_path(g)) {
    const int n = static_cast<int>(gn), m = static_cast<int>(hn);
    if (is_canonical_path(h))
      result.layout.emplace(result.graph, n, m, false);
    else if (is_canonical_cycle(h))
      result.layout.emplace(result.graph, n, m, true);
  }
  return result;
}

std::vector<std::size_t> degree_sequence(const Graph &g) {
  std::vector<std::size_t> seq(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    seq[v] = g.degree(v);
  std::sort(seq.begin(), seq.end(), std::greater<>());
  return seq;
}

namespace {
class IsoSearch {
public:
  IsoSearch(const Graph &g, const Graph &h)
      : g_(g), h_(h), n_(g.vertex_count()), map_(n_), used_(n_, false) {
    adj_g_.assign(n_ * n_, false);
    adj_h_.assign(n_ * n_, false);
    for (const Edge &e: g.edges())
      adj_g_[e.u * n_ + e.v] = adj_g_[e.v * n_ + e.u] = true;
    for (const Edge &e: h.edges())
      adj_h_[e.u * n_ + e.v] = adj_h_[e.v * n_ + e.u] = true;
  }

  bool run() { return extend(0); }

private:
  // Assigns g-vertex `k` and checks adjacency against every earlier
  // assignment; a full assignment is then an edge-preserving bijection.
  bool extend(std::size_t k) {
    if (k == n_)
      return true;
    for (std::size_t t = 0; t < n_; ++t) {
      if (used_[t] || g_.degree(static_cast<VertexId>(k))
                          != h_.degree(static_cast<VertexId>(t)))
        continue;
      bool ok = true;
      for (std::size_t p = 0; p < k && ok; ++p)
        ok = adj_g_[k * n_ + p] == adj_h_[t * n_ + map_[p]];
      if (!ok)
        continue;
      used_[t] = true;
      map_[k] = t;
      if (extend(k + 1))
        return true;
      used_[t] = false;
    }
    return false;
  }

  const Graph &g_;
  const Graph &h_;
  std::size_t n_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<bool> adj_g_;
  std::vector<bool> adj_h_;
};
} // namespace

bool isomorphic_small(const Graph &g, const Graph &h) {
  if (g.vertex_count() > kIsomorphismMaxVertices
      || h.vertex_count() > kIsomorphismMaxVertices)
    throw Error(ErrorKind::kUnsupportedSize,
                "isomorphism test supports at most 10 vertices");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count()
      || degree_sequence(g) != degree_sequence(h))
    return false;
  return IsoSearch(g, h).run();
}

} // namespace tepc
