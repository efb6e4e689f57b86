//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/labeling.hpp"

#include <algorithm>
#include <string>

#include "tepc/error.hpp"

namespace tepc {

EdgeLabeling::EdgeLabeling(const Graph &g, Bit fill)
    : fingerprint_(g.fingerprint()), bits_(g.edge_count(), fill) {
  if (fill > 1)
    throw Error(ErrorKind::kInvalidParameter, "edge label must be 0 or 1");
}

EdgeLabeling::EdgeLabeling(const Graph &g, std::vector<Bit> bits)
    : fingerprint_(g.fingerprint()), bits_(std::move(bits)) {
  if (bits_.size() != g.edge_count())
    throw Error(ErrorKind::kBindingMismatch,
                "labeling has " + std::to_string(bits_.size())
                    + " labels but graph has "
                    + std::to_string(g.edge_count()) + " edges");
  if (std::any_of(bits_.begin(), bits_.end(), [](Bit b) { return b > 1; }))
    throw Error(ErrorKind::kInvalidParameter, "edge label must be 0 or 1");
}

void EdgeLabeling::set(EdgeId e, Bit b) {
  if (b > 1)
    throw Error(ErrorKind::kInvalidParameter, "edge label must be 0 or 1");
  bits_.at(e) = b;
}

Tally make_tally(std::int64_t e0, std::int64_t e1, std::int64_t v0,
                 std::int64_t v1) {
  return { e0, e1, v0, v1, (v0 + e0) - (v1 + e1) };
}

namespace {
void check_binding(const Graph &g, const EdgeLabeling &f) {
  if (!f.binds(g))
    throw Error(ErrorKind::kBindingMismatch,
                "edge labeling is bound to a different graph");
}
} // namespace

VertexLabeling induced_vertex_labels(const Graph &g, const EdgeLabeling &f) {
  check_binding(g, f);
  VertexLabeling out;
  out.bits_.assign(g.vertex_count(), 1);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (f[e] == 0) {
      out.bits_[g.edge(e).u] = 0;
      out.bits_[g.edge(e).v] = 0;
    }
  }
  return out;
}

Tally tally(const Graph &g, const EdgeLabeling &f) {
  VertexLabeling vl = induced_vertex_labels(g, f);
  const auto e1 = std::count(f.bits().begin(), f.bits().end(), Bit { 1 });
  const auto v1 = std::count(vl.bits().begin(), vl.bits().end(), Bit { 1 });
  return make_tally(static_cast<std::int64_t>(g.edge_count()) - e1, e1,
                    static_cast<std::int64_t>(g.vertex_count()) - v1, v1);
}

bool is_tepc(const Graph &g, const EdgeLabeling &f) {
  return tally(g, f).balanced();
}

} // namespace tepc
