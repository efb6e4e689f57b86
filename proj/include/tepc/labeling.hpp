//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef TEPC_LABELING_HPP_
#define TEPC_LABELING_HPP_

#include <cstdint>
#include <ostream>
#include <span>
#include <vector>

#include "tepc/graph.hpp"

namespace tepc {

using Bit = std::uint8_t;

/// A {0,1} label for every edge of one graph, indexed by EdgeId.
class EdgeLabeling {
public:
  /// All edges labeled `fill`.
  explicit EdgeLabeling(const Graph &g, Bit fill = 1);

  /// Throws Error(kBindingMismatch) if `bits` does not have one entry per edge
  /// and Error(kInvalidParameter) if an entry is not 0 or 1.
  EdgeLabeling(const Graph &g, std::vector<Bit> bits);

  std::size_t size() const noexcept { return bits_.size(); }
  Bit operator[](EdgeId e) const { return bits_[e]; }
  void set(EdgeId e, Bit b);

  std::span<const Bit> bits() const noexcept { return bits_; }
  std::uint64_t graph_fingerprint() const noexcept { return fingerprint_; }

  bool binds(const Graph &g) const noexcept {
    return g.fingerprint() == fingerprint_ && g.edge_count() == bits_.size();
  }

  friend bool operator==(const EdgeLabeling &, const EdgeLabeling &) = default;

private:
  std::uint64_t fingerprint_;
  std::vector<Bit> bits_;
};

/// Vertex labels induced by an edge labeling; only obtainable from
/// induced_vertex_labels.
class VertexLabeling {
public:
  std::size_t size() const noexcept { return bits_.size(); }
  Bit operator[](VertexId v) const { return bits_[v]; }
  std::span<const Bit> bits() const noexcept { return bits_; }

private:
  friend VertexLabeling induced_vertex_labels(const Graph &,
                                              const EdgeLabeling &);
  std::vector<Bit> bits_;
};

struct Tally {
  std::int64_t e0 = 0;
  std::int64_t e1 = 0;
  std::int64_t v0 = 0;
  std::int64_t v1 = 0;
  /// (v0 + e0) - (v1 + e1)
  std::int64_t gap = 0;

  bool balanced() const noexcept { return gap >= -1 && gap <= 1; }

  friend bool operator==(const Tally &, const Tally &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const Tally &t) {
  return os << "{e0=" << t.e0 << " e1=" << t.e1 << " v0=" << t.v0
            << " v1=" << t.v1 << " gap=" << t.gap << "}";
}

/// Builds a Tally from the four counts, deriving the gap.
Tally make_tally(std::int64_t e0, std::int64_t e1, std::int64_t v0,
                 std::int64_t v1);

/// f(v) = product of the labels on edges incident to v; isolated vertices get
/// the empty product 1. Throws Error(kBindingMismatch) if `f` was made for a
/// different graph.
VertexLabeling induced_vertex_labels(const Graph &g, const EdgeLabeling &f);

Tally tally(const Graph &g, const EdgeLabeling &f);

/// |gap| <= 1.
bool is_tepc(const Graph &g, const EdgeLabeling &f);

} // namespace tepc

#endif // TEPC_LABELING_HPP_
