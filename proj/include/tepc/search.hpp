//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef TEPC_SEARCH_HPP_
#define TEPC_SEARCH_HPP_

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tepc/graph.hpp"
#include "tepc/labeling.hpp"

namespace tepc {

inline constexpr std::size_t kDefaultEdgeBudget = 24;
inline constexpr std::size_t kFallbackSearchMaxEdges = 22;
/// Labelings are packed into one 64-bit word.
inline constexpr std::size_t kMaxSearchEdges = 63;
/// The top min(|E|, kShardBits) edge labels are fixed per shard. The shard
/// layout never depends on the worker count.
inline constexpr unsigned kShardBits = 6;

/// Walks the labelings of a graph that agree with `fixed` on the bits at and
/// above `free_bits`, in reflected binary order over the low `free_bits`
/// bits. Bit e of the mask is the label of EdgeId e. The tally is maintained
/// incrementally: each step flips one edge and touches only its endpoints.
class GrayWalker {
public:
  GrayWalker(const Graph &g, std::uint64_t fixed, unsigned free_bits);

  /// Position in the walk, starting at 0.
  std::uint64_t step() const noexcept { return step_; }
  std::uint64_t length() const noexcept { return std::uint64_t { 1 } << free_bits_; }
  bool done() const noexcept { return step_ + 1 >= length(); }

  /// Moves to the next labeling. Returns the flipped edge.
  EdgeId advance();

  std::uint64_t mask() const noexcept { return mask_; }

  std::int64_t gap() const noexcept {
    return 2 * (v0_ + e0_) - vertices_ - edges_;
  }
  bool balanced() const noexcept {
    const std::int64_t d = gap();
    return d >= -1 && d <= 1;
  }
  Tally tally() const noexcept {
    return make_tally(e0_, edges_ - e0_, v0_, vertices_ - v0_);
  }

private:
  void flip(EdgeId e);

  std::vector<VertexId> endpoints_; // 2 per edge
  std::vector<std::uint32_t> zero_edges_; // per vertex: incident 0-edges
  std::uint64_t mask_;
  std::uint64_t step_ = 0;
  unsigned free_bits_;
  std::int64_t vertices_;
  std::int64_t edges_;
  std::int64_t e0_ = 0;
  std::int64_t v0_ = 0;
};

/// Labeling whose bits are the low |E| bits of `mask`.
EdgeLabeling labeling_from_mask(const Graph &g, std::uint64_t mask);
std::uint64_t mask_from_labeling(const EdgeLabeling &f);

/// Position of `mask` in the canonical enumeration order: shards in
/// ascending order of their fixed top bits, each walked in Gray order.
std::uint64_t canonical_rank(std::size_t edge_count, std::uint64_t mask);

struct SearchOptions {
  std::size_t edge_budget = kDefaultEdgeBudget;
  /// 0 selects the hardware concurrency.
  unsigned jobs = 1;
};

struct SearchReport {
  std::size_t edges = 0;
  std::uint64_t examined = 0;
  /// First balanced labeling in canonical order.
  std::optional<EdgeLabeling> witness;
  /// Set by count_tepc, and by find_tepc when it certifies no witness.
  std::optional<std::uint64_t> tepc_count;
  std::chrono::milliseconds elapsed { 0 };
  bool exhaustive = false;
};

/// Stops at the first witness. Throws Error(kUnsupportedSize) when |E|
/// exceeds the budget.
SearchReport find_tepc(const Graph &g, SearchOptions options = {});

/// Counts every balanced labeling among all 2^|E|.
SearchReport count_tepc(const Graph &g, SearchOptions options = {});

/// Exhaustive proof that no labeling balances. Throws Error(kWitnessFound)
/// when one does.
SearchReport certify_not_tepc(const Graph &g, SearchOptions options = {});

} // namespace tepc

#endif // TEPC_SEARCH_HPP_
