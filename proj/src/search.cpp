//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <string>
#include <thread>

#include "tepc/error.hpp"

namespace tepc {

GrayWalker::GrayWalker(const Graph &g, std::uint64_t fixed, unsigned free_bits)
    : zero_edges_(g.vertex_count(), 0), free_bits_(free_bits),
      vertices_(static_cast<std::int64_t>(g.vertex_count())),
      edges_(static_cast<std::int64_t>(g.edge_count())) {
  if (g.edge_count() > kMaxSearchEdges || free_bits > g.edge_count())
    throw Error(ErrorKind::kUnsupportedSize, "walk exceeds word size");

  const std::uint64_t low = (std::uint64_t { 1 } << free_bits) - 1;
  const std::uint64_t all = (std::uint64_t { 1 } << g.edge_count()) - 1;
  mask_ = fixed & ~low & all;

  endpoints_.reserve(2 * g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    endpoints_.push_back(g.edge(e).u);
    endpoints_.push_back(g.edge(e).v);
    if (((mask_ >> e) & 1) == 0) {
      ++e0_;
      ++zero_edges_[g.edge(e).u];
      ++zero_edges_[g.edge(e).v];
    }
  }
  v0_ = std::count_if(zero_edges_.begin(), zero_edges_.end(),
                      [](std::uint32_t c) { return c > 0; });
}

void GrayWalker::flip(EdgeId e) {
  const bool to_zero = ((mask_ >> e) & 1) == 1;
  mask_ ^= std::uint64_t { 1 } << e;
  const VertexId a = endpoints_[2 * e], b = endpoints_[2 * e + 1];
  if (to_zero) {
    ++e0_;
    if (zero_edges_[a]++ == 0)
      ++v0_;
    if (zero_edges_[b]++ == 0)
      ++v0_;
  } else {
    --e0_;
    if (--zero_edges_[a] == 0)
      --v0_;
    if (--zero_edges_[b] == 0)
      --v0_;
  }
}

EdgeId GrayWalker::advance() {
  ++step_;
  const auto e = static_cast<EdgeId>(std::countr_zero(step_));
  flip(e);
  return e;
}

EdgeLabeling labeling_from_mask(const Graph &g, std::uint64_t mask) {
  std::vector<Bit> bits(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    bits[e] = static_cast<Bit>((mask >> e) & 1);
  return EdgeLabeling(g, std::move(bits));
}

std::uint64_t mask_from_labeling(const EdgeLabeling &f) {
  if (f.size() > kMaxSearchEdges)
    throw Error(ErrorKind::kUnsupportedSize, "labeling exceeds word size");
  std::uint64_t mask = 0;
  for (EdgeId e = 0; e < f.size(); ++e)
    mask |= std::uint64_t { f[e] } << e;
  return mask;
}

namespace {
unsigned shard_bits_for(std::size_t edge_count) {
  return static_cast<unsigned>(
      std::min<std::size_t>(edge_count, kShardBits));
}
} // namespace

std::uint64_t canonical_rank(std::size_t edge_count, std::uint64_t mask) {
  const unsigned free_bits =
      static_cast<unsigned>(edge_count) - shard_bits_for(edge_count);
  const std::uint64_t shard = mask >> free_bits;
  std::uint64_t gray = mask & ((std::uint64_t { 1 } << free_bits) - 1);
  std::uint64_t step = 0;
  for (; gray != 0; gray >>= 1)
    step ^= gray;
  return (shard << free_bits) | step;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

struct ShardResult {
  std::uint64_t first_step = kNone;
  std::uint64_t first_mask = 0;
  std::uint64_t count = 0;
};

enum class Mode { kFind, kCount };

ShardResult walk_shard(const Graph &g, std::uint64_t shard, unsigned free_bits,
                       Mode mode) {
  GrayWalker walker(g, shard << free_bits, free_bits);
  ShardResult r;
  for (;;) {
    if (walker.balanced()) {
      if (r.first_step == kNone) {
        r.first_step = walker.step();
        r.first_mask = walker.mask();
        if (mode == Mode::kFind)
          return r;
      }
      ++r.count;
    }
    if (walker.done())
      return r;
    walker.advance();
  }
}

void check_budget(const Graph &g, const SearchOptions &options) {
  const std::size_t limit = std::min(options.edge_budget, kMaxSearchEdges);
  if (g.edge_count() > limit)
    throw Error(ErrorKind::kUnsupportedSize,
                "graph has " + std::to_string(g.edge_count())
                    + " edges; exhaustive search budget is "
                    + std::to_string(limit));
}

SearchReport run(const Graph &g, const SearchOptions &options, Mode mode) {
  check_budget(g, options);
  const auto start = std::chrono::steady_clock::now();

  const unsigned shard_bits = shard_bits_for(g.edge_count());
  const unsigned free_bits = static_cast<unsigned>(g.edge_count()) - shard_bits;
  const std::uint64_t shards = std::uint64_t { 1 } << shard_bits;

  std::vector<ShardResult> results(shards);
  std::atomic<std::uint64_t> next { 0 };
  std::atomic<std::uint64_t> best { kNone }; // lowest shard with a witness

  auto worker = [&] {
    for (;;) {
      const std::uint64_t s = next.fetch_add(1);
      if (s >= shards)
        return;
      // Shards above a known witness cannot hold the first one.
      if (mode == Mode::kFind && s > best.load())
        continue;
      results[s] = walk_shard(g, s, free_bits, mode);
      if (mode == Mode::kFind && results[s].first_step != kNone) {
        std::uint64_t cur = best.load();
        while (s < cur && !best.compare_exchange_weak(cur, s)) { }
      }
    }
  };

  unsigned jobs = options.jobs == 0 ? std::thread::hardware_concurrency()
                                    : options.jobs;
  jobs = static_cast<unsigned>(
      std::clamp<std::uint64_t>(jobs == 0 ? 1 : jobs, 1, shards));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < jobs; ++k)
      pool.emplace_back(worker);
  }

  SearchReport report;
  report.edges = g.edge_count();
  const std::uint64_t total = std::uint64_t { 1 } << g.edge_count();
  const std::uint64_t shard_len = std::uint64_t { 1 } << free_bits;

  auto first = std::find_if(results.begin(), results.end(),
                            [](const ShardResult &r) {
                              return r.first_step != kNone;
                            });
  if (first != results.end())
    report.witness = labeling_from_mask(g, first->first_mask);

  if (mode == Mode::kCount) {
    std::uint64_t count = 0;
    for (const ShardResult &r: results)
      count += r.count;
    report.tepc_count = count;
    report.examined = total;
    report.exhaustive = true;
  } else if (first != results.end()) {
    const auto s = static_cast<std::uint64_t>(first - results.begin());
    report.examined = s * shard_len + first->first_step + 1;
    report.exhaustive = false;
  } else {
    report.examined = total;
    report.tepc_count = 0;
    report.exhaustive = true;
  }

  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

} // namespace

SearchReport find_tepc(const Graph &g, SearchOptions options) {
  return run(g, options, Mode::kFind);
}

SearchReport count_tepc(const Graph &g, SearchOptions options) {
  return run(g, options, Mode::kCount);
}

SearchReport certify_not_tepc(const Graph &g, SearchOptions options) {
  SearchReport report = find_tepc(g, options);
  if (report.witness)
    throw Error(ErrorKind::kWitnessFound,
                "graph admits a balanced labeling; non-existence claim is "
                "false");
  return report;
}

} // namespace tepc
