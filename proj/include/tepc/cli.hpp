//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef TEPC_CLI_HPP_
#define TEPC_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tepc/io.hpp"
#include "tepc/labelers.hpp"
#include "tepc/labeling.hpp"

namespace tepc {

/// Process exit codes of the `tepc` tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitNotTepc = 1,
  kExitUsage = 2,
  kExitDegenerate = 3,
};

struct IntRange {
  int first;
  int last;
};

/// "a..b" or "a". Throws Error(kInvalidParameter) on anything else or when
/// a > b.
IntRange parse_range(const std::string &text);

struct SweepRow {
  enum class Verdict { kPass, kFail, kExcluded };

  Family family;
  int n;
  int m;
  CaseTag tag;
  std::optional<Tally> computed;
  std::optional<PredictedTally> predicted;
  Verdict verdict;
  std::optional<bool> oracle_confirmed;
};

std::string_view to_string(SweepRow::Verdict verdict) noexcept;

/// Pass iff |gap| <= 1 and the tally matches the closed form where one
/// applies. P_1∘P_1 is reported as excluded. The oracle runs on instances
/// with at most `oracle_max_edges` edges; a failed confirmation fails the row.
std::vector<SweepRow> sweep(Family family, IntRange n_range, IntRange m_range,
                            std::size_t oracle_max_edges);

Json sweep_row_to_json(const SweepRow &row);

/// Entry point behind the `tepc` binary; `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace tepc

#endif // TEPC_CLI_HPP_
