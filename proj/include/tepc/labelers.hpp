//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef TEPC_LABELERS_HPP_
#define TEPC_LABELERS_HPP_

#include <optional>
#include <string_view>

#include "tepc/graph.hpp"
#include "tepc/labeling.hpp"

namespace tepc {

/// PP is P_n∘P_m, PC is P_n∘C_m.
enum class Family { kPathPath, kPathCycle };

enum class CaseVariant {
  kDegenerate,       // P_1∘P_1
  kFanBase,          // P_1∘P_m, m >= 2
  kWheelBase,        // P_1∘C_m
  kEvenSpine,        // n even
  kOddSpineEvenCopy, // n >= 3 odd, m even
  kOddSpineOddCopy,  // n >= 3 odd, m odd
};

struct CaseTag {
  Family family;
  CaseVariant variant;

  friend bool operator==(const CaseTag &, const CaseTag &) = default;
};

std::string_view to_string(Family family) noexcept;
std::string_view to_string(CaseVariant variant) noexcept;
std::optional<Family> parse_family(std::string_view s) noexcept;

/// Case dispatch on (family, n, m). Returns kDegenerate for (PP, 1, 1) rather
/// than throwing; throws Error(kInvalidParameter) when n < 1, m < 1, or
/// m < 3 for PC.
CaseTag case_of(Family family, int n, int m);

enum class TallySource { kPaperFormula, kCorrectedFormula };

std::string_view to_string(TallySource source) noexcept;

struct PredictedTally {
  Tally tally;
  TallySource source;
  /// For corrected formulas: the counts as originally published, which the
  /// labeling does not achieve.
  std::optional<Tally> published;
};

/// Closed-form counts for the constructive labeling. Requires n >= 2 (and
/// m >= 3 for PC); throws Error(kInvalidParameter) otherwise.
PredictedTally predicted_tally(Family family, int n, int m);

struct LabeledCorona {
  Graph graph;
  CoronaLayout layout;
  EdgeLabeling labeling;
  CaseTag tag;
};

/// Piecewise labeling of P_n∘P_m. n = 1 uses the fan scheme. Throws
/// Error(kNotLabelable) for n = m = 1 and Error(kInvalidParameter) for
/// non-positive parameters.
LabeledCorona label_corona_path_path(int n, int m);

/// Piecewise labeling of P_n∘C_m. n = 1 uses the wheel scheme. Throws
/// Error(kInvalidParameter) for n < 1 or m < 3.
LabeledCorona label_corona_path_cycle(int n, int m);

/// Dispatches to the two functions above.
LabeledCorona label_corona(Family family, int n, int m);

struct LabeledGraph {
  Graph graph;
  EdgeLabeling labeling;
};

/// Prefix-block labeling of the fan F_m (m >= 2) on build_fan(m).
LabeledGraph label_fan(int m);

/// Prefix-block labeling of the wheel W_m (m >= 3) on build_wheel(m).
LabeledGraph label_wheel(int m);

} // namespace tepc

#endif // TEPC_LABELERS_HPP_
