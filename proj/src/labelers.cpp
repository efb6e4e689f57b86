//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/labelers.hpp"

#include <string>

#include "tepc/error.hpp"
#include "tepc/search.hpp"

namespace tepc {

std::string_view to_string(Family family) noexcept {
  return family == Family::kPathPath ? "pp" : "pc";
}

std::string_view to_string(CaseVariant variant) noexcept {
  switch (variant) {
  case CaseVariant::kDegenerate:
    return "degenerate";
  case CaseVariant::kFanBase:
    return "fan-base";
  case CaseVariant::kWheelBase:
    return "wheel-base";
  case CaseVariant::kEvenSpine:
    return "even-spine";
  case CaseVariant::kOddSpineEvenCopy:
    return "odd-spine-even-copy";
  case CaseVariant::kOddSpineOddCopy:
    return "odd-spine-odd-copy";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view s) noexcept {
  if (s == "pp" || s == "corona-pp")
    return Family::kPathPath;
  if (s == "pc" || s == "corona-pc")
    return Family::kPathCycle;
  return std::nullopt;
}

std::string_view to_string(TallySource source) noexcept {
  return source == TallySource::kPaperFormula ? "paper-formula"
                                              : "corrected-formula";
}

namespace {
void validate(Family family, int n, int m) {
  if (n < 1 || m < 1)
    throw Error(ErrorKind::kInvalidParameter,
                "n and m must be positive (got n=" + std::to_string(n)
                    + ", m=" + std::to_string(m) + ")");
  if (family == Family::kPathCycle && m < 3)
    throw Error(ErrorKind::kInvalidParameter,
                "cycle copies need m >= 3 (got m=" + std::to_string(m) + ")");
}
} // namespace

CaseTag case_of(Family family, int n, int m) {
  validate(family, n, m);
  CaseVariant v;
  if (n == 1) {
    if (family == Family::kPathCycle)
      v = CaseVariant::kWheelBase;
    else
      v = m == 1 ? CaseVariant::kDegenerate : CaseVariant::kFanBase;
  } else if (n % 2 == 0) {
    v = CaseVariant::kEvenSpine;
  } else {
    v = m % 2 == 0 ? CaseVariant::kOddSpineEvenCopy
                   : CaseVariant::kOddSpineOddCopy;
  }
  return { family, v };
}

PredictedTally predicted_tally(Family family, int n, int m) {
  validate(family, n, m);
  if (n < 2)
    throw Error(ErrorKind::kInvalidParameter,
                "closed-form counts need n >= 2");

  const std::int64_t nn = n, mm = m, nm = nn * mm;
  const CaseVariant variant = case_of(family, n, m).variant;

  if (family == Family::kPathPath) {
    const std::int64_t e0 = nm - 1, e1 = nm;
    switch (variant) {
    case CaseVariant::kEvenSpine:
      return { make_tally(e0, e1, (nn + nm) / 2, (nn + nm) / 2),
               TallySource::kPaperFormula, std::nullopt };
    case CaseVariant::kOddSpineEvenCopy:
      return { make_tally(e0, e1, (nm + nn + 1) / 2, (nn + nm - 1) / 2),
               TallySource::kPaperFormula, std::nullopt };
    default: {
      Tally published = make_tally(e0, e1, (nm + nn + 2) / 2,
                                   (nn + nm - 2) / 2);
      // With m = 1 the middle copy has no internal edge, so no copy vertex
      // there is forced to 0.
      if (m == 1)
        return { make_tally(e0, e1, (nn + nm) / 2, (nn + nm) / 2),
                 TallySource::kCorrectedFormula, published };
      return { published, TallySource::kPaperFormula, std::nullopt };
    }
    }
  }

  switch (variant) {
  case CaseVariant::kEvenSpine:
    return { make_tally((2 * nm + nn - 2) / 2, (2 * nm + nn) / 2,
                        (nn + nm) / 2, (nn + nm) / 2),
             TallySource::kPaperFormula, std::nullopt };
  case CaseVariant::kOddSpineEvenCopy:
    return { make_tally((2 * nm + nn - 3) / 2, (2 * nm + nn + 1) / 2,
                        (nn + nm + 1) / 2, (nn + nm - 1) / 2),
             TallySource::kPaperFormula, std::nullopt };
  default: {
    const std::int64_t e0 = (2 * nm + nn - 3) / 2, e1 = (2 * nm + nn + 1) / 2;
    return { make_tally(e0, e1, (nn + nm + 2) / 2, (nn + nm - 2) / 2),
             TallySource::kCorrectedFormula,
             make_tally(e0, e1, (nn + nm) / 2, (nn + nm) / 2) };
  }
  }
}

namespace {

// Prefix-block scheme on a single-copy layout (P_1∘P_m = F_m or
// P_1∘C_m = W_m): spokes to v_1..v_t and the copy edges among them are 0;
// odd m additionally zeroes v_t v_{t+1}. Everything else is 1.
void apply_hub_scheme(const CoronaLayout &layout, EdgeLabeling &f) {
  const int m = layout.m();
  const int t = m / 2;
  for (int j = 1; j <= t; ++j)
    f.set(layout.link_edge(1, j), 0);
  for (int j = 1; j < t; ++j)
    f.set(layout.copy_edge(1, j), 0);
  if (m % 2 == 1)
    f.set(layout.copy_edge(1, t), 0);
}

// The four piecewise edge functions for n >= 2. The spine splits after
// `low` copies; for odd n the middle copy `mid` is split inside.
void apply_piecewise(const CoronaLayout &layout, EdgeLabeling &f) {
  const int n = layout.n(), m = layout.m();
  const bool even_n = n % 2 == 0;
  const int low = even_n ? n / 2 : (n - 1) / 2;
  const int mid = even_n ? 0 : (n + 1) / 2;
  const int spine_zero = even_n ? n / 2 - 1 : (n - 1) / 2;
  const int link_split = m % 2 == 0 ? m / 2 : (m - 1) / 2;
  const int copy_split = m % 2 == 0 ? m / 2 - 1 : (m - 1) / 2;

  auto f1 = [&](int i) -> Bit { return i <= spine_zero ? 0 : 1; };
  auto f2 = [&](int i, int j) -> Bit {
    if (i <= low || (i == mid && j <= link_split))
      return 0;
    return 1;
  };
  auto f3 = [&](int i, int j) -> Bit {
    if (i <= low || (i == mid && j <= copy_split))
      return 0;
    return 1;
  };
  auto f4 = [&](int i) -> Bit { return i <= low ? 0 : 1; };

  for (int i = 1; i < n; ++i)
    f.set(layout.spine_edge(i), f1(i));
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= m; ++j)
      f.set(layout.link_edge(i, j), f2(i, j));
    for (int j = 1; j < m; ++j)
      f.set(layout.copy_edge(i, j), f3(i, j));
    if (layout.cycle_copies())
      f.set(layout.closure_edge(i), f4(i));
  }
}

LabeledCorona label_layout(Family family, int n, int m) {
  const CaseTag tag = case_of(family, n, m);
  if (tag.variant == CaseVariant::kDegenerate)
    throw Error(ErrorKind::kNotLabelable,
                "P_1∘P_1 is K_2 with degree sequence of (1,1); it admits no "
                "total edge product cordial labeling");

  Graph copy = family == Family::kPathPath ? build_path(m) : build_cycle(m);
  CoronaResult c = corona(build_path(n), copy);
  EdgeLabeling f(c.graph, Bit { 1 });
  if (n == 1)
    apply_hub_scheme(*c.layout, f);
  else
    apply_piecewise(*c.layout, f);
  return { std::move(c.graph), std::move(*c.layout), std::move(f), tag };
}

// Keeps the prefix-block labeling if it balances, otherwise falls back to an
// exhaustive search within the default budget.
LabeledGraph verified_hub(Graph hub, const EdgeLabeling &scheme) {
  EdgeLabeling f(hub, std::vector<Bit>(scheme.bits().begin(),
                                       scheme.bits().end()));
  if (is_tepc(hub, f))
    return { std::move(hub), std::move(f) };
  if (hub.edge_count() <= kFallbackSearchMaxEdges) {
    SearchReport report = find_tepc(hub);
    if (report.witness)
      return { std::move(hub), std::move(*report.witness) };
  }
  throw Error(ErrorKind::kNotLabelable,
              "no balanced labeling found for hub graph");
}

} // namespace

LabeledCorona label_corona_path_path(int n, int m) {
  return label_layout(Family::kPathPath, n, m);
}

LabeledCorona label_corona_path_cycle(int n, int m) {
  return label_layout(Family::kPathCycle, n, m);
}

LabeledCorona label_corona(Family family, int n, int m) {
  return label_layout(family, n, m);
}

LabeledGraph label_fan(int m) {
  Graph fan = build_fan(m);
  LabeledCorona c = label_corona_path_path(1, m);
  return verified_hub(std::move(fan), c.labeling);
}

LabeledGraph label_wheel(int m) {
  Graph wheel = build_wheel(m);
  LabeledCorona c = label_corona_path_cycle(1, m);
  return verified_hub(std::move(wheel), c.labeling);
}

} // namespace tepc
