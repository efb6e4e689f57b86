//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "tepc/error.hpp"
#include "tepc/search.hpp"

namespace tepc {

namespace {
int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::kInvalidParameter,
                "not an integer: \"" + std::string(s) + "\"");
  return value;
}
} // namespace

IntRange parse_range(const std::string &text) {
  IntRange r;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    r = { parse_int(std::string_view(text).substr(0, dots)),
          parse_int(std::string_view(text).substr(dots + 2)) };
  } else {
    r.first = r.last = parse_int(text);
  }
  if (r.first > r.last)
    throw Error(ErrorKind::kInvalidParameter, "empty range " + text);
  return r;
}

std::string_view to_string(SweepRow::Verdict verdict) noexcept {
  switch (verdict) {
  case SweepRow::Verdict::kPass:
    return "pass";
  case SweepRow::Verdict::kFail:
    return "fail";
  case SweepRow::Verdict::kExcluded:
    return "excluded";
  }
  return "fail";
}

std::vector<SweepRow> sweep(Family family, IntRange n_range, IntRange m_range,
                            std::size_t oracle_max_edges) {
  const int m_min = family == Family::kPathCycle ? 3 : 1;
  if (n_range.first < 1 || m_range.first < m_min)
    throw Error(ErrorKind::kInvalidParameter,
                "sweep range below family minimum (n >= 1, m >= "
                    + std::to_string(m_min) + ")");

  std::vector<SweepRow> rows;
  for (int n = n_range.first; n <= n_range.last; ++n) {
    for (int m = m_range.first; m <= m_range.last; ++m) {
      SweepRow row { family,       n,
                     m,            case_of(family, n, m),
                     std::nullopt, std::nullopt,
                     SweepRow::Verdict::kExcluded, std::nullopt };
      if (row.tag.variant == CaseVariant::kDegenerate) {
        rows.push_back(row);
        continue;
      }

      LabeledCorona lc = label_corona(family, n, m);
      row.computed = tally(lc.graph, lc.labeling);
      bool pass = row.computed->balanced();
      if (n >= 2) {
        row.predicted = predicted_tally(family, n, m);
        pass = pass && row.predicted->tally == *row.computed;
      }
      if (lc.graph.edge_count() <= oracle_max_edges) {
        row.oracle_confirmed = find_tepc(lc.graph, { oracle_max_edges, 1 })
                                   .witness.has_value();
        pass = pass && *row.oracle_confirmed;
      }
      row.verdict = pass ? SweepRow::Verdict::kPass : SweepRow::Verdict::kFail;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

Json sweep_row_to_json(const SweepRow &row) {
  Json out { { "family", to_string(row.family) },
             { "n", row.n },
             { "m", row.m },
             { "case", to_string(row.tag.variant) },
             { "tally", nullptr },
             { "predicted", nullptr },
             { "gap", nullptr },
             { "verdict", to_string(row.verdict) },
             { "oracle_confirmed", nullptr } };
  if (row.computed) {
    out["tally"] = verdict_to_json(*row.computed);
    out["gap"] = row.computed->gap;
  }
  if (row.predicted)
    out["predicted"] = predicted_to_json(*row.predicted);
  if (row.oracle_confirmed)
    out["oracle_confirmed"] = *row.oracle_confirmed;
  return out;
}

namespace {

struct GenArgs {
  std::string family;
  int n = 0;
  int m = 0;
  std::string output;
};

Graph generate(const GenArgs &a) {
  const std::string &f = a.family;
  if (f == "path")
    return build_path(a.n);
  if (f == "cycle")
    return build_cycle(a.m);
  if (f == "fan")
    return build_fan(a.m);
  if (f == "wheel")
    return build_wheel(a.m);
  if (f == "complete")
    return build_complete(a.n);
  if (f == "k2")
    return build_complete(2);
  if (f == "c4")
    return build_cycle(4);
  if (f == "paw")
    return build_paw();
  if (f == "corona-pp" || f == "corona-pc") {
    if (a.n < 1 || a.m < 1)
      throw Error(ErrorKind::kInvalidParameter,
                  "corona needs n >= 1 and m >= 1");
    const Graph copy = f == "corona-pp" ? build_path(a.m) : build_cycle(a.m);
    return corona(build_path(a.n), copy).graph;
  }
  throw Error(ErrorKind::kInvalidParameter, "unknown family \"" + f + "\"");
}

void print_tally_table(std::ostream &out, const Tally &t) {
  out << "e0 " << t.e0 << "  e1 " << t.e1 << "  v0 " << t.v0 << "  v1 "
      << t.v1 << "  gap " << t.gap << "  tepc "
      << (t.balanced() ? "yes" : "no") << '\n';
}

void print_sweep_table(std::ostream &out, const std::vector<SweepRow> &rows) {
  auto col = [&out](auto value, int width) {
    out << std::setw(width) << value;
  };
  col("fam", 4);
  col("n", 4);
  col("m", 4);
  col("case", 21);
  col("e0", 6);
  col("e1", 6);
  col("v0", 6);
  col("v1", 6);
  col("gap", 5);
  col("predicted", 19);
  col("oracle", 8);
  col("verdict", 22);
  out << '\n';
  for (const SweepRow &r: rows) {
    col(to_string(r.family), 4);
    col(r.n, 4);
    col(r.m, 4);
    col(to_string(r.tag.variant), 21);
    if (r.computed) {
      col(r.computed->e0, 6);
      col(r.computed->e1, 6);
      col(r.computed->v0, 6);
      col(r.computed->v1, 6);
      col(r.computed->gap, 5);
    } else {
      for (int k = 0; k < 4; ++k)
        col("-", 6);
      col("-", 5);
    }
    col(r.predicted ? to_string(r.predicted->source) : "-", 19);
    col(r.oracle_confirmed ? (*r.oracle_confirmed ? "yes" : "NO") : "-", 8);
    col(r.verdict == SweepRow::Verdict::kExcluded
            ? "excluded (P1oP1)"
            : std::string(to_string(r.verdict)),
        22);
    out << '\n';
  }
}

int exit_code_for(const Error &e) {
  return e.kind() == ErrorKind::kNotLabelable ? kExitDegenerate : kExitUsage;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  CLI::App app { "Total edge product cordial labelings of corona graphs",
                 "tepc" };
  app.require_subcommand(1);
  app.fallthrough();
  bool json_mode = false;
  app.add_flag("--json", json_mode, "Line-delimited JSON output");

  GenArgs gen;
  auto *gen_cmd = app.add_subcommand("gen", "Write a graph document");
  gen_cmd
      ->add_option("--family", gen.family,
                   "path|cycle|fan|wheel|complete|k2|c4|paw|corona-pp|"
                   "corona-pc")
      ->required();
  gen_cmd->add_option("-n", gen.n, "Spine length / vertex count");
  gen_cmd->add_option("-m", gen.m, "Copy, cycle, fan or wheel size");
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string label_family, label_output;
  int label_n = 0, label_m = 0;
  auto *label_cmd =
      app.add_subcommand("label", "Apply the constructive corona labeling");
  label_cmd->add_option("family", label_family, "pp|pc")->required();
  label_cmd->add_option("n", label_n, "Spine length")->required();
  label_cmd->add_option("m", label_m, "Copy size")->required();
  label_cmd->add_option("-o,--output", label_output,
                        "Write the labeling document here");

  std::string check_graph, check_labeling;
  auto *check_cmd = app.add_subcommand("check", "Verify a labeling");
  check_cmd->add_option("graph", check_graph, "Graph document")->required();
  check_cmd->add_option("labeling", check_labeling, "Labeling document")
      ->required();

  std::string search_graph;
  std::size_t budget = kDefaultEdgeBudget;
  bool count_mode = false;
  unsigned jobs = 1;
  auto *search_cmd =
      app.add_subcommand("search", "Exhaustive search for a labeling");
  search_cmd->add_option("graph", search_graph, "Graph document")->required();
  search_cmd->add_option("--budget", budget, "Maximum edge count")
      ->capture_default_str();
  search_cmd->add_flag("--count", count_mode, "Count every balanced labeling");
  search_cmd->add_option("--jobs", jobs, "Worker threads (0 = all cores)")
      ->capture_default_str();

  std::string sweep_family, n_range_text, m_range_text;
  std::size_t oracle_max_edges = 16;
  auto *sweep_cmd =
      app.add_subcommand("sweep", "Label and verify a parameter grid");
  sweep_cmd->add_option("family", sweep_family, "pp|pc")->required();
  sweep_cmd->add_option("n-range", n_range_text, "a..b")->required();
  sweep_cmd->add_option("m-range", m_range_text, "a..b")->required();
  sweep_cmd
      ->add_option("--oracle-max-edges", oracle_max_edges,
                   "Run the exhaustive oracle up to this many edges")
      ->capture_default_str();

  std::string export_graph, export_labeling, export_output;
  bool dot = true;
  auto *export_cmd = app.add_subcommand("export", "Render as Graphviz DOT");
  export_cmd->add_option("graph", export_graph, "Graph document")->required();
  export_cmd->add_option("--labeling", export_labeling, "Labeling document");
  export_cmd->add_flag("--dot", dot, "DOT output (the only format)");
  export_cmd->add_option("-o,--output", export_output,
                         "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) {
      const Graph g = generate(gen);
      const std::string doc = graph_to_json(g).dump() + "\n";
      if (gen.output.empty()) {
        out << doc;
      } else {
        write_text_file(gen.output, doc);
        out << "wrote " << gen.output << ": " << g.vertex_count()
            << " vertices, " << g.edge_count() << " edges\n";
      }
      return kExitOk;
    }

    if (*label_cmd) {
      auto family = parse_family(label_family);
      if (!family)
        throw Error(ErrorKind::kInvalidParameter,
                    "family must be pp or pc, got \"" + label_family + "\"");
      LabeledCorona lc = label_corona(*family, label_n, label_m);
      const Tally t = tally(lc.graph, lc.labeling);
      if (!label_output.empty())
        write_text_file(label_output,
                        labeling_to_json(lc.graph, lc.labeling).dump() + "\n");

      std::optional<PredictedTally> predicted;
      if (label_n >= 2)
        predicted = predicted_tally(*family, label_n, label_m);

      if (json_mode) {
        Json rec = verdict_to_json(t);
        rec["family"] = to_string(*family);
        rec["n"] = label_n;
        rec["m"] = label_m;
        rec["case"] = to_string(lc.tag.variant);
        rec["predicted"] = predicted ? predicted_to_json(*predicted) : Json();
        out << rec.dump() << '\n';
      } else {
        out << to_string(*family) << " n=" << label_n << " m=" << label_m
            << "  case " << to_string(lc.tag.variant) << '\n';
        print_tally_table(out, t);
        if (predicted) {
          out << "predicted (" << to_string(predicted->source) << "): ";
          print_tally_table(out, predicted->tally);
          if (predicted->published) {
            out << "published counts: ";
            print_tally_table(out, *predicted->published);
          }
        }
      }
      return t.balanced() ? kExitOk : kExitNotTepc;
    }

    if (*check_cmd) {
      const Graph g = graph_from_json(read_json_file(check_graph));
      const EdgeLabeling f =
          bind_labeling(g, labeling_from_json(read_json_file(check_labeling)));
      const Tally t = tally(g, f);
      if (json_mode)
        out << verdict_to_json(t).dump() << '\n';
      else
        print_tally_table(out, t);
      return t.balanced() ? kExitOk : kExitNotTepc;
    }

    if (*search_cmd) {
      const Graph g = graph_from_json(read_json_file(search_graph));
      SearchOptions options { budget, jobs };
      const SearchReport r =
          count_mode ? count_tepc(g, options) : find_tepc(g, options);
      out << report_to_json(r).dump() << '\n';
      return r.witness ? kExitOk : kExitNotTepc;
    }

    if (*sweep_cmd) {
      auto family = parse_family(sweep_family);
      if (!family)
        throw Error(ErrorKind::kInvalidParameter,
                    "family must be pp or pc, got \"" + sweep_family + "\"");
      const auto rows = sweep(*family, parse_range(n_range_text),
                              parse_range(m_range_text), oracle_max_edges);
      if (json_mode) {
        for (const SweepRow &r: rows)
          out << sweep_row_to_json(r).dump() << '\n';
      } else {
        print_sweep_table(out, rows);
      }
      const bool all_pass =
          std::none_of(rows.begin(), rows.end(), [](const SweepRow &r) {
            return r.verdict == SweepRow::Verdict::kFail;
          });
      return all_pass ? kExitOk : kExitNotTepc;
    }

    if (*export_cmd) {
      const Graph g = graph_from_json(read_json_file(export_graph));
      std::optional<EdgeLabeling> f;
      if (!export_labeling.empty())
        f = bind_labeling(g,
                          labeling_from_json(read_json_file(export_labeling)));
      const std::string text = to_dot(g, f ? &*f : nullptr);
      if (export_output.empty())
        out << text;
      else
        write_text_file(export_output, text);
      return kExitOk;
    }
  } catch (const Error &e) {
    err << "tepc: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  }
  return kExitUsage;
}

} // namespace tepc
