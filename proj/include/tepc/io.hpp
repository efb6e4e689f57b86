//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef TEPC_IO_HPP_
#define TEPC_IO_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "tepc/graph.hpp"
#include "tepc/labelers.hpp"
#include "tepc/labeling.hpp"
#include "tepc/search.hpp"

namespace tepc {

using Json = nlohmann::json;

// All parsers throw Error(kMalformedInput) on structural problems.

/// {"vertex_count": int, "edges": [[a,b],...], "roles": {"id": tag, ...}}
Json graph_to_json(const Graph &g);
Graph graph_from_json(const Json &doc);

/// {"graph": <graph doc or path>, "edge_labels": [bit, ...]}
struct LabelingDocument {
  std::variant<Graph, std::string> graph;
  std::vector<Bit> edge_labels;
};

Json labeling_to_json(const Graph &g, const EdgeLabeling &f);
Json labeling_to_json(const std::string &graph_path, const EdgeLabeling &f);
LabelingDocument labeling_from_json(const Json &doc);

/// Binds a labeling document to `g`. Throws Error(kBindingMismatch) if the
/// label count differs or an embedded graph is not `g`.
EdgeLabeling bind_labeling(const Graph &g, const LabelingDocument &doc);

/// {"e0", "e1", "v0", "v1", "gap", "tepc"}
Json verdict_to_json(const Tally &t);
Tally verdict_from_json(const Json &doc);

/// {"edges", "examined", "tepc_count", "witness", "exhaustive", "elapsed_ms"}
Json report_to_json(const SearchReport &r);
SearchReport report_from_json(const Json &doc, const Graph &g);

Json predicted_to_json(const PredictedTally &p);

Json read_json_file(const std::filesystem::path &path);
void write_text_file(const std::filesystem::path &path,
                     const std::string &text);

/// Undirected DOT. Vertices are labeled with their role tag (or id); with a
/// labeling, edges carry their 0/1 label and vertices are colored by the
/// induced label.
std::string to_dot(const Graph &g, const EdgeLabeling *f = nullptr);

} // namespace tepc

#endif // TEPC_IO_HPP_
