//
// tepc - Copyright 2026 The tepc Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "tepc/io.hpp"

#include <fstream>
#include <sstream>

#include "tepc/error.hpp"

namespace tepc {

namespace {
[[noreturn]] void malformed(const std::string &what) {
  throw Error(ErrorKind::kMalformedInput, what);
}

const Json &field(const Json &doc, const char *key) {
  if (!doc.is_object() || !doc.contains(key))
    malformed(std::string("missing field \"") + key + "\"");
  return doc.at(key);
}

std::int64_t int_field(const Json &doc, const char *key) {
  const Json &v = field(doc, key);
  if (!v.is_number_integer())
    malformed(std::string("field \"") + key + "\" must be an integer");
  return v.get<std::int64_t>();
}
} // namespace

Json graph_to_json(const Graph &g) {
  Json edges = Json::array();
  for (const Edge &e: g.edges())
    edges.push_back({ e.u, e.v });
  Json roles = Json::object();
  if (g.has_roles())
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      roles[std::to_string(v)] = to_string(g.roles()[v]);
  return { { "vertex_count", g.vertex_count() },
           { "edges", std::move(edges) },
           { "roles", std::move(roles) } };
}

Graph graph_from_json(const Json &doc) {
  const std::int64_t n = int_field(doc, "vertex_count");
  if (n < 0)
    malformed("vertex_count must be non-negative");

  const Json &edges_doc = field(doc, "edges");
  if (!edges_doc.is_array())
    malformed("edges must be an array");
  std::vector<Edge> edges;
  for (const Json &e: edges_doc) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned()
        || !e[1].is_number_unsigned())
      malformed("each edge must be a pair of vertex ids");
    edges.push_back({ e[0].get<VertexId>(), e[1].get<VertexId>() });
  }

  std::vector<Role> roles;
  if (doc.contains("roles")) {
    const Json &roles_doc = doc.at("roles");
    if (!roles_doc.is_object())
      malformed("roles must be an object");
    if (!roles_doc.empty()) {
      roles.assign(static_cast<std::size_t>(n), Role::plain());
      for (const auto &[key, tag]: roles_doc.items()) {
        std::size_t id = 0;
        try {
          std::size_t used = 0;
          id = std::stoul(key, &used);
          if (used != key.size())
            malformed("role key \"" + key + "\" is not a vertex id");
        } catch (const std::logic_error &) {
          malformed("role key \"" + key + "\" is not a vertex id");
        }
        if (id >= roles.size())
          malformed("role key " + key + " out of range");
        if (!tag.is_string())
          malformed("role tag must be a string");
        auto role = parse_role(tag.get<std::string>());
        if (!role)
          malformed("unknown role tag \"" + tag.get<std::string>() + "\"");
        roles[id] = *role;
      }
    }
  }

  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges),
                 std::move(roles));
  } catch (const Error &err) {
    malformed(err.what());
  }
}

namespace {
Json bits_to_json(std::span<const Bit> bits) {
  Json out = Json::array();
  for (Bit b: bits)
    out.push_back(static_cast<int>(b));
  return out;
}

std::vector<Bit> bits_from_json(const Json &doc, const char *what) {
  if (!doc.is_array())
    malformed(std::string(what) + " must be an array");
  std::vector<Bit> bits;
  bits.reserve(doc.size());
  for (const Json &b: doc) {
    if (!b.is_number_integer() || (b.get<int>() != 0 && b.get<int>() != 1))
      malformed(std::string(what) + " entries must be 0 or 1");
    bits.push_back(static_cast<Bit>(b.get<int>()));
  }
  return bits;
}
} // namespace

Json labeling_to_json(const Graph &g, const EdgeLabeling &f) {
  return { { "graph", graph_to_json(g) },
           { "edge_labels", bits_to_json(f.bits()) } };
}

Json labeling_to_json(const std::string &graph_path, const EdgeLabeling &f) {
  return { { "graph", graph_path },
           { "edge_labels", bits_to_json(f.bits()) } };
}

LabelingDocument labeling_from_json(const Json &doc) {
  const Json &graph = field(doc, "graph");
  LabelingDocument out { std::string(), bits_from_json(
                                            field(doc, "edge_labels"),
                                            "edge_labels") };
  if (graph.is_string())
    out.graph = graph.get<std::string>();
  else if (graph.is_object())
    out.graph = graph_from_json(graph);
  else
    malformed("graph must be a document or a path");
  return out;
}

EdgeLabeling bind_labeling(const Graph &g, const LabelingDocument &doc) {
  if (const Graph *embedded = std::get_if<Graph>(&doc.graph);
      embedded && !(*embedded == g))
    throw Error(ErrorKind::kBindingMismatch,
                "labeling document embeds a different graph");
  return EdgeLabeling(g, doc.edge_labels);
}

Json verdict_to_json(const Tally &t) {
  return { { "e0", t.e0 },   { "e1", t.e1 },   { "v0", t.v0 },
           { "v1", t.v1 },   { "gap", t.gap }, { "tepc", t.balanced() } };
}

Tally verdict_from_json(const Json &doc) {
  Tally t = make_tally(int_field(doc, "e0"), int_field(doc, "e1"),
                       int_field(doc, "v0"), int_field(doc, "v1"));
  if (t.gap != int_field(doc, "gap"))
    malformed("gap does not match counts");
  const Json &tepc = field(doc, "tepc");
  if (!tepc.is_boolean() || tepc.get<bool>() != t.balanced())
    malformed("tepc verdict does not match gap");
  return t;
}

Json report_to_json(const SearchReport &r) {
  Json out { { "edges", r.edges },
             { "examined", r.examined },
             { "tepc_count", nullptr },
             { "witness", nullptr },
             { "exhaustive", r.exhaustive },
             { "elapsed_ms", r.elapsed.count() } };
  if (r.tepc_count)
    out["tepc_count"] = *r.tepc_count;
  if (r.witness)
    out["witness"] = bits_to_json(r.witness->bits());
  return out;
}

SearchReport report_from_json(const Json &doc, const Graph &g) {
  SearchReport r;
  r.edges = static_cast<std::size_t>(int_field(doc, "edges"));
  if (r.edges != g.edge_count())
    throw Error(ErrorKind::kBindingMismatch,
                "report edge count does not match graph");
  r.examined = static_cast<std::uint64_t>(int_field(doc, "examined"));
  r.elapsed = std::chrono::milliseconds(int_field(doc, "elapsed_ms"));

  const Json &ex = field(doc, "exhaustive");
  if (!ex.is_boolean())
    malformed("exhaustive must be a boolean");
  r.exhaustive = ex.get<bool>();

  const Json &count = field(doc, "tepc_count");
  if (!count.is_null()) {
    if (!count.is_number_unsigned())
      malformed("tepc_count must be a non-negative integer or null");
    r.tepc_count = count.get<std::uint64_t>();
  }
  const Json &witness = field(doc, "witness");
  if (!witness.is_null())
    r.witness = EdgeLabeling(g, bits_from_json(witness, "witness"));
  return r;
}

Json predicted_to_json(const PredictedTally &p) {
  Json out = verdict_to_json(p.tally);
  out["source"] = to_string(p.source);
  if (p.published)
    out["published"] = verdict_to_json(*p.published);
  return out;
}

Json read_json_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in)
    malformed("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    malformed(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path &path,
                     const std::string &text) {
  std::ofstream out(path);
  if (!out)
    throw Error(ErrorKind::kInvalidParameter,
                "cannot write " + path.string());
  out << text;
}

std::string to_dot(const Graph &g, const EdgeLabeling *f) {
  std::optional<VertexLabeling> vl;
  if (f)
    vl = induced_vertex_labels(g, *f);

  std::ostringstream out;
  out << "graph G {\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::string name =
        g.has_roles() ? to_string(g.roles()[v]) : std::to_string(v);
    out << "  " << v << " [label=\"" << name;
    if (vl) {
      const Bit b = (*vl)[v];
      out << " : " << int { b } << "\", style=filled, fillcolor=\""
          << (b ? "lightblue" : "lightsalmon") << "\"];\n";
    } else {
      out << "\"];\n";
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (f)
      out << " [label=\"" << int { (*f)[e] } << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

} // namespace tepc
