#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "min2lin/cuts.hpp"
#include "min2lin/graph.hpp"
#include "min2lin/system.hpp"

namespace min2lin::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kInternalError = 3, kUnsupported = 4 };

using Json = nlohmann::ordered_json;

// Equation ids are positions in the file.
struct Instance {
  LinSystem system;
  Weight k = 0;
};

struct GraphEdgeSpec {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 1;
  std::optional<nlohmann::json> label;
};

// {vertices: n, edges: [{u, v, w?, label?}], terminals?, requests?: [[s, t]], k?}
struct GraphFile {
  int vertices = 0;
  std::vector<GraphEdgeSpec> edges;
  std::vector<Vertex> terminals;
  std::vector<std::pair<Vertex, Vertex>> requests;
  std::optional<Weight> k;

  Graph graph() const;
};

// All parsers throw ParseError on malformed or unknown content.
Instance parse_instance(const nlohmann::json& doc);
GraphFile parse_graph(const nlohmann::json& doc);
// {vertices, edges, partition: [[...]], requests?: [{s, u, t, v}], k}
CutInstance parse_cut(const nlohmann::json& doc);

Json element_json(const Element& x);
Json instance_json(const LinSystem& s, Weight k);

// Runs one command line (without the program name). Results go to out,
// diagnostics to err; the return value is the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace min2lin::cli
