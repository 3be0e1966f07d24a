#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "tripex/core.hpp"

namespace tripex {

// Text formats: a header line "n m" followed by m edge lines, whitespace
// separated and 0-based. Graph lines hold "u v", triple lines "u v w".
// The JSON mirror is {"n": n, "edges": [[u, v], ...]}.

[[nodiscard]] Graph read_graph_text(std::istream& in);
[[nodiscard]] TripleSystem read_triples_text(std::istream& in);
void write_graph_text(std::ostream& out, const Graph& g);
void write_triples_text(std::ostream& out, const TripleSystem& h);

/// Load from a file in either the text or the JSON format (detected from the first
/// non-blank character).
[[nodiscard]] Graph load_graph(const std::string& path);
[[nodiscard]] TripleSystem load_triples(const std::string& path);
/// Parses a JSON file; I/O and syntax errors become InvalidInput.
[[nodiscard]] nlohmann::json load_json(const std::string& path);

void to_json(nlohmann::json& j, const Edge& e);
void to_json(nlohmann::json& j, const Triple& t);
void to_json(nlohmann::json& j, const Graph& g);
void from_json(const nlohmann::json& j, Graph& g);
void to_json(nlohmann::json& j, const TripleSystem& h);
void from_json(const nlohmann::json& j, TripleSystem& h);
void to_json(nlohmann::json& j, const VertexSet& s);

}  // namespace tripex
