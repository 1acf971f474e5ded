#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "ctw/graph.hpp"

namespace ctw {

// Text format:
//   c <comment>
//   p <n> <m>
//   e <u> <v>        (1-based, m lines)
Graph read_graph_text(std::istream& in);
Graph parse_graph_text(std::string_view text);
void write_graph_text(std::ostream& out, const Graph& g);
std::string format_graph_text(const Graph& g);

/// One line of n whitespace-separated 1-based vertex ids in position order.
LinearLayout read_layout_text(std::istream& in);
LinearLayout parse_layout_text(std::string_view text);
void write_layout_text(std::ostream& out, const LinearLayout& layout);
std::string format_layout_text(const LinearLayout& layout);

/// { "n": int, "edges": [[u,v],...], "labels": {"id": string} } with 1-based ids.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// 1-based id array.
nlohmann::json layout_to_json(const LinearLayout& layout);
LinearLayout layout_from_json(const nlohmann::json& j);

/// `graph G { ... }` with 1-based node names; labels become `label` attributes.
std::string format_dot(const Graph& g);
/// Accepts the subset of DOT produced by format_dot: node statements
/// `<id> [label="..."];` and edge statements `<id> -- <id>;`.
Graph parse_dot(std::string_view text);

Graph load_graph_file(const std::string& path);
LinearLayout load_layout_file(const std::string& path);
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// FNV-1a 64-bit hash, hex encoded. Used for input digests in reports.
std::string fnv1a_hex(std::string_view data);

}  // namespace ctw
