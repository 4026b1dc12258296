#pragma once

#include <string>
#include <string_view>

#include "darg/graph.hpp"
#include "darg/instantiate.hpp"

namespace darg {

enum class Format { Text, Json, Dot };

Format parse_format(std::string_view s);

/// Nodes as `{id, logic, support, claim}`, attacks as `{from, to, kinds}`.
std::string graph_to_json(const ArgGraph& g);
/// Rebuilds payloads by re-parsing support items per node logic.
ArgGraph graph_from_json(std::string_view text);

std::string graph_to_dot(const ArgGraph& g);
std::string graph_to_text(const ArgGraph& g);

std::string render_graph(const ArgGraph& g, Format f);

}  // namespace darg
