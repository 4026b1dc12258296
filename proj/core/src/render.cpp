#include "darg/render.hpp"

#include <sstream>

#include <json.hpp>

#include "darg/error.hpp"
#include "darg/kb.hpp"

namespace darg {

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  throw UsageError("unknown format '" + std::string(s) + "' (expected text, json or dot)");
}

std::string graph_to_json(const ArgGraph& g) {
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (const ArgNode& n : g.nodes()) {
    nlohmann::ordered_json j;
    j["id"] = n.id;
    const auto logic = payload_logic(n.payload);
    j["logic"] = logic ? nlohmann::ordered_json(std::string(logic_name(*logic))) : nullptr;
    j["support"] = payload_support(n.payload);
    j["claim"] = logic ? nlohmann::ordered_json(payload_claim(n.payload)) : nullptr;
    nodes.push_back(std::move(j));
  }
  nlohmann::ordered_json attacks = nlohmann::ordered_json::array();
  for (const Attack& a : g.attacks()) {
    nlohmann::ordered_json j;
    j["from"] = a.from;
    j["to"] = a.to;
    j["kinds"] = a.kinds;
    attacks.push_back(std::move(j));
  }
  nlohmann::ordered_json root;
  root["nodes"] = std::move(nodes);
  root["attacks"] = std::move(attacks);
  return root.dump(2) + "\n";
}

ArgGraph graph_from_json(std::string_view text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(e.what(), {1, e.byte});
  }
  ArgGraph g;
  try {
    for (const auto& n : root.at("nodes")) {
      Payload p;
      if (!n.at("logic").is_null()) {
        const std::string name = n.at("logic").get<std::string>();
        const auto logic = parse_logic(name);
        if (!logic) throw SyntaxError("unknown logic '" + name + "' in graph JSON", {});
        p = parse_payload(*logic, n.at("support").get<std::vector<std::string>>(),
                          n.at("claim").get<std::string>());
      }
      g.add_node({n.at("id").get<std::string>(), std::move(p)});
    }
    for (const auto& a : root.at("attacks")) {
      g.add_attack(a.at("from").get<std::string>(), a.at("to").get<std::string>(),
                   a.at("kinds").get<std::vector<std::string>>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw SyntaxError(std::string("malformed graph JSON: ") + e.what(), {});
  }
  return g;
}

namespace {

std::string dot_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string joined(const std::vector<std::string>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const ArgGraph& g) {
  std::ostringstream os;
  os << "digraph arguments {\n";
  for (const ArgNode& n : g.nodes()) {
    const std::string claim = payload_claim(n.payload);
    os << "  \"" << dot_escape(n.id) << "\" [label=\""
       << dot_escape(claim.empty() ? n.id : n.id + ": " + claim) << "\", tooltip=\"{"
       << dot_escape(joined(payload_support(n.payload), ", ")) << "}\"];\n";
  }
  for (const Attack& a : g.attacks()) {
    os << "  \"" << dot_escape(a.from) << "\" -> \"" << dot_escape(a.to) << "\"";
    if (!a.kinds.empty()) os << " [label=\"" << dot_escape(joined(a.kinds, ", ")) << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string graph_to_text(const ArgGraph& g) {
  std::ostringstream os;
  os << "arguments: " << g.size() << "\n";
  for (const ArgNode& n : g.nodes()) {
    os << "  " << n.id << ": <{" << joined(payload_support(n.payload), ", ") << "}, "
       << payload_claim(n.payload) << ">\n";
  }
  os << "attacks: " << g.attacks().size() << "\n";
  for (const Attack& a : g.attacks()) {
    os << "  " << a.from << " -> " << a.to;
    if (!a.kinds.empty()) os << " [" << joined(a.kinds, ", ") << "]";
    os << "\n";
  }
  return os.str();
}

std::string render_graph(const ArgGraph& g, Format f) {
  switch (f) {
    case Format::Json: return graph_to_json(g);
    case Format::Dot: return graph_to_dot(g);
    case Format::Text: return graph_to_text(g);
  }
  return {};
}

}  // namespace darg
