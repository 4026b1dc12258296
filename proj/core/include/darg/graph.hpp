#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "darg/classical.hpp"
#include "darg/default_logic.hpp"
#include "darg/simple_logic.hpp"
#include "darg/system_p.hpp"

namespace darg {

enum class Logic { Simple, Classical, Default, Conditional };

std::string_view logic_name(Logic l);
std::optional<Logic> parse_logic(std::string_view s);

/// Monostate marks an abstract (uninstantiated) node.
using Payload = std::variant<std::monostate, simple::Argument, classical::Argument,
                             defaults::Argument, preferential::Argument>;

std::optional<Logic> payload_logic(const Payload& p);
std::string payload_claim(const Payload& p);
/// Support items rendered one per entry.
std::vector<std::string> payload_support(const Payload& p);

struct ArgNode {
  std::string id;
  Payload payload;
};

struct Attack {
  std::string from;
  std::string to;
  /// Every enabled kind that justifies the edge, sorted.
  std::vector<std::string> kinds;

  friend bool operator==(const Attack&, const Attack&) = default;
};

/// Dung-style argument graph. Self-attacks are allowed.
class ArgGraph {
 public:
  ArgGraph() = default;

  /// Throws UsageError on a duplicate id.
  void add_node(ArgNode node);
  /// Endpoints must exist; kinds are merged into an existing edge.
  void add_attack(const std::string& from, const std::string& to,
                  std::vector<std::string> kinds = {});

  const std::vector<ArgNode>& nodes() const { return nodes_; }
  const std::vector<Attack>& attacks() const { return attacks_; }
  std::size_t size() const { return nodes_.size(); }

  std::optional<std::size_t> index_of(std::string_view id) const;
  const ArgNode& node(std::string_view id) const;
  bool attacks(std::string_view from, std::string_view to) const;

  /// attackers()[i] lists indices of nodes attacking node i.
  std::vector<std::vector<std::size_t>> attackers() const;

 private:
  std::vector<ArgNode> nodes_;
  std::vector<Attack> attacks_;
};

enum class Semantics { Grounded, Complete, Preferred, Stable };

std::string_view semantics_name(Semantics s);
std::optional<Semantics> parse_semantics(std::string_view s);

/// Node-id sets, each sorted in graph order; the list is sorted
/// lexicographically.
struct ExtensionSet {
  Semantics semantics = Semantics::Grounded;
  std::vector<std::vector<std::string>> extensions;
};

struct SemanticsOptions {
  std::size_t node_bound = 25;
};

std::vector<std::string> grounded_extension(const ArgGraph& g);

ExtensionSet extensions(const ArgGraph& g, Semantics s, const SemanticsOptions& opts = {});

enum class AcceptanceMode { Credulous, Skeptical };

/// Claim texts of nodes in some (credulous) or every (skeptical) extension,
/// sorted and unique. Skeptical acceptance over zero extensions is empty.
std::vector<std::string> accepted_claims(const ArgGraph& g, Semantics s, AcceptanceMode mode,
                                         const SemanticsOptions& opts = {});

}  // namespace darg
