#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "darg/graph.hpp"

namespace darg {

struct ClassicalBase {
  std::vector<Formula> axioms;
};

/// A knowledge base in exactly one base logic.
using BaseKB = std::variant<simple::KnowledgeBase, ClassicalBase, defaults::Theory,
                            preferential::ConditionalBase>;

Logic logic_of(const BaseKB& kb);

/// Attack kind names accepted for a logic, and those enabled when a
/// configuration names none.
const std::set<std::string>& known_kinds(Logic l);
const std::set<std::string>& default_kinds(Logic l);

/// Selection function for generated graphs.
struct GenerationConfig {
  /// Empty means default_kinds() of the logic.
  std::set<std::string> kinds;
  /// Claims to argue about (classical and default logic). When empty they
  /// are derived from the knowledge base, see focal_claims().
  std::vector<Formula> focal;
  /// Claims for conditional logic; the base's own conditionals when empty.
  std::vector<preferential::Conditional> focal_conditionals;
  /// Largest premise conjunction whose negation becomes a derived focal claim.
  std::size_t focal_conjunction_size = 2;
  std::size_t support_bound = 16;
  std::size_t psi_bound = 12;
  std::size_t default_bound = 12;
  EntailmentOptions entailment;
};

/// Throws UsageError on a kind that is not known for the logic.
std::set<std::string> effective_kinds(Logic l, const GenerationConfig& cfg);

/// Focal claims for classical and default bases. Derived claims: every
/// premise (facts and consequents for default theories), the negation of
/// each premise, and negations of premise conjunctions up to
/// focal_conjunction_size. Duplicates are dropped syntactically.
std::vector<Formula> focal_claims(const BaseKB& kb, const GenerationConfig& cfg);

/// Enabled kinds by which `a` attacks `b`; empty when payload logics differ.
std::vector<std::string> attack_kinds(const Payload& a, const Payload& b,
                                      const std::set<std::string>& kinds,
                                      const GenerationConfig& cfg);

/// All arguments the base logic produces under `cfg`, sorted by (claim,
/// support) text and numbered A1..An, with every enabled attack between them.
ArgGraph generate_graph(const BaseKB& kb, const GenerationConfig& cfg = {});

/// Validity of an assigned argument in its own logic.
bool is_valid_argument(const Payload& p, const EntailmentOptions& opts = {});

struct EdgeCheck {
  std::string from;
  std::string to;
  std::vector<std::string> kinds;  // empty when violated
  bool confirmed = false;
};

struct DescriptiveReport {
  std::vector<EdgeCheck> edges;
  /// Attacks between assigned arguments missing from the abstract graph.
  std::vector<Attack> surplus;
  /// Abstract nodes whose assigned argument is not valid in its logic.
  std::vector<std::string> invalid;
  /// Abstract nodes with no assignment.
  std::vector<std::string> unassigned;
  bool strict = false;
  bool passed = false;
};

DescriptiveReport verify_descriptive(const ArgGraph& abstract,
                                     const std::map<std::string, Payload>& assignment,
                                     const GenerationConfig& cfg, bool strict = false);

}  // namespace darg
