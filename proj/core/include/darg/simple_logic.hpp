#pragma once

#include <set>
#include <string>
#include <vector>

#include "darg/formula.hpp"

namespace darg::simple {

/// body_1 & ... & body_k -> head over literals.
struct Rule {
  std::vector<Literal> body;
  Literal head;

  std::string str() const;
  friend bool operator==(const Rule&, const Rule&) = default;
  friend auto operator<=>(const Rule&, const Rule&) = default;
};

/// Throws UsageError unless `f` has the shape `lit & ... & lit -> lit`.
Rule rule_from_formula(const Formula& f);
Formula rule_to_formula(const Rule& r);

struct KnowledgeBase {
  std::set<Literal> facts;
  std::set<Rule> rules;

  std::size_t size() const { return facts.size() + rules.size(); }
  bool empty() const { return facts.empty() && rules.empty(); }
  bool contains(const KnowledgeBase& other) const;
  /// Facts then rules, each in sorted order.
  std::vector<std::string> items() const;
  std::string str() const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
  friend auto operator<=>(const KnowledgeBase&, const KnowledgeBase&) = default;
};

struct Argument {
  KnowledgeBase support;
  Literal claim;

  std::string str() const;
  friend bool operator==(const Argument&, const Argument&) = default;
  friend auto operator<=>(const Argument&, const Argument&) = default;
};

/// Literals obtainable as heads of applicable rules (least fixpoint).
/// Facts are not consequences on their own.
std::set<Literal> consequences(const KnowledgeBase& delta);

bool derives(const KnowledgeBase& delta, const Literal& goal);

/// Every minimal-support argument for every derivable literal, sorted.
std::vector<Argument> all_arguments(const KnowledgeBase& delta);

/// Minimal supports within `delta` for the single claim `goal`.
std::vector<Argument> arguments_for(const KnowledgeBase& delta, const Literal& goal);

/// Removing any single element breaks derivation of the claim.
bool is_minimal(const Argument& a);

enum class Attack { Undercut, Rebut };

std::string_view attack_name(Attack k);

/// Kinds by which `a` attacks `b`.
std::set<Attack> attack_kinds(const Argument& a, const Argument& b);

}  // namespace darg::simple
