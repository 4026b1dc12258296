#pragma once

#include <compare>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace darg {

enum class Connective { Atom, Not, And, Or, Implies, Iff, True, False };

/// Immutable propositional formula tree. Copies share structure.
///
/// Atoms may carry an argument list (`bird(Tweety)`); the flattened text is
/// the atom's identity. An argument that is a single upper-case letter,
/// optionally followed by digits (`X`, `Y2`), is a schematic variable and
/// must be grounded before the formula is used for reasoning.
class Formula {
 public:
  /// Defaults to verum.
  Formula();

  static Formula atom(std::string predicate, std::vector<std::string> args = {});
  static Formula negation(Formula f);
  /// A single-element list yields that element; an empty list is rejected.
  static Formula conjunction(std::vector<Formula> fs);
  static Formula disjunction(std::vector<Formula> fs);
  static Formula implication(Formula lhs, Formula rhs);
  static Formula biconditional(Formula lhs, Formula rhs);
  static Formula verum();
  static Formula falsum();

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::Atom; }

  /// Flattened atom text, e.g. `bird(Tweety)`. Empty for non-atoms.
  const std::string& atom_name() const;
  const std::string& predicate() const;
  std::span<const std::string> args() const;
  std::span<const Formula> children() const;

  bool has_variables() const;
  /// Distinct atom names occurring in the formula, sorted.
  std::set<std::string> atoms() const;
  void collect_atoms(std::set<std::string>& out) const;

  std::string str() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

  struct Node;

 private:
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

bool is_variable_name(std::string_view arg);

/// Signed atom; the currency of simple logic.
struct Literal {
  std::string atom;
  bool positive = true;

  Literal complement() const { return {atom, !positive}; }
  Formula to_formula() const;
  std::string str() const;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Reads a literal off an atom or a negated atom; throws UsageError otherwise.
Literal as_literal(const Formula& f);
bool is_literal(const Formula& f);

using Valuation = std::map<std::string, bool>;

/// Truth-functional evaluation. Throws EvaluationError when `v` misses an atom.
bool evaluate(const Valuation& v, const Formula& f);

/// Top-level conjuncts (the formula itself when it is not a conjunction).
std::vector<Formula> conjuncts(const Formula& f);

std::string join(std::span<const Formula> fs, std::string_view sep);

}  // namespace darg
