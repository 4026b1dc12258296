#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "darg/entailment.hpp"
#include "darg/formula.hpp"

namespace darg::defaults {

/// pre : just / cons
struct DefaultRule {
  Formula pre;
  Formula just;
  Formula cons;

  std::string str() const;
  friend bool operator==(const DefaultRule&, const DefaultRule&) = default;
  friend auto operator<=>(const DefaultRule&, const DefaultRule&) = default;
};

/// (D, W). Both lists are kept sorted and duplicate-free by `normalized`.
struct Theory {
  std::vector<DefaultRule> defaults;
  std::vector<Formula> facts;

  std::size_t size() const { return defaults.size() + facts.size(); }
  /// Sub-theory order: D' subset of D and W' subset of W.
  bool contains(const Theory& other) const;
  std::string str() const;

  friend bool operator==(const Theory&, const Theory&) = default;
  friend auto operator<=>(const Theory&, const Theory&) = default;
};

Theory normalized(Theory t);

struct Options {
  /// Largest default set enumerated for extensions.
  std::size_t default_bound = 12;
  /// Largest |D| + |W| enumerated for argument supports.
  std::size_t support_bound = 16;
  EntailmentOptions entailment;
};

/// Finite stand-in for Cn(facts + consequents of `generating`).
struct Extension {
  std::vector<Formula> facts;
  /// In an order where each pre-condition follows from the facts and the
  /// consequents of earlier entries.
  std::vector<DefaultRule> generating;
  bool inconsistent = false;

  std::vector<Formula> base() const;
  bool entails(const Formula& f, const EntailmentOptions& opts = {}) const;
  std::string str() const;
};

/// Gamma(E) for E = Cn(`e_base`): least fixpoint from W applying every
/// default whose pre-condition is derived and whose justification's negation
/// does not follow from E.
Extension gamma(const Theory& theory, std::span<const Formula> e_base,
                const EntailmentOptions& opts = {});

/// Extensions of the theory, one per distinct generating set, sorted by the
/// index mask of their generating defaults. An inconsistent W yields the
/// single flagged inconsistent extension.
std::vector<Extension> extensions(const Theory& theory, const Options& opts = {});

/// Application order is grounded and E = Gamma(E).
bool verify_extension(const Theory& theory, const Extension& ext,
                      const EntailmentOptions& opts = {});

enum class Mode { Credulous, Skeptical };

struct Derivation {
  bool holds = false;
  bool no_extension = false;
  std::size_t extension_count = 0;
  /// Index of an extension witnessing (credulous) or refuting (skeptical).
  std::optional<std::size_t> witness;
};

Derivation derive(const Theory& theory, const Formula& f, Mode mode = Mode::Credulous,
                  const Options& opts = {});

inline bool derives(const Theory& theory, const Formula& f, Mode mode = Mode::Credulous,
                    const Options& opts = {}) {
  return derive(theory, f, mode, opts).holds;
}

struct Argument {
  Theory support;
  Formula claim;

  std::span<const DefaultRule> default_rules() const { return support.defaults; }
  std::string str() const;

  friend bool operator==(const Argument&, const Argument&) = default;
  friend auto operator<=>(const Argument&, const Argument&) = default;
};

/// Sub-theories minimal under the sub-theory order whose facts are
/// consistent and which credulously derive `claim`.
std::vector<Argument> arguments(const Theory& theory, const Formula& claim,
                                const Options& opts = {});

/// Some default alpha:beta/gamma of `target` has attacker_claim |- !beta.
bool is_justification_undercut(const Formula& attacker_claim, const Argument& target,
                               const EntailmentOptions& opts = {});

inline bool is_justification_undercut(const Argument& attacker, const Argument& target,
                                      const EntailmentOptions& opts = {}) {
  return is_justification_undercut(attacker.claim, target, opts);
}

}  // namespace darg::defaults
