#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "darg/entailment.hpp"
#include "darg/formula.hpp"

namespace darg::preferential {

/// ante => cons
struct Conditional {
  Formula ante;
  Formula cons;

  Formula material() const { return Formula::implication(ante, cons); }
  std::string str() const;

  friend bool operator==(const Conditional&, const Conditional&) = default;
  friend auto operator<=>(const Conditional&, const Conditional&) = default;
};

using ConditionalBase = std::vector<Conditional>;

/// ante & cons is satisfiable together with the material counterparts of `kb`.
bool is_tolerated(const Conditional& c, std::span<const Conditional> kb,
                  const EntailmentOptions& opts = {});

struct ToleranceResult {
  /// Layer i holds the conditionals tolerated by everything not in layers < i.
  std::vector<std::vector<Conditional>> layers;
  /// Conditionals never tolerated; their antecedents are impossible.
  std::vector<Conditional> remainder;

  bool consistent() const { return remainder.empty(); }
};

ToleranceResult tolerance_partition(std::span<const Conditional> kb,
                                    const EntailmentOptions& opts = {});

inline bool epsilon_consistent(std::span<const Conditional> kb,
                               const EntailmentOptions& opts = {}) {
  return tolerance_partition(kb, opts).consistent();
}

struct PEntailment {
  bool entailed = false;
  /// The base itself is not epsilon-consistent.
  bool inconsistent_base = false;
};

/// System P consequence. `query` follows iff adding ante => !cons forces
/// the antecedent to be impossible.
PEntailment p_entailment(std::span<const Conditional> kb, const Conditional& query,
                         const EntailmentOptions& opts = {});

inline bool p_entails(std::span<const Conditional> kb, const Conditional& query,
                      const EntailmentOptions& opts = {}) {
  return p_entailment(kb, query, opts).entailed;
}

/// <Phi u Psi, claim>
struct Argument {
  std::vector<Conditional> conditionals;  // Phi
  std::vector<Formula> context;           // Psi
  Conditional claim;

  std::string str() const;

  friend bool operator==(const Argument&, const Argument&) = default;
  friend auto operator<=>(const Argument&, const Argument&) = default;
};

/// Psi for a claim: the top-level conjuncts of its antecedent.
std::vector<Formula> context_of(const Conditional& claim);

struct EnumerationOptions {
  std::size_t support_bound = 16;
  EntailmentOptions entailment;
};

/// One argument per subset-minimal Phi within `kb` that p-entails `query`.
std::vector<Argument> arguments(std::span<const Conditional> kb, const Conditional& query,
                                const EnumerationOptions& opts = {});

enum class Attack { Rebuttal, DirectRebuttal, Undercut, CanonicalUndercut, DirectUndercut };

std::string_view attack_name(Attack k);

/// Kinds by which `attacker` (gamma => delta) attacks `target`
/// (<Phi u Psi, alpha => beta>):
///   rebuttal            delta |- !beta and gamma |- alpha
///   direct-rebuttal     delta == !beta and gamma |- alpha
///   undercut            delta |- !alpha
///   canonical-undercut  delta == !alpha
///   direct-undercut     delta == !sigma for some sigma in Psi
std::set<Attack> attack_kinds(const Argument& attacker, const Argument& target,
                              const EntailmentOptions& opts = {});

}  // namespace darg::preferential
