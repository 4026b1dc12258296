#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "darg/entailment.hpp"
#include "darg/formula.hpp"

namespace darg::classical {

/// Support is kept sorted and duplicate-free.
struct Argument {
  std::vector<Formula> support;
  Formula claim;

  std::string str() const;
  friend bool operator==(const Argument&, const Argument&) = default;
  friend auto operator<=>(const Argument&, const Argument&) = default;
};

Argument make_argument(std::vector<Formula> support, Formula claim);

struct EnumerationOptions {
  /// Largest knowledge base whose subsets are enumerated.
  std::size_t support_bound = 16;
  EntailmentOptions entailment;
};

/// Every minimal consistent subset of `delta` entailing `claim`, by
/// increasing cardinality.
std::vector<Argument> arguments(std::span<const Formula> delta, const Formula& claim,
                                const EnumerationOptions& opts = {});

/// Entailment, consistency and subset-minimality of the support.
bool is_argument(const Argument& a, const EntailmentOptions& opts = {});

enum class Attack { Undercut, DirectUndercut, Rebuttal, Defeater };

std::string_view attack_name(Attack k);

struct AttackOptions {
  /// Defeater is opt-in.
  std::set<Attack> enabled = {Attack::Undercut, Attack::DirectUndercut, Attack::Rebuttal};
  /// Largest attacked support for which undercut enumerates subsets.
  std::size_t psi_bound = 12;
  EntailmentOptions entailment;
};

/// Enabled kinds by which `a` attacks `b`:
///   undercut        claim(a) == !(/\ psi) for some non-empty psi in support(b)
///   direct-undercut claim(a) == !phi for some phi in support(b)
///   rebuttal        claim(a) == !claim(b)
///   defeater        claim(a) |- !(/\ psi) for some psi in support(b)
std::set<Attack> attack_kinds(const Argument& a, const Argument& b,
                              const AttackOptions& opts = {});

}  // namespace darg::classical
