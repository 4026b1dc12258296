#include "darg/system_p.hpp"

#include <algorithm>
#include <cstdint>

#include "darg/error.hpp"

namespace darg::preferential {

std::string Conditional::str() const { return ante.str() + " => " + cons.str(); }

std::string Argument::str() const {
  std::string items;
  for (const Conditional& c : conditionals) {
    if (!items.empty()) items += ", ";
    items += c.str();
  }
  for (const Formula& f : context) {
    if (!items.empty()) items += ", ";
    items += f.str();
  }
  return "<{" + items + "}, " + claim.str() + ">";
}

bool is_tolerated(const Conditional& c, std::span<const Conditional> kb,
                  const EntailmentOptions& opts) {
  std::vector<Formula> gamma{Formula::conjunction({c.ante, c.cons})};
  for (const Conditional& d : kb) gamma.push_back(d.material());
  return is_consistent(gamma, opts);
}

ToleranceResult tolerance_partition(std::span<const Conditional> kb,
                                    const EntailmentOptions& opts) {
  ToleranceResult out;
  std::vector<Conditional> remaining(kb.begin(), kb.end());
  while (!remaining.empty()) {
    std::vector<Conditional> layer;
    std::vector<Conditional> rest;
    for (const Conditional& c : remaining) {
      (is_tolerated(c, remaining, opts) ? layer : rest).push_back(c);
    }
    if (layer.empty()) {
      out.remainder = std::move(remaining);
      break;
    }
    out.layers.push_back(std::move(layer));
    remaining = std::move(rest);
  }
  return out;
}

// Every preferential model of a base leaves the antecedents of its
// never-tolerated remainder without worlds, and the ranking built from the
// tolerance layers is a model in which every other world survives. So a
// base forces `ante` impossible exactly when the negated remainder
// antecedents entail !ante; the query follows when adding ante => !cons
// forces that.
PEntailment p_entailment(std::span<const Conditional> kb, const Conditional& query,
                         const EntailmentOptions& opts) {
  PEntailment out;
  out.inconsistent_base = !tolerance_partition(kb, opts).consistent();

  std::vector<Conditional> extended(kb.begin(), kb.end());
  extended.push_back({query.ante, Formula::negation(query.cons)});
  const ToleranceResult part = tolerance_partition(extended, opts);
  std::vector<Formula> possible;
  for (const Conditional& r : part.remainder) possible.push_back(Formula::negation(r.ante));
  out.entailed = entails(possible, Formula::negation(query.ante), opts);
  return out;
}

std::vector<Formula> context_of(const Conditional& claim) { return conjuncts(claim.ante); }

std::vector<Argument> arguments(std::span<const Conditional> kb, const Conditional& query,
                                const EnumerationOptions& opts) {
  std::vector<Conditional> base(kb.begin(), kb.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  const std::size_t n = base.size();
  if (n > opts.support_bound || n > 62) {
    throw ResourceLimitError("preferential argument enumeration over " + std::to_string(n) +
                             " conditionals exceeds the bound of " +
                             std::to_string(opts.support_bound));
  }
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) masks.push_back(mask);
  std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    return __builtin_popcountll(a) < __builtin_popcountll(b);
  });

  std::vector<std::uint64_t> found;
  std::vector<Argument> out;
  for (std::uint64_t mask : masks) {
    if (std::any_of(found.begin(), found.end(),
                    [&](std::uint64_t f) { return (mask & f) == f; })) {
      continue;
    }
    std::vector<Conditional> phi;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) phi.push_back(base[i]);
    }
    if (!p_entails(phi, query, opts.entailment)) continue;
    found.push_back(mask);
    out.push_back({std::move(phi), context_of(query), query});
  }
  return out;
}

std::string_view attack_name(Attack k) {
  switch (k) {
    case Attack::Rebuttal: return "rebuttal";
    case Attack::DirectRebuttal: return "direct-rebuttal";
    case Attack::Undercut: return "undercut";
    case Attack::CanonicalUndercut: return "canonical-undercut";
    case Attack::DirectUndercut: return "direct-undercut";
  }
  return "?";
}

std::set<Attack> attack_kinds(const Argument& attacker, const Argument& target,
                              const EntailmentOptions& opts) {
  const Formula& gamma = attacker.claim.ante;
  const Formula& delta = attacker.claim.cons;
  const Formula& alpha = target.claim.ante;
  const Formula& beta = target.claim.cons;
  std::set<Attack> out;

  const Formula not_beta = Formula::negation(beta);
  if (entails(gamma, alpha, opts)) {
    if (entails(delta, not_beta, opts)) out.insert(Attack::Rebuttal);
    if (equivalent(delta, not_beta, opts)) out.insert(Attack::DirectRebuttal);
  }
  const Formula not_alpha = Formula::negation(alpha);
  if (entails(delta, not_alpha, opts)) out.insert(Attack::Undercut);
  if (equivalent(delta, not_alpha, opts)) out.insert(Attack::CanonicalUndercut);
  for (const Formula& sigma : target.context) {
    if (equivalent(delta, Formula::negation(sigma), opts)) {
      out.insert(Attack::DirectUndercut);
      break;
    }
  }
  return out;
}

}  // namespace darg::preferential
