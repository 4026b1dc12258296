#include "darg/default_logic.hpp"

#include <algorithm>
#include <cstdint>

#include "darg/error.hpp"

namespace darg::defaults {

namespace {

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::string join_defaults(std::span<const DefaultRule> ds) {
  std::string out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    if (i) out += ", ";
    out += ds[i].str();
  }
  return out;
}

}  // namespace

std::string DefaultRule::str() const {
  return pre.str() + " : " + just.str() + " / " + cons.str();
}

Theory normalized(Theory t) {
  sort_unique(t.defaults);
  sort_unique(t.facts);
  return t;
}

bool Theory::contains(const Theory& other) const {
  return std::includes(defaults.begin(), defaults.end(), other.defaults.begin(),
                       other.defaults.end()) &&
         std::includes(facts.begin(), facts.end(), other.facts.begin(), other.facts.end());
}

std::string Theory::str() const {
  return "({" + join_defaults(defaults) + "}, {" + join(facts, ", ") + "})";
}

std::vector<Formula> Extension::base() const {
  std::vector<Formula> out = facts;
  for (const DefaultRule& d : generating) out.push_back(d.cons);
  return out;
}

bool Extension::entails(const Formula& f, const EntailmentOptions& opts) const {
  if (inconsistent) return true;
  return darg::entails(base(), f, opts);
}

std::string Extension::str() const {
  if (inconsistent) return "Cn({" + join(facts, ", ") + "}) [inconsistent]";
  return "Cn({" + join(base(), ", ") + "})";
}

Extension gamma(const Theory& theory, std::span<const Formula> e_base,
                const EntailmentOptions& opts) {
  const std::size_t n = theory.defaults.size();
  std::vector<bool> blocked(n);
  for (std::size_t i = 0; i < n; ++i) {
    blocked[i] = darg::entails(e_base, Formula::negation(theory.defaults[i].just), opts);
  }
  Extension out;
  out.facts = theory.facts;
  std::vector<Formula> current = theory.facts;
  std::vector<bool> applied(n, false);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (applied[i] || blocked[i]) continue;
      if (!darg::entails(current, theory.defaults[i].pre, opts)) continue;
      applied[i] = true;
      changed = true;
      current.push_back(theory.defaults[i].cons);
      out.generating.push_back(theory.defaults[i]);
    }
  }
  out.inconsistent = !is_consistent(current, opts);
  return out;
}

std::vector<Extension> extensions(const Theory& input, const Options& opts) {
  const Theory theory = normalized(input);
  const auto& eo = opts.entailment;
  const std::size_t n = theory.defaults.size();
  if (n > opts.default_bound || n > 62) {
    throw ResourceLimitError("extension enumeration over " + std::to_string(n) +
                             " defaults exceeds the bound of " + std::to_string(opts.default_bound));
  }
  if (!is_consistent(theory.facts, eo)) {
    Extension e;
    e.facts = theory.facts;
    e.inconsistent = true;
    return {e};
  }

  std::vector<bool> blocked(n);
  std::vector<Extension> out;
  // A candidate generating set S is kept iff Gamma(Cn(W + cons(S))) applies
  // exactly S; every extension is found once, from its own generating set.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Formula> e_base = theory.facts;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) e_base.push_back(theory.defaults[i].cons);
    }
    if (!is_consistent(e_base, eo)) continue;

    bool reject = false;
    for (std::size_t i = 0; i < n && !reject; ++i) {
      blocked[i] = darg::entails(e_base, Formula::negation(theory.defaults[i].just), eo);
      if (blocked[i] && (mask >> i & 1U)) reject = true;
    }
    if (reject) continue;

    Extension ext;
    ext.facts = theory.facts;
    std::vector<Formula> current = theory.facts;
    std::uint64_t applied = 0;
    bool changed = true;
    while (changed && !reject) {
      changed = false;
      for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        if ((applied & bit) || blocked[i]) continue;
        if (!darg::entails(current, theory.defaults[i].pre, eo)) continue;
        if (!(mask & bit)) {
          reject = true;
          break;
        }
        applied |= bit;
        changed = true;
        current.push_back(theory.defaults[i].cons);
        ext.generating.push_back(theory.defaults[i]);
      }
    }
    if (reject || applied != mask) continue;
    out.push_back(std::move(ext));
  }
  return out;
}

bool verify_extension(const Theory& theory, const Extension& ext, const EntailmentOptions& opts) {
  std::vector<Formula> prefix = ext.facts;
  for (const DefaultRule& d : ext.generating) {
    if (!darg::entails(prefix, d.pre, opts)) return false;
    prefix.push_back(d.cons);
  }
  const std::vector<Formula> e_base = ext.base();
  const Extension g = gamma(theory, e_base, opts);
  if (ext.inconsistent || g.inconsistent) return ext.inconsistent && g.inconsistent;
  return equivalent_sets(g.base(), e_base, opts);
}

Derivation derive(const Theory& theory, const Formula& f, Mode mode, const Options& opts) {
  const std::vector<Extension> exts = extensions(theory, opts);
  Derivation d;
  d.extension_count = exts.size();
  if (exts.empty()) {
    d.no_extension = true;
    return d;
  }
  for (std::size_t i = 0; i < exts.size(); ++i) {
    const bool in = exts[i].entails(f, opts.entailment);
    if (mode == Mode::Credulous && in) {
      d.holds = true;
      d.witness = i;
      return d;
    }
    if (mode == Mode::Skeptical && !in) {
      d.witness = i;
      return d;
    }
  }
  d.holds = mode == Mode::Skeptical;
  return d;
}

std::string Argument::str() const {
  std::string items = join_defaults(support.defaults);
  if (!support.defaults.empty() && !support.facts.empty()) items += ", ";
  items += join(support.facts, ", ");
  return "<{" + items + "}, " + claim.str() + ">";
}

std::vector<Argument> arguments(const Theory& input, const Formula& claim, const Options& opts) {
  const Theory theory = normalized(input);
  const std::size_t nd = theory.defaults.size();
  const std::size_t m = theory.size();
  if (m > opts.support_bound || m > 62) {
    throw ResourceLimitError("default argument enumeration over " + std::to_string(m) +
                             " premises exceeds the bound of " + std::to_string(opts.support_bound));
  }
  std::vector<std::uint64_t> masks;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) masks.push_back(mask);
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
    Theory sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1U)) continue;
      if (i < nd) sub.defaults.push_back(theory.defaults[i]);
      else sub.facts.push_back(theory.facts[i - nd]);
    }
    if (!is_consistent(sub.facts, opts.entailment)) continue;
    if (!derives(sub, claim, Mode::Credulous, opts)) continue;
    found.push_back(mask);
    out.push_back({std::move(sub), claim});
  }
  return out;
}

bool is_justification_undercut(const Formula& attacker_claim, const Argument& target,
                               const EntailmentOptions& opts) {
  for (const DefaultRule& d : target.default_rules()) {
    if (darg::entails(attacker_claim, Formula::negation(d.just), opts)) return true;
  }
  return false;
}

}  // namespace darg::defaults
