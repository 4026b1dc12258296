#include "darg/simple_logic.hpp"

#include <algorithm>

#include "darg/error.hpp"

namespace darg::simple {

std::string Rule::str() const {
  std::string out;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (i) out += " & ";
    out += body[i].str();
  }
  return out + " -> " + head.str();
}

Rule rule_from_formula(const Formula& f) {
  if (f.kind() != Connective::Implies) throw UsageError("simple rule must be an implication: " + f.str());
  const Formula& lhs = f.children()[0];
  const Formula& rhs = f.children()[1];
  if (!is_literal(rhs)) throw UsageError("simple rule head must be a literal: " + f.str());
  Rule r;
  r.head = as_literal(rhs);
  for (const Formula& c : conjuncts(lhs)) {
    if (!is_literal(c)) throw UsageError("simple rule body must be a conjunction of literals: " + f.str());
    r.body.push_back(as_literal(c));
  }
  return r;
}

Formula rule_to_formula(const Rule& r) {
  std::vector<Formula> body;
  for (const Literal& l : r.body) body.push_back(l.to_formula());
  return Formula::implication(Formula::conjunction(std::move(body)), r.head.to_formula());
}

bool KnowledgeBase::contains(const KnowledgeBase& other) const {
  return std::includes(facts.begin(), facts.end(), other.facts.begin(), other.facts.end()) &&
         std::includes(rules.begin(), rules.end(), other.rules.begin(), other.rules.end());
}

std::vector<std::string> KnowledgeBase::items() const {
  std::vector<std::string> out;
  for (const Literal& l : facts) out.push_back(l.str());
  for (const Rule& r : rules) out.push_back(r.str());
  return out;
}

std::string KnowledgeBase::str() const {
  std::string out = "{";
  bool first = true;
  for (const std::string& s : items()) {
    if (!first) out += ", ";
    first = false;
    out += s;
  }
  return out + "}";
}

std::string Argument::str() const { return "<" + support.str() + ", " + claim.str() + ">"; }

std::set<Literal> consequences(const KnowledgeBase& delta) {
  std::set<Literal> derived;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : delta.rules) {
      if (derived.contains(r.head)) continue;
      const bool applicable = std::all_of(r.body.begin(), r.body.end(), [&](const Literal& l) {
        return delta.facts.contains(l) || derived.contains(l);
      });
      if (applicable) {
        derived.insert(r.head);
        changed = true;
      }
    }
  }
  return derived;
}

bool derives(const KnowledgeBase& delta, const Literal& goal) {
  return consequences(delta).contains(goal);
}

namespace {

KnowledgeBase merge(const KnowledgeBase& a, const KnowledgeBase& b) {
  KnowledgeBase out = a;
  out.facts.insert(b.facts.begin(), b.facts.end());
  out.rules.insert(b.rules.begin(), b.rules.end());
  return out;
}

std::vector<KnowledgeBase> minimal_only(std::vector<KnowledgeBase> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const KnowledgeBase& a, const KnowledgeBase& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<KnowledgeBase> out;
  for (const KnowledgeBase& s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(),
                                       [&](const KnowledgeBase& m) { return s.contains(m); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

// Supports deriving `goal` through some rule, never re-deriving a literal
// already on the derivation path. Every minimal support arises this way
// because a stage-minimal derivation never repeats a literal on a branch.
std::vector<KnowledgeBase> derivations(const KnowledgeBase& delta, const Literal& goal,
                                       std::set<Literal>& path) {
  std::vector<KnowledgeBase> result;
  for (const Rule& r : delta.rules) {
    if (r.head != goal) continue;
    KnowledgeBase seed;
    seed.rules.insert(r);
    std::vector<KnowledgeBase> partial{seed};
    for (const Literal& b : r.body) {
      std::vector<KnowledgeBase> options;
      if (delta.facts.contains(b)) {
        KnowledgeBase f;
        f.facts.insert(b);
        options.push_back(std::move(f));
      }
      if (!path.contains(b)) {
        path.insert(b);
        for (KnowledgeBase& d : derivations(delta, b, path)) options.push_back(std::move(d));
        path.erase(b);
      }
      std::vector<KnowledgeBase> next;
      for (const KnowledgeBase& p : partial) {
        for (const KnowledgeBase& o : options) next.push_back(merge(p, o));
      }
      partial = minimal_only(std::move(next));
      if (partial.empty()) break;
    }
    for (KnowledgeBase& p : partial) result.push_back(std::move(p));
  }
  return minimal_only(std::move(result));
}

void sort_arguments(std::vector<Argument>& args) {
  std::sort(args.begin(), args.end(), [](const Argument& a, const Argument& b) {
    const std::string ca = a.claim.str(), cb = b.claim.str();
    if (ca != cb) return ca < cb;
    return a.support.str() < b.support.str();
  });
}

}  // namespace

bool is_minimal(const Argument& a) {
  if (!derives(a.support, a.claim)) return false;
  for (const Literal& f : a.support.facts) {
    KnowledgeBase sub = a.support;
    sub.facts.erase(f);
    if (derives(sub, a.claim)) return false;
  }
  for (const Rule& r : a.support.rules) {
    KnowledgeBase sub = a.support;
    sub.rules.erase(r);
    if (derives(sub, a.claim)) return false;
  }
  return true;
}

std::vector<Argument> arguments_for(const KnowledgeBase& delta, const Literal& goal) {
  std::vector<Argument> out;
  std::set<Literal> path{goal};
  for (KnowledgeBase& s : derivations(delta, goal, path)) {
    Argument a{std::move(s), goal};
    if (is_minimal(a)) out.push_back(std::move(a));
  }
  sort_arguments(out);
  return out;
}

std::vector<Argument> all_arguments(const KnowledgeBase& delta) {
  std::vector<Argument> out;
  for (const Literal& goal : consequences(delta)) {
    for (Argument& a : arguments_for(delta, goal)) out.push_back(std::move(a));
  }
  sort_arguments(out);
  return out;
}

std::string_view attack_name(Attack k) {
  return k == Attack::Undercut ? "undercut" : "rebut";
}

std::set<Attack> attack_kinds(const Argument& a, const Argument& b) {
  std::set<Attack> out;
  const Literal target = a.claim.complement();
  for (const Rule& r : b.support.rules) {
    if (std::find(r.body.begin(), r.body.end(), target) != r.body.end()) {
      out.insert(Attack::Undercut);
      break;
    }
  }
  if (a.claim == b.claim.complement()) out.insert(Attack::Rebut);
  return out;
}

}  // namespace darg::simple
