#include "darg/instantiate.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>
#include <tuple>

#include "darg/error.hpp"

namespace darg {

namespace {

const std::string kJustUndercut = "justification-undercut";

std::string support_key(const Payload& p) {
  std::string out;
  for (const std::string& s : payload_support(p)) {
    if (!out.empty()) out += ", ";
    out += s;
  }
  return out;
}

classical::Attack classical_kind(const std::string& name) {
  for (auto k : {classical::Attack::Undercut, classical::Attack::DirectUndercut,
                 classical::Attack::Rebuttal, classical::Attack::Defeater}) {
    if (classical::attack_name(k) == name) return k;
  }
  throw UsageError("unknown classical attack kind " + name);
}

Formula negate(const Formula& f) {
  if (f.kind() == Connective::Not) return f.children().front();
  return Formula::negation(f);
}

void push_unique(std::vector<Formula>& out, const Formula& f) {
  if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
}

// All index combinations of size k drawn from n, in lexicographic order.
void combinations(std::size_t n, std::size_t k, std::vector<std::size_t>& cur, std::size_t from,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == k) {
    visit(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, cur, i + 1, visit);
    cur.pop_back();
  }
}

}  // namespace

Logic logic_of(const BaseKB& kb) {
  switch (kb.index()) {
    case 0: return Logic::Simple;
    case 1: return Logic::Classical;
    case 2: return Logic::Default;
    default: return Logic::Conditional;
  }
}

const std::set<std::string>& known_kinds(Logic l) {
  static const std::set<std::string> simple{"rebut", "undercut"};
  static const std::set<std::string> classical{"defeater", "direct-undercut", "rebuttal",
                                               "undercut"};
  static const std::set<std::string> dflt{kJustUndercut};
  static const std::set<std::string> cond{"canonical-undercut", "direct-rebuttal",
                                          "direct-undercut", "rebuttal", "undercut"};
  switch (l) {
    case Logic::Simple: return simple;
    case Logic::Classical: return classical;
    case Logic::Default: return dflt;
    case Logic::Conditional: return cond;
  }
  return simple;
}

const std::set<std::string>& default_kinds(Logic l) {
  static const std::set<std::string> classical{"direct-undercut", "rebuttal", "undercut"};
  if (l == Logic::Classical) return classical;
  return known_kinds(l);
}

std::set<std::string> effective_kinds(Logic l, const GenerationConfig& cfg) {
  if (cfg.kinds.empty()) return default_kinds(l);
  const auto& known = known_kinds(l);
  for (const std::string& k : cfg.kinds) {
    if (!known.count(k)) {
      throw UsageError("attack kind '" + k + "' is not defined for " +
                       std::string(logic_name(l)) + " logic");
    }
  }
  return cfg.kinds;
}

std::vector<Formula> focal_claims(const BaseKB& kb, const GenerationConfig& cfg) {
  if (!cfg.focal.empty()) {
    std::vector<Formula> out;
    for (const Formula& f : cfg.focal) push_unique(out, f);
    return out;
  }
  std::vector<Formula> premises;
  if (const auto* c = std::get_if<ClassicalBase>(&kb)) {
    for (const Formula& f : c->axioms) push_unique(premises, f);
  } else if (const auto* t = std::get_if<defaults::Theory>(&kb)) {
    for (const Formula& f : t->facts) push_unique(premises, f);
    for (const auto& d : t->defaults) push_unique(premises, d.cons);
  } else {
    return {};
  }
  std::vector<Formula> out = premises;
  for (const Formula& f : premises) push_unique(out, negate(f));
  std::vector<std::size_t> cur;
  for (std::size_t k = 2; k <= cfg.focal_conjunction_size && k <= premises.size(); ++k) {
    combinations(premises.size(), k, cur, 0, [&](const std::vector<std::size_t>& idx) {
      std::vector<Formula> parts;
      for (std::size_t i : idx) parts.push_back(premises[i]);
      push_unique(out, Formula::negation(Formula::conjunction(parts)));
    });
  }
  return out;
}

std::vector<std::string> attack_kinds(const Payload& a, const Payload& b,
                                      const std::set<std::string>& kinds,
                                      const GenerationConfig& cfg) {
  std::vector<std::string> out;
  if (a.index() != b.index()) return out;
  auto keep = [&](std::string_view name) {
    if (kinds.count(std::string(name))) out.emplace_back(name);
  };
  if (const auto* x = std::get_if<simple::Argument>(&a)) {
    for (auto k : simple::attack_kinds(*x, std::get<simple::Argument>(b))) {
      keep(simple::attack_name(k));
    }
  } else if (const auto* x = std::get_if<classical::Argument>(&a)) {
    classical::AttackOptions opts;
    opts.enabled.clear();
    for (const std::string& k : kinds) opts.enabled.insert(classical_kind(k));
    opts.psi_bound = cfg.psi_bound;
    opts.entailment = cfg.entailment;
    for (auto k : classical::attack_kinds(*x, std::get<classical::Argument>(b), opts)) {
      keep(classical::attack_name(k));
    }
  } else if (const auto* x = std::get_if<defaults::Argument>(&a)) {
    if (kinds.count(kJustUndercut) &&
        defaults::is_justification_undercut(*x, std::get<defaults::Argument>(b),
                                            cfg.entailment)) {
      out.push_back(kJustUndercut);
    }
  } else if (const auto* x = std::get_if<preferential::Argument>(&a)) {
    for (auto k : preferential::attack_kinds(*x, std::get<preferential::Argument>(b),
                                             cfg.entailment)) {
      keep(preferential::attack_name(k));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<Payload> generate_payloads(const BaseKB& kb, const GenerationConfig& cfg) {
  std::vector<Payload> out;
  std::visit(
      [&](const auto& base) {
        using T = std::decay_t<decltype(base)>;
        if constexpr (std::is_same_v<T, simple::KnowledgeBase>) {
          for (auto& a : simple::all_arguments(base)) out.emplace_back(std::move(a));
        } else if constexpr (std::is_same_v<T, ClassicalBase>) {
          classical::EnumerationOptions opts{cfg.support_bound, cfg.entailment};
          for (const Formula& claim : focal_claims(kb, cfg)) {
            for (auto& a : classical::arguments(base.axioms, claim, opts)) {
              out.emplace_back(std::move(a));
            }
          }
        } else if constexpr (std::is_same_v<T, defaults::Theory>) {
          defaults::Options opts;
          opts.default_bound = cfg.default_bound;
          opts.support_bound = cfg.support_bound;
          opts.entailment = cfg.entailment;
          for (const Formula& claim : focal_claims(kb, cfg)) {
            for (auto& a : defaults::arguments(base, claim, opts)) out.emplace_back(std::move(a));
          }
        } else {
          preferential::EnumerationOptions opts{cfg.support_bound, cfg.entailment};
          const auto& queries = cfg.focal_conditionals.empty() ? base : cfg.focal_conditionals;
          for (const auto& q : queries) {
            for (auto& a : preferential::arguments(base, q, opts)) out.emplace_back(std::move(a));
          }
        }
      },
      kb);
  return out;
}

}  // namespace

ArgGraph generate_graph(const BaseKB& kb, const GenerationConfig& cfg) {
  const Logic logic = logic_of(kb);
  const std::set<std::string> kinds = effective_kinds(logic, cfg);

  std::vector<Payload> payloads = generate_payloads(kb, cfg);
  std::vector<std::tuple<std::string, std::string, std::size_t>> keys;
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    keys.emplace_back(payload_claim(payloads[i]), support_key(payloads[i]), i);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end(),
                         [](const auto& x, const auto& y) {
                           return std::get<0>(x) == std::get<0>(y) &&
                                  std::get<1>(x) == std::get<1>(y);
                         }),
             keys.end());

  ArgGraph g;
  for (std::size_t k = 0; k < keys.size(); ++k) {
    g.add_node({"A" + std::to_string(k + 1), payloads[std::get<2>(keys[k])]});
  }
  for (const ArgNode& a : g.nodes()) {
    for (const ArgNode& b : g.nodes()) {
      auto found = attack_kinds(a.payload, b.payload, kinds, cfg);
      if (!found.empty()) g.add_attack(a.id, b.id, std::move(found));
    }
  }
  return g;
}

bool is_valid_argument(const Payload& p, const EntailmentOptions& opts) {
  if (const auto* a = std::get_if<simple::Argument>(&p)) {
    return simple::derives(a->support, a->claim) && simple::is_minimal(*a);
  }
  if (const auto* a = std::get_if<classical::Argument>(&p)) {
    return classical::is_argument(*a, opts);
  }
  if (const auto* a = std::get_if<defaults::Argument>(&p)) {
    defaults::Options o;
    o.entailment = opts;
    const defaults::Theory whole = defaults::normalized(a->support);
    for (const auto& found : defaults::arguments(whole, a->claim, o)) {
      if (found.support == whole) return true;
    }
    return false;
  }
  if (const auto* a = std::get_if<preferential::Argument>(&p)) {
    if (a->context != preferential::context_of(a->claim)) return false;
    preferential::EnumerationOptions o;
    o.entailment = opts;
    std::vector<preferential::Conditional> phi = a->conditionals;
    std::sort(phi.begin(), phi.end());
    for (const auto& found : preferential::arguments(a->conditionals, a->claim, o)) {
      std::vector<preferential::Conditional> f = found.conditionals;
      std::sort(f.begin(), f.end());
      if (f == phi) return true;
    }
    return false;
  }
  return false;
}

DescriptiveReport verify_descriptive(const ArgGraph& abstract,
                                     const std::map<std::string, Payload>& assignment,
                                     const GenerationConfig& cfg, bool strict) {
  DescriptiveReport r;
  r.strict = strict;

  std::optional<Logic> logic;
  for (const ArgNode& n : abstract.nodes()) {
    auto it = assignment.find(n.id);
    if (it == assignment.end() || std::holds_alternative<std::monostate>(it->second)) {
      r.unassigned.push_back(n.id);
      continue;
    }
    if (!logic) logic = payload_logic(it->second);
    if (!is_valid_argument(it->second, cfg.entailment)) r.invalid.push_back(n.id);
  }
  const std::set<std::string> kinds =
      logic ? effective_kinds(*logic, cfg) : std::set<std::string>{};

  auto payload_of = [&](const std::string& id) -> const Payload* {
    auto it = assignment.find(id);
    if (it == assignment.end() || std::holds_alternative<std::monostate>(it->second)) {
      return nullptr;
    }
    return &it->second;
  };

  bool all_confirmed = true;
  for (const Attack& e : abstract.attacks()) {
    EdgeCheck c{e.from, e.to, {}, false};
    const Payload* a = payload_of(e.from);
    const Payload* b = payload_of(e.to);
    if (a && b) c.kinds = attack_kinds(*a, *b, kinds, cfg);
    c.confirmed = !c.kinds.empty();
    all_confirmed = all_confirmed && c.confirmed;
    r.edges.push_back(std::move(c));
  }
  for (const ArgNode& x : abstract.nodes()) {
    const Payload* a = payload_of(x.id);
    if (!a) continue;
    for (const ArgNode& y : abstract.nodes()) {
      const Payload* b = payload_of(y.id);
      if (!b || abstract.attacks(x.id, y.id)) continue;
      auto found = attack_kinds(*a, *b, kinds, cfg);
      if (!found.empty()) r.surplus.push_back({x.id, y.id, std::move(found)});
    }
  }
  r.passed = all_confirmed && r.invalid.empty() && r.unassigned.empty() &&
             (!strict || r.surplus.empty());
  return r;
}

}  // namespace darg
