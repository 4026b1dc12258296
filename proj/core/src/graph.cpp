#include "darg/graph.hpp"

#include <algorithm>
#include <iterator>

#include "darg/error.hpp"

namespace darg {

std::string_view logic_name(Logic l) {
  switch (l) {
    case Logic::Simple: return "simple";
    case Logic::Classical: return "classical";
    case Logic::Default: return "default";
    case Logic::Conditional: return "conditional";
  }
  return "?";
}

std::optional<Logic> parse_logic(std::string_view s) {
  for (Logic l : {Logic::Simple, Logic::Classical, Logic::Default, Logic::Conditional}) {
    if (logic_name(l) == s) return l;
  }
  return std::nullopt;
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

std::optional<Logic> payload_logic(const Payload& p) {
  return std::visit(overloaded{
                        [](const std::monostate&) -> std::optional<Logic> { return std::nullopt; },
                        [](const simple::Argument&) -> std::optional<Logic> { return Logic::Simple; },
                        [](const classical::Argument&) -> std::optional<Logic> { return Logic::Classical; },
                        [](const defaults::Argument&) -> std::optional<Logic> { return Logic::Default; },
                        [](const preferential::Argument&) -> std::optional<Logic> { return Logic::Conditional; },
                    },
                    p);
}

std::string payload_claim(const Payload& p) {
  return std::visit(overloaded{
                        [](const std::monostate&) { return std::string(); },
                        [](const simple::Argument& a) { return a.claim.str(); },
                        [](const classical::Argument& a) { return a.claim.str(); },
                        [](const defaults::Argument& a) { return a.claim.str(); },
                        [](const preferential::Argument& a) { return a.claim.str(); },
                    },
                    p);
}

std::vector<std::string> payload_support(const Payload& p) {
  std::vector<std::string> out;
  std::visit(overloaded{
                 [](const std::monostate&) {},
                 [&](const simple::Argument& a) { out = a.support.items(); },
                 [&](const classical::Argument& a) {
                   for (const Formula& f : a.support) out.push_back(f.str());
                 },
                 [&](const defaults::Argument& a) {
                   for (const auto& d : a.support.defaults) out.push_back(d.str());
                   for (const Formula& f : a.support.facts) out.push_back(f.str());
                 },
                 [&](const preferential::Argument& a) {
                   for (const auto& c : a.conditionals) out.push_back(c.str());
                   for (const Formula& f : a.context) out.push_back(f.str());
                 },
             },
             p);
  return out;
}

void ArgGraph::add_node(ArgNode node) {
  if (node.id.empty()) throw UsageError("argument node with empty id");
  if (index_of(node.id)) throw UsageError("duplicate argument id " + node.id);
  nodes_.push_back(std::move(node));
}

void ArgGraph::add_attack(const std::string& from, const std::string& to,
                          std::vector<std::string> kinds) {
  if (!index_of(from)) throw UsageError("attack from unknown argument " + from);
  if (!index_of(to)) throw UsageError("attack on unknown argument " + to);
  for (Attack& a : attacks_) {
    if (a.from == from && a.to == to) {
      a.kinds.insert(a.kinds.end(), kinds.begin(), kinds.end());
      std::sort(a.kinds.begin(), a.kinds.end());
      a.kinds.erase(std::unique(a.kinds.begin(), a.kinds.end()), a.kinds.end());
      return;
    }
  }
  std::sort(kinds.begin(), kinds.end());
  kinds.erase(std::unique(kinds.begin(), kinds.end()), kinds.end());
  attacks_.push_back({from, to, std::move(kinds)});
}

std::optional<std::size_t> ArgGraph::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id == id) return i;
  }
  return std::nullopt;
}

const ArgNode& ArgGraph::node(std::string_view id) const {
  auto i = index_of(id);
  if (!i) throw UsageError("unknown argument " + std::string(id));
  return nodes_[*i];
}

bool ArgGraph::attacks(std::string_view from, std::string_view to) const {
  return std::any_of(attacks_.begin(), attacks_.end(),
                     [&](const Attack& a) { return a.from == from && a.to == to; });
}

std::vector<std::vector<std::size_t>> ArgGraph::attackers() const {
  std::vector<std::vector<std::size_t>> out(nodes_.size());
  for (const Attack& a : attacks_) out[*index_of(a.to)].push_back(*index_of(a.from));
  for (auto& v : out) std::sort(v.begin(), v.end());
  return out;
}

std::string_view semantics_name(Semantics s) {
  switch (s) {
    case Semantics::Grounded: return "grounded";
    case Semantics::Complete: return "complete";
    case Semantics::Preferred: return "preferred";
    case Semantics::Stable: return "stable";
  }
  return "?";
}

std::optional<Semantics> parse_semantics(std::string_view s) {
  for (Semantics x : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred,
                      Semantics::Stable}) {
    if (semantics_name(x) == s) return x;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> ids_of(const ArgGraph& g, const std::vector<bool>& member) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < member.size(); ++i) {
    if (member[i]) out.push_back(g.nodes()[i].id);
  }
  return out;
}

enum Label : signed char { kNone = -1, kOut = 0, kIn = 1, kUndec = 2 };

// Three-valued labelling search: IN iff every attacker OUT, OUT iff some
// attacker IN, UNDEC otherwise. Complete extensions are the IN sets.
class Labeller {
 public:
  Labeller(const ArgGraph& g, bool allow_undec)
      : n_(g.size()), attackers_(g.attackers()), targets_(n_), allow_undec_(allow_undec) {
    for (std::size_t t = 0; t < n_; ++t) {
      for (std::size_t a : attackers_[t]) targets_[a].push_back(t);
    }
    label_.assign(n_, kNone);
  }

  std::vector<std::vector<bool>> run() {
    search(0);
    return found_;
  }

 private:
  bool legal(std::size_t x) const {
    const Label l = label_[x];
    if (l == kNone) return true;
    bool any_in = false, all_out = true, all_known = true;
    for (std::size_t a : attackers_[x]) {
      const Label la = label_[a];
      if (la == kIn) any_in = true;
      if (la != kOut) all_out = false;
      if (la == kNone) all_known = false;
    }
    switch (l) {
      case kIn:
        for (std::size_t a : attackers_[x]) {
          if (label_[a] == kIn || label_[a] == kUndec) return false;
        }
        return true;
      case kOut: return any_in || !all_known;
      case kUndec: return !any_in && !(all_known && all_out);
      default: return true;
    }
  }

  void search(std::size_t i) {
    if (i == n_) {
      std::vector<bool> in(n_);
      for (std::size_t k = 0; k < n_; ++k) in[k] = label_[k] == kIn;
      found_.push_back(std::move(in));
      return;
    }
    for (Label l : {kIn, kOut, kUndec}) {
      if (l == kUndec && !allow_undec_) continue;
      label_[i] = l;
      bool ok = legal(i);
      for (std::size_t t : targets_[i]) ok = ok && legal(t);
      if (ok) search(i + 1);
    }
    label_[i] = kNone;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> attackers_;
  std::vector<std::vector<std::size_t>> targets_;
  bool allow_undec_;
  std::vector<Label> label_;
  std::vector<std::vector<bool>> found_;
};

bool subset_of(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<std::string> grounded_extension(const ArgGraph& g) {
  const auto attackers = g.attackers();
  const std::size_t n = g.size();
  std::vector<bool> in(n, false);
  while (true) {
    // Nodes attacked by the current set.
    std::vector<bool> defeated(n, false);
    for (std::size_t t = 0; t < n; ++t) {
      for (std::size_t a : attackers[t]) {
        if (in[a]) defeated[t] = true;
      }
    }
    std::vector<bool> next(n, false);
    for (std::size_t x = 0; x < n; ++x) {
      next[x] = std::all_of(attackers[x].begin(), attackers[x].end(),
                            [&](std::size_t a) { return defeated[a]; });
    }
    if (next == in) break;
    in = std::move(next);
  }
  return ids_of(g, in);
}

ExtensionSet extensions(const ArgGraph& g, Semantics s, const SemanticsOptions& opts) {
  ExtensionSet out;
  out.semantics = s;
  if (s == Semantics::Grounded) {
    out.extensions.push_back(grounded_extension(g));
    return out;
  }
  if (g.size() > opts.node_bound) {
    throw ResourceLimitError("semantics enumeration over " + std::to_string(g.size()) +
                             " arguments exceeds the bound of " + std::to_string(opts.node_bound));
  }
  std::vector<std::vector<bool>> sets = Labeller(g, s != Semantics::Stable).run();
  if (s == Semantics::Preferred) {
    std::vector<std::vector<bool>> maximal;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < sets.size() && !dominated; ++j) {
        dominated = i != j && sets[i] != sets[j] && subset_of(sets[i], sets[j]);
      }
      if (!dominated) maximal.push_back(sets[i]);
    }
    sets = std::move(maximal);
  }
  for (const auto& m : sets) out.extensions.push_back(ids_of(g, m));
  std::sort(out.extensions.begin(), out.extensions.end());
  out.extensions.erase(std::unique(out.extensions.begin(), out.extensions.end()),
                       out.extensions.end());
  return out;
}

std::vector<std::string> accepted_claims(const ArgGraph& g, Semantics s, AcceptanceMode mode,
                                         const SemanticsOptions& opts) {
  const ExtensionSet es = extensions(g, s, opts);
  auto claims_of = [&](const std::vector<std::string>& ext) {
    std::set<std::string> out;
    for (const std::string& id : ext) {
      const ArgNode& n = g.node(id);
      std::string c = payload_claim(n.payload);
      out.insert(c.empty() ? n.id : c);
    }
    return out;
  };
  std::set<std::string> acc;
  for (std::size_t i = 0; i < es.extensions.size(); ++i) {
    const std::set<std::string> c = claims_of(es.extensions[i]);
    if (mode == AcceptanceMode::Credulous || i == 0) {
      acc.insert(c.begin(), c.end());
    } else {
      std::set<std::string> both;
      std::set_intersection(acc.begin(), acc.end(), c.begin(), c.end(),
                            std::inserter(both, both.begin()));
      acc = std::move(both);
    }
  }
  return {acc.begin(), acc.end()};
}

}  // namespace darg
