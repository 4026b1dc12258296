#include "darg/commands.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "darg/error.hpp"
#include "darg/parser.hpp"
#include "darg/render.hpp"

namespace darg {

namespace {

using Json = nlohmann::ordered_json;

std::string braces(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ", ";
    out += ids[i];
  }
  return out + "}";
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Format output_format(const CommandOptions& opts, bool allow_dot) {
  const Format f = parse_format(opts.format);
  if (f == Format::Dot && !allow_dot) throw UsageError("dot output is only available for 'graph'");
  return f;
}

const std::string& require_claim(const CommandOptions& opts, std::string_view command) {
  if (!opts.claim || opts.claim->empty()) {
    throw UsageError(std::string(command) + " requires a claim argument");
  }
  return *opts.claim;
}

void require_logic(const KBDocument& doc, Logic l, std::string_view command) {
  if (doc.logic != l) {
    throw UsageError(std::string(command) + " needs a " + std::string(logic_name(l)) +
                     " knowledge base, not " + std::string(logic_name(doc.logic)));
  }
}

preferential::Conditional parse_conditional(const std::string& text) {
  FormulaParser p(text);
  Formula ante = p.formula();
  p.expect(TokenKind::Cond);
  Formula cons = p.formula();
  p.expect_end();
  return {std::move(ante), std::move(cons)};
}

// Canonical claim text as payload_claim would print it.
std::string canonical_claim(const KBDocument& doc, const std::string& text) {
  switch (doc.logic) {
    case Logic::Simple: {
      const Formula f = parse_formula(text);
      if (!is_literal(f)) throw UsageError("simple-logic claims are literals");
      return as_literal(f).str();
    }
    case Logic::Conditional: return parse_conditional(text).str();
    default: return parse_formula(text).str();
  }
}

Semantics semantics_of(const CommandOptions& opts) {
  if (!opts.semantics) return Semantics::Grounded;
  const auto s = parse_semantics(*opts.semantics);
  if (!s) {
    throw UsageError("unknown semantics '" + *opts.semantics +
                     "' (expected grounded, complete, preferred or stable)");
  }
  return *s;
}

AcceptanceMode acceptance_mode(const CommandOptions& opts) {
  if (opts.skeptical || opts.mode == "skeptical") return AcceptanceMode::Skeptical;
  if (opts.mode == "credulous") return AcceptanceMode::Credulous;
  throw UsageError("unknown mode '" + opts.mode + "' (expected credulous or skeptical)");
}

Json node_json(const ArgNode& n) {
  Json j;
  j["id"] = n.id;
  j["support"] = payload_support(n.payload);
  j["claim"] = payload_claim(n.payload);
  return j;
}

std::string node_text(const ArgNode& n) {
  return n.id + ": <" + braces(payload_support(n.payload)) + ", " + payload_claim(n.payload) + ">";
}

QueryResult cmd_args(const KBDocument& doc, const CommandOptions& opts) {
  const Format f = output_format(opts, false);
  QueryResult r;
  std::vector<Payload> found;
  if (opts.claim) {
    GenerationConfig cfg = doc.config;
    if (doc.logic == Logic::Conditional) {
      cfg.focal_conditionals = {parse_conditional(*opts.claim)};
    } else if (doc.logic != Logic::Simple) {
      cfg.focal = {parse_formula(*opts.claim)};
    }
    const ArgGraph g = generate_graph(doc.kb, cfg);
    const std::string want = canonical_claim(doc, *opts.claim);
    ArgGraph kept;
    for (const ArgNode& n : g.nodes()) {
      if (payload_claim(n.payload) == want) kept.add_node(n);
    }
    r.verdict = kept.size() > 0;
    r.exit_code = *r.verdict ? kExitOk : kExitFalse;
    if (f == Format::Json) {
      Json j;
      j["claim"] = want;
      j["arguments"] = Json::array();
      for (const ArgNode& n : kept.nodes()) j["arguments"].push_back(node_json(n));
      r.output = dump(j);
    } else {
      std::ostringstream os;
      os << (*r.verdict ? "true" : "false") << "\n";
      for (const ArgNode& n : kept.nodes()) os << node_text(n) << "\n";
      r.output = os.str();
    }
    return r;
  }
  const ArgGraph g = generate_graph(doc.kb, doc.config);
  if (f == Format::Json) {
    Json j = Json::array();
    for (const ArgNode& n : g.nodes()) j.push_back(node_json(n));
    r.output = dump(j);
  } else {
    std::ostringstream os;
    for (const ArgNode& n : g.nodes()) os << node_text(n) << "\n";
    r.output = os.str();
  }
  return r;
}

QueryResult cmd_attacks(const KBDocument& doc, const CommandOptions& opts) {
  const Format f = output_format(opts, false);
  const ArgGraph g = generate_graph(doc.kb, doc.config);
  QueryResult r;
  if (f == Format::Json) {
    Json j = Json::array();
    for (const Attack& a : g.attacks()) {
      j.push_back(Json{{"from", a.from}, {"to", a.to}, {"kinds", a.kinds}});
    }
    r.output = dump(j);
  } else {
    std::ostringstream os;
    for (const Attack& a : g.attacks()) {
      os << a.from << " -> " << a.to << " [";
      for (std::size_t i = 0; i < a.kinds.size(); ++i) os << (i ? ", " : "") << a.kinds[i];
      os << "]\n";
    }
    r.output = os.str();
  }
  return r;
}

QueryResult cmd_graph(const KBDocument& doc, const CommandOptions& opts) {
  QueryResult r;
  r.output = render_graph(generate_graph(doc.kb, doc.config), output_format(opts, true));
  return r;
}

QueryResult cmd_extensions(const KBDocument& doc, const CommandOptions& opts) {
  const Format f = output_format(opts, false);
  const Semantics s = semantics_of(opts);
  const ArgGraph g = generate_graph(doc.kb, doc.config);
  const ExtensionSet es = extensions(g, s);
  QueryResult r;
  if (f == Format::Json) {
    Json j;
    j["semantics"] = std::string(semantics_name(s));
    j["extensions"] = es.extensions;
    r.output = dump(j);
  } else {
    std::ostringstream os;
    os << semantics_name(s) << ": " << es.extensions.size() << " extension"
       << (es.extensions.size() == 1 ? "" : "s") << "\n";
    for (const auto& e : es.extensions) os << "  " << braces(e) << "\n";
    r.output = os.str();
  }
  return r;
}

QueryResult cmd_accept(const KBDocument& doc, const CommandOptions& opts) {
  const Format f = output_format(opts, false);
  const std::string claim = canonical_claim(doc, require_claim(opts, "accept"));
  const Semantics s = semantics_of(opts);
  const AcceptanceMode mode = acceptance_mode(opts);
  const ArgGraph g = generate_graph(doc.kb, doc.config);
  const auto accepted = accepted_claims(g, s, mode);
  QueryResult r;
  r.verdict = std::find(accepted.begin(), accepted.end(), claim) != accepted.end();
  r.exit_code = *r.verdict ? kExitOk : kExitFalse;
  const std::string mode_name = mode == AcceptanceMode::Skeptical ? "skeptical" : "credulous";
  if (f == Format::Json) {
    Json j;
    j["claim"] = claim;
    j["accepted"] = *r.verdict;
    j["semantics"] = std::string(semantics_name(s));
    j["mode"] = mode_name;
    j["accepted_claims"] = accepted;
    r.output = dump(j);
  } else {
    std::ostringstream os;
    os << (*r.verdict ? "true" : "false") << "\n";
    os << "accepted claims (" << semantics_name(s) << ", " << mode_name << "):\n";
    for (const auto& c : accepted) os << "  " << c << "\n";
    r.output = os.str();
  }
  return r;
}

defaults::Options default_options(const KBDocument& doc) {
  defaults::Options o;
  o.default_bound = doc.config.default_bound;
  o.support_bound = doc.config.support_bound;
  o.entailment = doc.config.entailment;
  return o;
}

Json extension_json(const defaults::Extension& e) {
  Json j;
  std::vector<std::string> facts, gen;
  for (const Formula& x : e.facts) facts.push_back(x.str());
  for (const auto& d : e.generating) gen.push_back(d.str());
  j["facts"] = facts;
  j["generating"] = gen;
  j["inconsistent"] = e.inconsistent;
  return j;
}

QueryResult cmd_dl_extensions(const KBDocument& doc, const CommandOptions& opts) {
  require_logic(doc, Logic::Default, "dl-extensions");
  const Format f = output_format(opts, false);
  const auto& theory = std::get<defaults::Theory>(doc.kb);
  const auto exts = defaults::extensions(theory, default_options(doc));
  QueryResult r;
  if (f == Format::Json) {
    Json j = Json::array();
    for (const auto& e : exts) j.push_back(extension_json(e));
    r.output = dump(j);
  } else {
    std::ostringstream os;
    os << exts.size() << " extension" << (exts.size() == 1 ? "" : "s") << "\n";
    for (std::size_t i = 0; i < exts.size(); ++i) os << "  E" << i + 1 << ": " << exts[i].str() << "\n";
    r.output = os.str();
  }
  return r;
}

QueryResult cmd_dl_entails(const KBDocument& doc, const CommandOptions& opts) {
  require_logic(doc, Logic::Default, "dl-entails");
  const Format f = output_format(opts, false);
  const Formula claim = parse_formula(require_claim(opts, "dl-entails"));
  const auto& theory = std::get<defaults::Theory>(doc.kb);
  const defaults::Mode mode =
      opts.skeptical || opts.mode == "skeptical" ? defaults::Mode::Skeptical : defaults::Mode::Credulous;
  const auto opt = default_options(doc);
  const auto d = defaults::derive(theory, claim, mode, opt);
  QueryResult r;
  r.verdict = d.holds;
  r.exit_code = d.holds ? kExitOk : kExitFalse;
  std::optional<defaults::Extension> witness;
  if (d.witness) witness = defaults::extensions(theory, opt).at(*d.witness);
  const std::string mode_name = mode == defaults::Mode::Skeptical ? "skeptical" : "credulous";
  if (f == Format::Json) {
    Json j;
    j["claim"] = claim.str();
    j["entailed"] = d.holds;
    j["mode"] = mode_name;
    j["extensions"] = d.extension_count;
    j["witness"] = witness ? extension_json(*witness) : Json(nullptr);
    r.output = dump(j);
  } else {
    std::ostringstream os;
    os << (d.holds ? "true" : "false") << "\n";
    os << mode_name << " over " << d.extension_count << " extension"
       << (d.extension_count == 1 ? "" : "s") << "\n";
    if (witness) {
      os << (mode == defaults::Mode::Credulous ? "witness: " : "counter-witness: ")
         << witness->str() << "\n";
    }
    r.output = os.str();
  }
  return r;
}

QueryResult cmd_p_entails(const KBDocument& doc, const CommandOptions& opts) {
  require_logic(doc, Logic::Conditional, "p-entails");
  const Format f = output_format(opts, false);
  const auto query = parse_conditional(require_claim(opts, "p-entails"));
  const auto& kb = std::get<preferential::ConditionalBase>(doc.kb);
  const auto res = preferential::p_entailment(kb, query, doc.config.entailment);
  auto extended = kb;
  extended.push_back({query.ante, Formula::negation(query.cons)});
  const auto part = preferential::tolerance_partition(extended, doc.config.entailment);
  QueryResult r;
  r.verdict = res.entailed;
  r.exit_code = res.entailed ? kExitOk : kExitFalse;
  std::vector<std::vector<std::string>> layers;
  for (const auto& layer : part.layers) {
    auto& out = layers.emplace_back();
    for (const auto& c : layer) out.push_back(c.str());
  }
  std::vector<std::string> remainder;
  for (const auto& c : part.remainder) remainder.push_back(c.str());
  if (f == Format::Json) {
    Json j;
    j["query"] = query.str();
    j["entailed"] = res.entailed;
    j["inconsistent_base"] = res.inconsistent_base;
    j["layers"] = layers;
    j["remainder"] = remainder;
    r.output = dump(j);
  } else {
    std::ostringstream os;
    os << (res.entailed ? "true" : "false") << "\n";
    if (res.inconsistent_base) os << "note: the base is not epsilon-consistent\n";
    os << "tolerance layers with " << query.ante.str() << " => " << Formula::negation(query.cons).str()
       << ":\n";
    for (std::size_t i = 0; i < layers.size(); ++i) os << "  L" << i << ": " << braces(layers[i]) << "\n";
    os << "  never tolerated: " << braces(remainder) << "\n";
    r.output = os.str();
  }
  return r;
}

QueryResult cmd_verify(const KBDocument& doc, const CommandOptions& opts) {
  const Format f = output_format(opts, false);
  if (!opts.graph_file) throw UsageError("verify-descriptive requires a graph file");
  const AbstractGraphDocument ag = load_abstract_graph(*opts.graph_file, doc.logic);
  const auto rep = verify_descriptive(ag.graph, ag.assignment, doc.config, opts.strict);
  QueryResult r;
  r.verdict = rep.passed;
  r.exit_code = rep.passed ? kExitOk : kExitFalse;
  if (f == Format::Json) {
    Json j;
    j["passed"] = rep.passed;
    j["strict"] = rep.strict;
    j["edges"] = Json::array();
    for (const auto& e : rep.edges) {
      j["edges"].push_back(
          Json{{"from", e.from}, {"to", e.to}, {"confirmed", e.confirmed}, {"kinds", e.kinds}});
    }
    j["surplus"] = Json::array();
    for (const auto& a : rep.surplus) {
      j["surplus"].push_back(Json{{"from", a.from}, {"to", a.to}, {"kinds", a.kinds}});
    }
    j["invalid"] = rep.invalid;
    j["unassigned"] = rep.unassigned;
    r.output = dump(j);
  } else {
    std::ostringstream os;
    os << (rep.passed ? "true" : "false") << "\n";
    for (const auto& e : rep.edges) {
      os << "  " << e.from << " -> " << e.to << ": ";
      if (e.confirmed) {
        os << "confirmed [";
        for (std::size_t i = 0; i < e.kinds.size(); ++i) os << (i ? ", " : "") << e.kinds[i];
        os << "]\n";
      } else {
        os << "violated\n";
      }
    }
    for (const auto& a : rep.surplus) os << "  surplus " << a.from << " -> " << a.to << "\n";
    for (const auto& id : rep.invalid) os << "  invalid argument at " << id << "\n";
    for (const auto& id : rep.unassigned) os << "  unassigned node " << id << "\n";
    r.output = os.str();
  }
  return r;
}

}  // namespace

const std::vector<std::string_view>& command_names() {
  static const std::vector<std::string_view> names{
      "args",          "attacks",    "graph",     "extensions",        "accept",
      "dl-extensions", "dl-entails", "p-entails", "verify-descriptive"};
  return names;
}

QueryResult run_command(const KBDocument& doc, std::string_view command,
                        const CommandOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  QueryResult r;
  if (command == "args") r = cmd_args(doc, opts);
  else if (command == "attacks") r = cmd_attacks(doc, opts);
  else if (command == "graph") r = cmd_graph(doc, opts);
  else if (command == "extensions") r = cmd_extensions(doc, opts);
  else if (command == "accept") r = cmd_accept(doc, opts);
  else if (command == "dl-extensions") r = cmd_dl_extensions(doc, opts);
  else if (command == "dl-entails") r = cmd_dl_entails(doc, opts);
  else if (command == "p-entails") r = cmd_p_entails(doc, opts);
  else if (command == "verify-descriptive") r = cmd_verify(doc, opts);
  else throw UsageError("unknown command '" + std::string(command) + "'");
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
      std::chrono::steady_clock::now() - start);
  return r;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const SyntaxError*>(&e) || dynamic_cast<const GroundingError*>(&e) ||
      dynamic_cast<const IoError*>(&e)) {
    return kExitParse;
  }
  if (dynamic_cast<const ResourceLimitError*>(&e)) return kExitResource;
  return kExitUsage;
}

}  // namespace darg
