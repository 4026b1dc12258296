#include "darg/kb.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "darg/error.hpp"
#include "darg/grounding.hpp"
#include "darg/parser.hpp"

namespace darg {

namespace {

struct Stanza {
  std::string text;
  SourcePos pos;
};

SourcePos advance_pos(SourcePos p, std::string_view text) {
  for (char c : text) {
    if (c == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Splits on '.' terminators, dropping `#` comments. Each stanza starts at
// its first non-blank character.
std::vector<Stanza> split_stanzas(std::string_view text, const std::string& file) {
  std::vector<Stanza> out;
  SourcePos pos;
  std::string cur;
  SourcePos start;
  bool open = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        ++i;
        ++pos.column;
      }
      if (i == text.size()) break;
    }
    const char d = text[i];
    if (d == '.') {
      if (!open) throw SyntaxError("empty statement", pos, file);
      out.push_back({cur, start});
      cur.clear();
      open = false;
    } else if (!open && std::isspace(static_cast<unsigned char>(d))) {
      // skip
    } else {
      if (!open) {
        open = true;
        start = pos;
      }
      cur += d;
    }
    if (d == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  if (open) throw SyntaxError("statement not terminated by '.'", start, file);
  return out;
}

[[noreturn]] void fail_at(const std::string& msg, SourcePos pos, const std::string& file) {
  throw SyntaxError(msg, pos, file);
}

std::size_t parse_count(std::string_view v, SourcePos pos, const std::string& file) {
  v = trim(v);
  std::size_t n = 0;
  auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (ec != std::errc() || p != v.data() + v.size() || n == 0) {
    fail_at("expected a positive integer, found '" + std::string(v) + "'", pos, file);
  }
  return n;
}

std::vector<std::string> split_list(std::string_view v) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : v) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

// A statement whose formulas may still contain variables.
struct Pending {
  std::string keyword;
  Schema schema;
  SourcePos pos;
};

const std::set<std::string>& keywords_for(Logic l) {
  static const std::set<std::string> simple{"fact", "rule"};
  static const std::set<std::string> classical{"axiom", "focal"};
  static const std::set<std::string> dflt{"fact", "default", "focal"};
  static const std::set<std::string> cond{"cond", "focal"};
  switch (l) {
    case Logic::Simple: return simple;
    case Logic::Classical: return classical;
    case Logic::Default: return dflt;
    case Logic::Conditional: return cond;
  }
  return simple;
}

void apply_setting(GenerationConfig& cfg, std::string_view body, SourcePos pos,
                   const std::string& file) {
  const std::size_t eq = body.find('=');
  if (eq == std::string_view::npos) fail_at("expected 'set <key> = <value>'", pos, file);
  const std::string key(trim(body.substr(0, eq)));
  const std::string_view value = body.substr(eq + 1);
  const SourcePos vpos = advance_pos(pos, body.substr(0, eq + 1));
  if (key == "kinds") {
    cfg.kinds.clear();
    for (std::string& k : split_list(value)) cfg.kinds.insert(std::move(k));
    if (cfg.kinds.empty()) fail_at("empty attack kind list", vpos, file);
  } else if (key == "support_bound") {
    cfg.support_bound = parse_count(value, vpos, file);
  } else if (key == "psi_bound") {
    cfg.psi_bound = parse_count(value, vpos, file);
  } else if (key == "default_bound") {
    cfg.default_bound = parse_count(value, vpos, file);
  } else if (key == "atom_bound") {
    cfg.entailment.max_atoms = parse_count(value, vpos, file);
  } else if (key == "conjunction_size") {
    cfg.focal_conjunction_size = parse_count(value, vpos, file);
  } else {
    fail_at("unknown setting '" + key + "'", pos, file);
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("error while reading " + path);
  return ss.str();
}

KBDocument parse_kb(std::string_view text, std::string path) {
  KBDocument doc;
  doc.path = path;
  const std::string& file = doc.path;
  std::optional<Logic> logic;
  std::vector<Pending> pending;
  const ParseOptions vars{true};

  for (const Stanza& st : split_stanzas(text, file)) {
    std::string_view body = st.text;
    std::size_t kw_end = 0;
    while (kw_end < body.size() && !std::isspace(static_cast<unsigned char>(body[kw_end]))) {
      ++kw_end;
    }
    const std::string keyword(body.substr(0, kw_end));
    const std::string_view rest = body.substr(kw_end);
    const SourcePos rest_pos = advance_pos(st.pos, body.substr(0, kw_end));

    if (keyword == "logic") {
      if (logic) fail_at("logic declared twice", st.pos, file);
      const std::string name(trim(rest));
      logic = parse_logic(name);
      if (!logic) fail_at("unknown logic '" + name + "'", rest_pos, file);
      continue;
    }
    if (keyword == "set") {
      apply_setting(doc.config, rest, rest_pos, file);
      continue;
    }
    if (keyword == "const") {
      const auto names = split_list(rest);
      if (names.empty()) fail_at("expected constant names", rest_pos, file);
      for (const std::string& n : names) {
        if (is_variable_name(n)) fail_at("constant '" + n + "' has the form of a variable", st.pos, file);
        doc.constants.insert(n);
      }
      continue;
    }
    if (!logic) fail_at("first statement must be 'logic <name>'", st.pos, file);
    if (!keywords_for(*logic).count(keyword)) {
      if (keyword == "fact" || keyword == "rule" || keyword == "axiom" || keyword == "default" ||
          keyword == "cond" || keyword == "focal") {
        fail_at("'" + keyword + "' is not allowed in " + std::string(logic_name(*logic)) +
                    " logic",
                st.pos, file);
      }
      fail_at("unknown statement '" + keyword + "'", st.pos, file);
    }

    FormulaParser p(rest, rest_pos, vars, file);
    Pending item{keyword, {}, st.pos};
    if (keyword == "default") {
      item.schema.push_back(p.at(TokenKind::Colon) ? Formula::verum() : p.formula());
      p.expect(TokenKind::Colon);
      item.schema.push_back(p.formula());
      p.expect(TokenKind::Slash);
      item.schema.push_back(p.formula());
    } else if (keyword == "cond") {
      item.schema.push_back(p.formula());
      p.expect(TokenKind::Cond);
      item.schema.push_back(p.formula());
    } else if (keyword == "focal" && *logic == Logic::Conditional) {
      item.schema.push_back(p.formula());
      p.expect(TokenKind::Cond);
      item.schema.push_back(p.formula());
    } else {
      const SourcePos fpos = p.peek().pos;
      Formula f = p.formula();
      if (keyword == "fact" && *logic == Logic::Simple && !is_literal(f)) {
        fail_at("simple-logic fact must be a literal", fpos, file);
      }
      if (keyword == "rule") {
        try {
          (void)simple::rule_from_formula(f);
        } catch (const UsageError& e) {
          fail_at(e.what(), fpos, file);
        }
      }
      item.schema.push_back(std::move(f));
    }
    p.expect_end();
    pending.push_back(std::move(item));
  }
  if (!logic) fail_at("missing 'logic <name>' declaration", {}, file);
  doc.logic = *logic;

  std::set<std::string> constants = doc.constants;
  for (const Pending& item : pending) {
    for (const Formula& f : item.schema) collect_constants(f, constants);
  }
  doc.constants = constants;

  simple::KnowledgeBase skb;
  ClassicalBase ckb;
  defaults::Theory theory;
  preferential::ConditionalBase pkb;
  for (const Pending& item : pending) {
    std::vector<Schema> instances;
    try {
      instances = ground_schema(item.schema, constants);
    } catch (const GroundingError& e) {
      throw GroundingError((file.empty() ? std::string() : file + ":") +
                           std::to_string(item.pos.line) + ":" +
                           std::to_string(item.pos.column) + ": " + e.what());
    }
    for (Schema& s : instances) {
      const std::string& k = item.keyword;
      if (k == "fact" && doc.logic == Logic::Simple) {
        skb.facts.insert(as_literal(s[0]));
      } else if (k == "rule") {
        skb.rules.insert(simple::rule_from_formula(s[0]));
      } else if (k == "axiom") {
        ckb.axioms.push_back(s[0]);
      } else if (k == "fact") {
        theory.facts.push_back(s[0]);
      } else if (k == "default") {
        theory.defaults.push_back({s[0], s[1], s[2]});
      } else if (k == "cond") {
        pkb.push_back({s[0], s[1]});
      } else if (k == "focal" && doc.logic == Logic::Conditional) {
        doc.config.focal_conditionals.push_back({s[0], s[1]});
      } else if (k == "focal") {
        doc.config.focal.push_back(s[0]);
      }
    }
  }
  switch (doc.logic) {
    case Logic::Simple: doc.kb = std::move(skb); break;
    case Logic::Classical: doc.kb = std::move(ckb); break;
    case Logic::Default: doc.kb = defaults::normalized(std::move(theory)); break;
    case Logic::Conditional: {
      std::vector<preferential::Conditional> uniq;
      for (auto& c : pkb) {
        if (std::find(uniq.begin(), uniq.end(), c) == uniq.end()) uniq.push_back(std::move(c));
      }
      doc.kb = std::move(uniq);
      break;
    }
  }
  try {
    (void)effective_kinds(doc.logic, doc.config);
  } catch (const UsageError& e) {
    fail_at(e.what(), {}, file);
  }
  return doc;
}

KBDocument load_kb(const std::string& path) { return parse_kb(read_file(path), path); }

namespace {

Payload parse_payload_at(Logic logic, const std::vector<std::pair<std::string, SourcePos>>& items,
                         const std::pair<std::string, SourcePos>& claim, const std::string& file) {
  auto reader = [&](const std::pair<std::string, SourcePos>& t) {
    return FormulaParser(t.first, t.second, {}, file);
  };
  switch (logic) {
    case Logic::Simple: {
      simple::Argument a;
      for (const auto& it : items) {
        FormulaParser p = reader(it);
        const Formula f = p.formula();
        p.expect_end();
        if (is_literal(f)) {
          a.support.facts.insert(as_literal(f));
        } else {
          try {
            a.support.rules.insert(simple::rule_from_formula(f));
          } catch (const UsageError& e) {
            fail_at(e.what(), it.second, file);
          }
        }
      }
      FormulaParser p = reader(claim);
      const Formula c = p.formula();
      p.expect_end();
      if (!is_literal(c)) fail_at("simple-logic claim must be a literal", claim.second, file);
      a.claim = as_literal(c);
      return a;
    }
    case Logic::Classical: {
      std::vector<Formula> support;
      for (const auto& it : items) {
        FormulaParser p = reader(it);
        support.push_back(p.formula());
        p.expect_end();
      }
      FormulaParser p = reader(claim);
      Formula c = p.formula();
      p.expect_end();
      return classical::make_argument(std::move(support), std::move(c));
    }
    case Logic::Default: {
      defaults::Theory t;
      for (const auto& it : items) {
        FormulaParser p = reader(it);
        Formula pre = p.at(TokenKind::Colon) ? Formula::verum() : p.formula();
        if (p.accept(TokenKind::Colon)) {
          Formula just = p.formula();
          p.expect(TokenKind::Slash);
          Formula cons = p.formula();
          t.defaults.push_back({std::move(pre), std::move(just), std::move(cons)});
        } else {
          t.facts.push_back(std::move(pre));
        }
        p.expect_end();
      }
      FormulaParser p = reader(claim);
      Formula c = p.formula();
      p.expect_end();
      return defaults::Argument{defaults::normalized(std::move(t)), std::move(c)};
    }
    case Logic::Conditional: {
      preferential::Argument a;
      for (const auto& it : items) {
        FormulaParser p = reader(it);
        Formula f = p.formula();
        if (p.accept(TokenKind::Cond)) {
          a.conditionals.push_back({std::move(f), p.formula()});
        } else {
          a.context.push_back(std::move(f));
        }
        p.expect_end();
      }
      FormulaParser p = reader(claim);
      Formula ante = p.formula();
      p.expect(TokenKind::Cond);
      Formula cons = p.formula();
      p.expect_end();
      a.claim = {std::move(ante), std::move(cons)};
      return a;
    }
  }
  return {};
}

}  // namespace

Payload parse_payload(Logic logic, const std::vector<std::string>& support,
                      const std::string& claim) {
  std::vector<std::pair<std::string, SourcePos>> items;
  for (const std::string& s : support) items.emplace_back(s, SourcePos{});
  return parse_payload_at(logic, items, {claim, SourcePos{}}, {});
}

AbstractGraphDocument parse_abstract_graph(std::string_view text, Logic logic,
                                           std::string path) {
  AbstractGraphDocument doc;
  const std::string& file = path;
  std::vector<std::tuple<std::string, std::string, SourcePos>> edges;

  for (const Stanza& st : split_stanzas(text, file)) {
    FormulaParser p(st.text, st.pos, {}, file);
    const std::string keyword = p.expect(TokenKind::Ident).text;
    if (keyword == "node") {
      do {
        const Token& id = p.expect(TokenKind::Ident);
        if (doc.graph.index_of(id.text)) fail_at("duplicate node " + id.text, id.pos, file);
        doc.graph.add_node({id.text, {}});
      } while (p.accept(TokenKind::Comma));
      p.expect_end();
    } else if (keyword == "edge") {
      const std::string from = p.expect(TokenKind::Ident).text;
      p.expect(TokenKind::Implies);
      const std::string to = p.expect(TokenKind::Ident).text;
      p.expect_end();
      edges.emplace_back(from, to, st.pos);
    } else if (keyword == "assign") {
      const Token id = p.expect(TokenKind::Ident);
      const Token eq = p.expect(TokenKind::Equals);
      // Items are cut from the raw text so each keeps its own position.
      (void)eq;
      const std::size_t body_off = st.text.find('=') + 1;
      const std::string_view body = std::string_view(st.text).substr(body_off);
      const std::size_t ts = body.rfind("|-");
      if (ts == std::string_view::npos) fail_at("expected '|-' in assignment", eq.pos, file);
      std::vector<std::pair<std::string, SourcePos>> items;
      std::size_t from = 0;
      const std::string_view lhs = body.substr(0, ts);
      while (from <= lhs.size()) {
        std::size_t to = lhs.find(';', from);
        if (to == std::string_view::npos) to = lhs.size();
        const std::string_view part = lhs.substr(from, to - from);
        if (!trim(part).empty()) {
          items.emplace_back(std::string(part),
                             advance_pos(st.pos, std::string_view(st.text).substr(0, body_off + from)));
        }
        from = to + 1;
      }
      const std::pair<std::string, SourcePos> claim{
          std::string(body.substr(ts + 2)),
          advance_pos(st.pos, std::string_view(st.text).substr(0, body_off + ts + 2))};
      if (doc.assignment.count(id.text)) fail_at("node " + id.text + " assigned twice", id.pos, file);
      doc.assignment[id.text] = parse_payload_at(logic, items, claim, file);
    } else {
      fail_at("unknown statement '" + keyword + "'", st.pos, file);
    }
  }
  for (const auto& [from, to, pos] : edges) {
    if (!doc.graph.index_of(from)) fail_at("edge from undeclared node " + from, pos, file);
    if (!doc.graph.index_of(to)) fail_at("edge to undeclared node " + to, pos, file);
    doc.graph.add_attack(from, to);
  }
  for (const auto& [id, payload] : doc.assignment) {
    if (!doc.graph.index_of(id)) fail_at("assignment to undeclared node " + id, {}, file);
  }
  ArgGraph g;
  for (const ArgNode& n : doc.graph.nodes()) {
    auto it = doc.assignment.find(n.id);
    g.add_node({n.id, it == doc.assignment.end() ? Payload{} : it->second});
  }
  for (const Attack& a : doc.graph.attacks()) g.add_attack(a.from, a.to, a.kinds);
  doc.graph = std::move(g);
  return doc;
}

AbstractGraphDocument load_abstract_graph(const std::string& path, Logic logic) {
  return parse_abstract_graph(read_file(path), logic, path);
}

}  // namespace darg
