#include "darg/formula.hpp"

#include <cctype>
#include <utility>

#include "darg/error.hpp"

namespace darg {

SyntaxError::SyntaxError(const std::string& message, SourcePos pos, std::string file)
    : Error((file.empty() ? std::string() : file + ":") + std::to_string(pos.line) + ":" +
            std::to_string(pos.column) + ": " + message),
      message_(message),
      pos_(pos),
      file_(std::move(file)) {}

struct Formula::Node {
  Connective kind = Connective::True;
  std::string predicate;
  std::vector<std::string> args;
  std::string name;
  std::vector<Formula> children;
  bool has_vars = false;
};

namespace {

std::shared_ptr<const Formula::Node> const& verum_node();

int precedence(Connective k) {
  switch (k) {
    case Connective::Iff: return 1;
    case Connective::Implies: return 2;
    case Connective::Or: return 3;
    case Connective::And: return 4;
    case Connective::Not: return 5;
    default: return 6;
  }
}

void print(const Formula& f, std::string& out);

void print_child(const Formula& child, int parent_prec, std::string& out) {
  if (precedence(child.kind()) <= parent_prec) {
    out += '(';
    print(child, out);
    out += ')';
  } else {
    print(child, out);
  }
}

void print(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Connective::Atom: out += f.atom_name(); return;
    case Connective::True: out += "true"; return;
    case Connective::False: out += "false"; return;
    case Connective::Not:
      out += '!';
      print_child(f.children()[0], precedence(Connective::Not) - 1, out);
      return;
    default: break;
  }
  const char* op = "";
  switch (f.kind()) {
    case Connective::And: op = " & "; break;
    case Connective::Or: op = " | "; break;
    case Connective::Implies: op = " -> "; break;
    case Connective::Iff: op = " <-> "; break;
    default: break;
  }
  const int prec = precedence(f.kind());
  bool first = true;
  for (const Formula& c : f.children()) {
    if (!first) out += op;
    first = false;
    print_child(c, prec, out);
  }
}

std::strong_ordering compare(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  if (a.kind() == Connective::Atom) return a.atom_name() <=> b.atom_name();
  const auto ca = a.children();
  const auto cb = b.children();
  const std::size_t n = std::min(ca.size(), cb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare(ca[i], cb[i]); c != 0) return c;
  }
  return ca.size() <=> cb.size();
}

}  // namespace

bool is_variable_name(std::string_view arg) {
  if (arg.empty() || !std::isupper(static_cast<unsigned char>(arg[0]))) return false;
  for (std::size_t i = 1; i < arg.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(arg[i]))) return false;
  }
  return true;
}

Formula::Formula() : node_(verum_node()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string predicate, std::vector<std::string> args) {
  if (predicate.empty()) throw UsageError("atom with empty name");
  auto n = std::make_shared<Node>();
  n->kind = Connective::Atom;
  n->name = predicate;
  if (!args.empty()) {
    n->name += '(';
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) n->name += ',';
      n->name += args[i];
      n->has_vars = n->has_vars || is_variable_name(args[i]);
    }
    n->name += ')';
  }
  n->predicate = std::move(predicate);
  n->args = std::move(args);
  return Formula(std::move(n));
}

namespace {

std::shared_ptr<Formula::Node> compound(Connective k, std::vector<Formula> children) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = k;
  for (const Formula& c : children) n->has_vars = n->has_vars || c.has_variables();
  n->children = std::move(children);
  return n;
}

std::shared_ptr<const Formula::Node> const& verum_node() {
  static const std::shared_ptr<const Formula::Node> node = [] {
    auto n = std::make_shared<Formula::Node>();
    n->kind = Connective::True;
    return std::shared_ptr<const Formula::Node>(std::move(n));
  }();
  return node;
}

}  // namespace

Formula Formula::negation(Formula f) { return Formula(compound(Connective::Not, {std::move(f)})); }

Formula Formula::conjunction(std::vector<Formula> fs) {
  if (fs.empty()) throw UsageError("empty conjunction");
  if (fs.size() == 1) return fs.front();
  return Formula(compound(Connective::And, std::move(fs)));
}

Formula Formula::disjunction(std::vector<Formula> fs) {
  if (fs.empty()) throw UsageError("empty disjunction");
  if (fs.size() == 1) return fs.front();
  return Formula(compound(Connective::Or, std::move(fs)));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  return Formula(compound(Connective::Implies, {std::move(lhs), std::move(rhs)}));
}

Formula Formula::biconditional(Formula lhs, Formula rhs) {
  return Formula(compound(Connective::Iff, {std::move(lhs), std::move(rhs)}));
}

Formula Formula::verum() { return Formula(); }

Formula Formula::falsum() {
  static const Formula f(compound(Connective::False, {}));
  return f;
}

Connective Formula::kind() const { return node_->kind; }
const std::string& Formula::atom_name() const { return node_->name; }
const std::string& Formula::predicate() const { return node_->predicate; }
std::span<const std::string> Formula::args() const { return node_->args; }
std::span<const Formula> Formula::children() const { return node_->children; }
bool Formula::has_variables() const { return node_->has_vars; }

void Formula::collect_atoms(std::set<std::string>& out) const {
  if (is_atom()) {
    out.insert(node_->name);
    return;
  }
  for (const Formula& c : node_->children) c.collect_atoms(out);
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  collect_atoms(out);
  return out;
}

std::string Formula::str() const {
  std::string out;
  print(*this, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.node_ == b.node_ || compare(a, b) == 0;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  return compare(a, b);
}

Formula Literal::to_formula() const {
  // Literal atoms are already flattened; keep the text as the predicate.
  Formula a = Formula::atom(atom);
  return positive ? a : Formula::negation(a);
}

std::string Literal::str() const { return positive ? atom : "!" + atom; }

bool is_literal(const Formula& f) {
  return f.is_atom() || (f.kind() == Connective::Not && f.children()[0].is_atom());
}

Literal as_literal(const Formula& f) {
  if (f.is_atom()) return {f.atom_name(), true};
  if (f.kind() == Connective::Not && f.children()[0].is_atom()) {
    return {f.children()[0].atom_name(), false};
  }
  throw UsageError("not a literal: " + f.str());
}

bool evaluate(const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Connective::True: return true;
    case Connective::False: return false;
    case Connective::Atom: {
      auto it = v.find(f.atom_name());
      if (it == v.end()) throw EvaluationError("valuation has no value for atom " + f.atom_name());
      return it->second;
    }
    case Connective::Not: return !evaluate(v, f.children()[0]);
    case Connective::And:
      for (const Formula& c : f.children()) {
        if (!evaluate(v, c)) return false;
      }
      return true;
    case Connective::Or:
      for (const Formula& c : f.children()) {
        if (evaluate(v, c)) return true;
      }
      return false;
    case Connective::Implies:
      return !evaluate(v, f.children()[0]) || evaluate(v, f.children()[1]);
    case Connective::Iff:
      return evaluate(v, f.children()[0]) == evaluate(v, f.children()[1]);
  }
  return false;
}

std::vector<Formula> conjuncts(const Formula& f) {
  if (f.kind() == Connective::And) return {f.children().begin(), f.children().end()};
  return {f};
}

std::string join(std::span<const Formula> fs, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += sep;
    out += fs[i].str();
  }
  return out;
}

}  // namespace darg
