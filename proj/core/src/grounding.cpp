#include "darg/grounding.hpp"

#include "darg/error.hpp"

namespace darg {

namespace {

void collect_variables(const Formula& f, std::set<std::string>& out) {
  if (!f.has_variables()) return;
  if (f.is_atom()) {
    for (const std::string& a : f.args()) {
      if (is_variable_name(a)) out.insert(a);
    }
    return;
  }
  for (const Formula& c : f.children()) collect_variables(c, out);
}

}  // namespace

std::set<std::string> variables_of(const Formula& f) {
  std::set<std::string> out;
  collect_variables(f, out);
  return out;
}

void collect_constants(const Formula& f, std::set<std::string>& out) {
  if (f.is_atom()) {
    for (const std::string& a : f.args()) {
      if (!is_variable_name(a)) out.insert(a);
    }
    return;
  }
  for (const Formula& c : f.children()) collect_constants(c, out);
}

Formula substitute(const Formula& f, const std::map<std::string, std::string>& binding) {
  if (!f.has_variables()) return f;
  switch (f.kind()) {
    case Connective::Atom: {
      std::vector<std::string> args(f.args().begin(), f.args().end());
      for (std::string& a : args) {
        if (auto it = binding.find(a); it != binding.end()) a = it->second;
      }
      return Formula::atom(f.predicate(), std::move(args));
    }
    case Connective::Not: return Formula::negation(substitute(f.children()[0], binding));
    case Connective::Implies:
      return Formula::implication(substitute(f.children()[0], binding),
                                  substitute(f.children()[1], binding));
    case Connective::Iff:
      return Formula::biconditional(substitute(f.children()[0], binding),
                                    substitute(f.children()[1], binding));
    case Connective::And:
    case Connective::Or: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) cs.push_back(substitute(c, binding));
      return f.kind() == Connective::And ? Formula::conjunction(std::move(cs))
                                         : Formula::disjunction(std::move(cs));
    }
    default: return f;
  }
}

std::vector<Schema> ground_schema(const Schema& schema, const std::set<std::string>& constants) {
  std::set<std::string> vars;
  for (const Formula& f : schema) collect_variables(f, vars);
  if (vars.empty()) return {schema};
  if (constants.empty()) {
    throw GroundingError("template has variables but no constants are available to ground it");
  }
  const std::vector<std::string> var_list(vars.begin(), vars.end());
  const std::vector<std::string> consts(constants.begin(), constants.end());
  std::vector<std::size_t> choice(var_list.size(), 0);
  std::vector<Schema> out;
  while (true) {
    std::map<std::string, std::string> binding;
    for (std::size_t i = 0; i < var_list.size(); ++i) binding[var_list[i]] = consts[choice[i]];
    Schema inst;
    inst.reserve(schema.size());
    for (const Formula& f : schema) inst.push_back(substitute(f, binding));
    out.push_back(std::move(inst));
    // Odometer increment, last variable fastest.
    std::size_t k = var_list.size();
    while (k > 0) {
      --k;
      if (++choice[k] < consts.size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
  }
}

}  // namespace darg
