#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "darg/instantiate.hpp"

namespace darg {

/// A parsed and fully grounded `.akb` file.
///
///   logic simple|classical|default|conditional.
///   const <name>.
///   fact <literal>.                         (simple)
///   rule <lit> & ... & <lit> -> <lit>.      (simple)
///   axiom <formula>.                        (classical)
///   fact <formula>.                         (default, W)
///   default <pre> : <just> / <cons>.        (default, D)
///   cond <formula> => <formula>.            (conditional)
///   focal <formula> | focal <f> => <g>.     (selection for generation)
///   set <key> = <value>.
///
/// `#` starts a line comment. Variables are grounded over the declared
/// constants together with the arguments of every ground atom in the file.
struct KBDocument {
  Logic logic = Logic::Simple;
  std::string path;
  BaseKB kb;
  GenerationConfig config;
  std::set<std::string> constants;
};

KBDocument parse_kb(std::string_view text, std::string path = {});
KBDocument load_kb(const std::string& path);

std::string read_file(const std::string& path);

/// One support item in the per-logic text form used by JSON graphs and
/// descriptive assignments:
///   simple       `a`, `!a`, `a & b -> c`
///   classical    any formula
///   default      a formula (fact) or `pre : just / cons`
///   conditional  `ante => cons` (Phi) or a formula (Psi)
Payload parse_payload(Logic logic, const std::vector<std::string>& support,
                      const std::string& claim);

/// An abstract graph with optional argument assignment:
///
///   node <id>.
///   edge <id> -> <id>.
///   assign <id> = <item> ; <item> ; ... |- <claim>.
struct AbstractGraphDocument {
  ArgGraph graph;
  std::map<std::string, Payload> assignment;
};

AbstractGraphDocument parse_abstract_graph(std::string_view text, Logic logic,
                                           std::string path = {});
AbstractGraphDocument load_abstract_graph(const std::string& path, Logic logic);

}  // namespace darg
