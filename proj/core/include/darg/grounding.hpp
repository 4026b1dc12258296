#pragma once

#include <set>
#include <string>
#include <vector>

#include "darg/formula.hpp"

namespace darg {

/// A schema is a tuple of formulas sharing variables (a rule body and head,
/// or the three parts of a default). Each instance substitutes every
/// variable consistently across the tuple.
using Schema = std::vector<Formula>;

/// One instance per assignment of `constants` to the schema's variables, in
/// lexicographic assignment order. Variable-free schemas return themselves.
/// Throws GroundingError when variables are present and `constants` is empty.
std::vector<Schema> ground_schema(const Schema& schema, const std::set<std::string>& constants);

Formula substitute(const Formula& f, const std::map<std::string, std::string>& binding);

std::set<std::string> variables_of(const Formula& f);

/// Arguments of ground atoms, the constants a document implicitly declares.
void collect_constants(const Formula& f, std::set<std::string>& out);

}  // namespace darg
