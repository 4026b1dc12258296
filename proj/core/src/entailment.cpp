#include "darg/entailment.hpp"

#include <cstdint>
#include <cstdlib>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "darg/error.hpp"

namespace darg {

namespace {

// Literals are non-zero ints: +v / -v for variable v >= 1.
using Clause = std::vector<int>;

class CnfBuilder {
 public:
  int atom(const std::string& name) {
    auto [it, inserted] = atoms_.try_emplace(name, 0);
    if (inserted) it->second = fresh();
    return it->second;
  }

  int fresh() { return ++vars_; }

  int top() {
    if (top_ == 0) {
      top_ = fresh();
      clauses_.push_back({top_});
    }
    return top_;
  }

  // Returns a literal equivalent to f under the emitted definitions.
  int encode(const Formula& f) {
    switch (f.kind()) {
      case Connective::Atom: return atom(f.atom_name());
      case Connective::True: return top();
      case Connective::False: return -top();
      case Connective::Not: return -encode(f.children()[0]);
      case Connective::And: {
        std::vector<int> lits;
        for (const Formula& c : f.children()) lits.push_back(encode(c));
        const int v = fresh();
        Clause back{v};
        for (int l : lits) {
          clauses_.push_back({-v, l});
          back.push_back(-l);
        }
        clauses_.push_back(std::move(back));
        return v;
      }
      case Connective::Or: {
        std::vector<int> lits;
        for (const Formula& c : f.children()) lits.push_back(encode(c));
        return define_or(lits);
      }
      case Connective::Implies:
        return define_or({-encode(f.children()[0]), encode(f.children()[1])});
      case Connective::Iff: {
        const int a = encode(f.children()[0]);
        const int b = encode(f.children()[1]);
        const int v = fresh();
        clauses_.push_back({-v, -a, b});
        clauses_.push_back({-v, a, -b});
        clauses_.push_back({v, a, b});
        clauses_.push_back({v, -a, -b});
        return v;
      }
    }
    return top();
  }

  void assert_formula(const Formula& f) {
    switch (f.kind()) {
      case Connective::True: return;
      case Connective::False: clauses_.push_back({}); return;
      case Connective::And:
        for (const Formula& c : f.children()) assert_formula(c);
        return;
      case Connective::Or: {
        Clause c;
        for (const Formula& d : f.children()) c.push_back(encode(d));
        clauses_.push_back(std::move(c));
        return;
      }
      case Connective::Implies:
        clauses_.push_back({-encode(f.children()[0]), encode(f.children()[1])});
        return;
      default: clauses_.push_back({encode(f)}); return;
    }
  }

  int num_vars() const { return vars_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  const std::map<std::string, int>& atoms() const { return atoms_; }

 private:
  int define_or(const std::vector<int>& lits) {
    const int v = fresh();
    Clause fwd{-v};
    for (int l : lits) {
      fwd.push_back(l);
      clauses_.push_back({v, -l});
    }
    clauses_.push_back(std::move(fwd));
    return v;
  }

  std::map<std::string, int> atoms_;
  std::vector<Clause> clauses_;
  int vars_ = 0;
  int top_ = 0;
};

// Chronological-backtracking DPLL with unit propagation over occurrence lists.
class Dpll {
 public:
  Dpll(const std::vector<Clause>& clauses, int num_vars)
      : clauses_(clauses), value_(num_vars + 1, 0), occurs_(2 * (num_vars + 1)) {
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      for (int l : clauses_[i]) occurs_[slot(-l)].push_back(i);
    }
  }

  bool solve() {
    for (const Clause& c : clauses_) {
      if (c.empty()) return false;
    }
    // Initial units.
    for (std::size_t i = 0; i < clauses_.size(); ++i) {
      if (!check_clause(i)) return false;
    }
    if (!propagate()) return false;
    return search();
  }

  bool value_of(int var) const { return value_[var] > 0; }

 private:
  static std::size_t slot(int lit) {
    return static_cast<std::size_t>(2 * std::abs(lit) + (lit < 0 ? 1 : 0));
  }

  int8_t lit_value(int lit) const {
    const int8_t v = value_[std::abs(lit)];
    return lit > 0 ? v : static_cast<int8_t>(-v);
  }

  void assign(int lit) {
    value_[std::abs(lit)] = lit > 0 ? 1 : -1;
    trail_.push_back(lit);
  }

  // Inspects clause i; enqueues a unit; false on conflict.
  bool check_clause(std::size_t i) {
    int unassigned = 0;
    int last = 0;
    for (int l : clauses_[i]) {
      const int8_t v = lit_value(l);
      if (v > 0) return true;
      if (v == 0) {
        ++unassigned;
        last = l;
        if (unassigned > 1) return true;
      }
    }
    if (unassigned == 0) return false;
    assign(last);
    return true;
  }

  bool propagate() {
    while (head_ < trail_.size()) {
      const int lit = trail_[head_++];
      // Clauses containing the now-false literal -lit.
      for (std::size_t ci : occurs_[slot(lit)]) {
        if (!check_clause(ci)) return false;
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[std::abs(trail_.back())] = 0;
      trail_.pop_back();
    }
    head_ = mark;
  }

  bool search() {
    int var = 0;
    for (std::size_t v = 1; v < value_.size(); ++v) {
      if (value_[v] == 0) {
        var = static_cast<int>(v);
        break;
      }
    }
    if (var == 0) return true;
    const std::size_t mark = trail_.size();
    for (int lit : {var, -var}) {
      assign(lit);
      if (propagate() && search()) return true;
      undo(mark);
    }
    return false;
  }

  const std::vector<Clause>& clauses_;
  std::vector<int8_t> value_;
  std::vector<std::vector<std::size_t>> occurs_;
  std::vector<int> trail_;
  std::size_t head_ = 0;
};

void check_atom_bound(std::span<const Formula> gamma, const Formula* extra,
                      const EntailmentOptions& opts) {
  std::set<std::string> atoms;
  for (const Formula& f : gamma) f.collect_atoms(atoms);
  if (extra) extra->collect_atoms(atoms);
  if (atoms.size() > opts.max_atoms) {
    throw ResourceLimitError("entailment query over " + std::to_string(atoms.size()) +
                             " atoms exceeds the bound of " + std::to_string(opts.max_atoms));
  }
}

std::optional<Valuation> solve(std::span<const Formula> gamma, const Formula* extra) {
  CnfBuilder cnf;
  for (const Formula& f : gamma) {
    if (f.has_variables()) throw GroundingError("formula is not ground: " + f.str());
    cnf.assert_formula(f);
  }
  if (extra) cnf.assert_formula(*extra);
  Dpll solver(cnf.clauses(), cnf.num_vars());
  if (!solver.solve()) return std::nullopt;
  Valuation model;
  for (const auto& [name, var] : cnf.atoms()) model[name] = solver.value_of(var);
  return model;
}

}  // namespace

std::optional<Valuation> find_model(std::span<const Formula> gamma, const EntailmentOptions& opts) {
  check_atom_bound(gamma, nullptr, opts);
  return solve(gamma, nullptr);
}

bool is_consistent(std::span<const Formula> gamma, const EntailmentOptions& opts) {
  return find_model(gamma, opts).has_value();
}

bool entails(std::span<const Formula> gamma, const Formula& f, const EntailmentOptions& opts) {
  check_atom_bound(gamma, &f, opts);
  const Formula negated = Formula::negation(f);
  return !solve(gamma, &negated).has_value();
}

bool equivalent_sets(std::span<const Formula> lhs, std::span<const Formula> rhs,
                     const EntailmentOptions& opts) {
  for (const Formula& f : rhs) {
    if (!entails(lhs, f, opts)) return false;
  }
  for (const Formula& f : lhs) {
    if (!entails(rhs, f, opts)) return false;
  }
  return true;
}

bool equivalent(const Formula& f, const Formula& g, const EntailmentOptions& opts) {
  return entails(f, g, opts) && entails(g, f, opts);
}

}  // namespace darg
