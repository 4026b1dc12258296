// Shared generators and brute-force oracles for the test suites.
#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "darg/formula.hpp"

namespace testkit {

using darg::Formula;
using darg::Valuation;

inline constexpr int kCases = 250;

class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937& rng() { return rng_; }

  std::string atom_name(int atoms) { return std::string(1, static_cast<char>('p' + uniform(0, atoms - 1))); }

  Formula atom(int atoms) { return Formula::atom(atom_name(atoms)); }

  Formula literal(int atoms) {
    Formula a = atom(atoms);
    return coin() ? a : Formula::negation(a);
  }

  Formula formula(int atoms, int depth) {
    if (depth <= 0 || coin(0.25)) {
      const int r = uniform(0, 19);
      if (r == 0) return Formula::verum();
      if (r == 1) return Formula::falsum();
      return atom(atoms);
    }
    switch (uniform(0, 5)) {
      case 0: return Formula::negation(formula(atoms, depth - 1));
      case 1: return Formula::conjunction({formula(atoms, depth - 1), formula(atoms, depth - 1)});
      case 2: return Formula::disjunction({formula(atoms, depth - 1), formula(atoms, depth - 1)});
      case 3: return Formula::implication(formula(atoms, depth - 1), formula(atoms, depth - 1));
      case 4: return Formula::biconditional(formula(atoms, depth - 1), formula(atoms, depth - 1));
      default: return Formula::negation(atom(atoms));
    }
  }

 private:
  std::mt19937 rng_;
};

inline std::vector<std::string> atoms_of(const std::vector<Formula>& fs) {
  std::set<std::string> s;
  for (const Formula& f : fs) f.collect_atoms(s);
  return {s.begin(), s.end()};
}

// Visits every valuation over `atoms`; stops early when `visit` returns false.
template <class F>
void each_valuation(const std::vector<std::string>& atoms, F visit) {
  const std::uint64_t n = std::uint64_t{1} << atoms.size();
  for (std::uint64_t m = 0; m < n; ++m) {
    Valuation v;
    for (std::size_t i = 0; i < atoms.size(); ++i) v[atoms[i]] = (m >> i) & 1U;
    if (!visit(v)) return;
  }
}

inline bool tt_satisfiable(const std::vector<Formula>& gamma) {
  bool sat = false;
  each_valuation(atoms_of(gamma), [&](const Valuation& v) {
    for (const Formula& f : gamma) {
      if (!darg::evaluate(v, f)) return true;
    }
    sat = true;
    return false;
  });
  return sat;
}

inline bool tt_entails(std::vector<Formula> gamma, const Formula& f) {
  gamma.push_back(Formula::negation(f));
  return !tt_satisfiable(gamma);
}

}  // namespace testkit
