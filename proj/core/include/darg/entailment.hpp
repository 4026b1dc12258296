#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "darg/formula.hpp"

namespace darg {

struct EntailmentOptions {
  /// Maximum number of distinct atoms per satisfiability call.
  std::size_t max_atoms = 24;
};

/// Satisfiability of a finite formula set by clause conversion and DPLL
/// search with unit propagation. Returns a model over the input atoms when
/// one exists.
std::optional<Valuation> find_model(std::span<const Formula> gamma,
                                    const EntailmentOptions& opts = {});

bool is_consistent(std::span<const Formula> gamma, const EntailmentOptions& opts = {});

/// gamma |- f in classical propositional logic.
bool entails(std::span<const Formula> gamma, const Formula& f,
             const EntailmentOptions& opts = {});

inline bool entails(const Formula& premise, const Formula& f,
                    const EntailmentOptions& opts = {}) {
  return entails(std::span<const Formula>(&premise, 1), f, opts);
}

/// Every member of `rhs` follows from `lhs` and vice versa.
bool equivalent_sets(std::span<const Formula> lhs, std::span<const Formula> rhs,
                     const EntailmentOptions& opts = {});

bool equivalent(const Formula& f, const Formula& g, const EntailmentOptions& opts = {});

}  // namespace darg
