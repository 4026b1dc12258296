#include "darg/classical.hpp"

#include <algorithm>
#include <cstdint>

#include "darg/error.hpp"

namespace darg::classical {

namespace {

std::vector<Formula> sorted_unique(std::vector<Formula> fs) {
  std::sort(fs.begin(), fs.end());
  fs.erase(std::unique(fs.begin(), fs.end()), fs.end());
  return fs;
}

std::vector<Formula> pick(std::span<const Formula> fs, std::uint64_t mask) {
  std::vector<Formula> out;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (mask >> i & 1U) out.push_back(fs[i]);
  }
  return out;
}

// Visits every k-subset of n elements as a bitmask, in colex order.
template <typename Fn>
void for_each_subset_of_size(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  if (k == 0) {
    fn(std::uint64_t{0});
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << n;
  while (mask < limit) {
    fn(mask);
    // Gosper's hack.
    const std::uint64_t c = mask & (~mask + 1);
    const std::uint64_t r = mask + c;
    mask = (((r ^ mask) >> 2) / c) | r;
  }
}

}  // namespace

std::string Argument::str() const {
  return "<{" + join(support, ", ") + "}, " + claim.str() + ">";
}

Argument make_argument(std::vector<Formula> support, Formula claim) {
  return {sorted_unique(std::move(support)), std::move(claim)};
}

std::vector<Argument> arguments(std::span<const Formula> delta, const Formula& claim,
                                const EnumerationOptions& opts) {
  const std::vector<Formula> base = sorted_unique({delta.begin(), delta.end()});
  if (base.size() > opts.support_bound || base.size() > 62) {
    throw ResourceLimitError("classical argument enumeration over " + std::to_string(base.size()) +
                             " formulas exceeds the bound of " + std::to_string(opts.support_bound));
  }
  std::vector<std::uint64_t> found;
  std::vector<Argument> out;
  for (std::size_t k = 0; k <= base.size(); ++k) {
    for_each_subset_of_size(base.size(), k, [&](std::uint64_t mask) {
      for (std::uint64_t f : found) {
        if ((mask & f) == f) return;
      }
      const std::vector<Formula> support = pick(base, mask);
      if (!entails(support, claim, opts.entailment)) return;
      if (!is_consistent(support, opts.entailment)) return;
      found.push_back(mask);
      out.push_back({support, claim});
    });
  }
  return out;
}

bool is_argument(const Argument& a, const EntailmentOptions& opts) {
  if (!entails(a.support, a.claim, opts) || !is_consistent(a.support, opts)) return false;
  // Entailment is monotonic, so dropping single premises suffices.
  for (std::size_t i = 0; i < a.support.size(); ++i) {
    std::vector<Formula> sub = a.support;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
    if (entails(sub, a.claim, opts)) return false;
  }
  return true;
}

std::string_view attack_name(Attack k) {
  switch (k) {
    case Attack::Undercut: return "undercut";
    case Attack::DirectUndercut: return "direct-undercut";
    case Attack::Rebuttal: return "rebuttal";
    case Attack::Defeater: return "defeater";
  }
  return "?";
}

std::set<Attack> attack_kinds(const Argument& a, const Argument& b, const AttackOptions& opts) {
  std::set<Attack> out;
  const auto& eo = opts.entailment;
  auto on = [&](Attack k) { return opts.enabled.contains(k); };

  if (on(Attack::Rebuttal) && equivalent(a.claim, Formula::negation(b.claim), eo)) {
    out.insert(Attack::Rebuttal);
  }
  if (on(Attack::DirectUndercut)) {
    for (const Formula& phi : b.support) {
      if (equivalent(a.claim, Formula::negation(phi), eo)) {
        out.insert(Attack::DirectUndercut);
        break;
      }
    }
  }
  // Some psi has claim(a) |- !(/\ psi) iff the whole support is refuted.
  bool refutes_support = false;
  if (on(Attack::Defeater) || on(Attack::Undercut)) {
    std::vector<Formula> joint = b.support;
    joint.push_back(a.claim);
    refutes_support = !is_consistent(joint, eo);
  }
  if (on(Attack::Defeater) && refutes_support) out.insert(Attack::Defeater);
  if (on(Attack::Undercut) && refutes_support && !b.support.empty()) {
    const std::size_t n = b.support.size();
    if (n > opts.psi_bound || n > 62) {
      throw ResourceLimitError("undercut enumeration over a support of " + std::to_string(n) +
                               " premises exceeds the bound of " + std::to_string(opts.psi_bound));
    }
    bool hit = false;
    for (std::size_t k = 1; k <= n && !hit; ++k) {
      for_each_subset_of_size(n, k, [&](std::uint64_t mask) {
        if (hit) return;
        const Formula conj = Formula::conjunction(pick(b.support, mask));
        hit = equivalent(a.claim, Formula::negation(conj), eo);
      });
    }
    if (hit) out.insert(Attack::Undercut);
  }
  return out;
}

}  // namespace darg::classical
