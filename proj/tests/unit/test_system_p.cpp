#include <gtest/gtest.h>

#include <algorithm>
#include <cstdint>

#include "darg/entailment.hpp"
#include "darg/parser.hpp"
#include "darg/system_p.hpp"
#include "testkit.hpp"

using namespace darg;
using namespace darg::preferential;
using testkit::Gen;

namespace {

Formula P(std::string_view s) { return parse_formula(s); }
Conditional C(std::string_view a, std::string_view b) { return {P(a), P(b)}; }

ConditionalBase penguins() {
  return {C("penguin", "bird"), C("penguin", "!fly"), C("bird", "fly")};
}

// Ranked-model semantics by exhaustive enumeration of rank functions.
class RankedOracle {
 public:
  RankedOracle(std::vector<std::string> atoms, int max_rank)
      : atoms_(std::move(atoms)), inf_(max_rank + 1) {
    const std::size_t worlds = std::size_t{1} << atoms_.size();
    for (std::size_t w = 0; w < worlds; ++w) {
      Valuation v;
      for (std::size_t i = 0; i < atoms_.size(); ++i) v[atoms_[i]] = (w >> i) & 1U;
      worlds_.push_back(v);
    }
  }

  bool entails(const ConditionalBase& kb, const Conditional& q) const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> conds;
    for (const auto& c : kb) conds.push_back(masks(c));
    const auto query = masks(q);
    // Rank inf_ marks an impossible world.
    std::vector<int> rank(worlds_.size(), 0);
    while (true) {
      const bool model = std::all_of(conds.begin(), conds.end(),
                                     [&](const auto& c) { return satisfies(rank, c); });
      if (model && !satisfies(rank, query)) return false;
      std::size_t i = 0;
      while (i < rank.size() && ++rank[i] > inf_) rank[i++] = 0;
      if (i == rank.size()) return true;
    }
  }

 private:
  // Worlds satisfying the antecedent, and those satisfying ante & !cons.
  std::pair<std::uint32_t, std::uint32_t> masks(const Conditional& c) const {
    std::uint32_t ante = 0, bad = 0;
    for (std::size_t w = 0; w < worlds_.size(); ++w) {
      Valuation v = worlds_[w];
      for (const auto& a : c.ante.atoms()) v.emplace(a, false);
      for (const auto& a : c.cons.atoms()) v.emplace(a, false);
      if (evaluate(v, c.ante)) {
        ante |= 1U << w;
        if (!evaluate(v, c.cons)) bad |= 1U << w;
      }
    }
    return {ante, bad};
  }

  bool satisfies(const std::vector<int>& rank, std::pair<std::uint32_t, std::uint32_t> c) const {
    int best = inf_;
    for (std::size_t w = 0; w < rank.size(); ++w) {
      if (c.first >> w & 1U) best = std::min(best, rank[w]);
    }
    if (best == inf_) return true;
    for (std::size_t w = 0; w < rank.size(); ++w) {
      if ((c.second >> w & 1U) && rank[w] == best) return false;
    }
    return true;
  }

  std::vector<std::string> atoms_;
  std::vector<Valuation> worlds_;
  int inf_;
};

Conditional random_conditional(Gen& g, int atoms, int depth) {
  return {g.formula(atoms, depth), g.formula(atoms, depth)};
}

ConditionalBase random_base(Gen& g, int atoms) {
  ConditionalBase kb;
  for (int k = g.uniform(1, 3); k > 0; --k) {
    kb.push_back(g.coin(0.7) ? Conditional{g.literal(atoms), g.literal(atoms)}
                             : random_conditional(g, atoms, 2));
  }
  return kb;
}

// Antecedents and consequents drawn mostly from the base, so premises of the
// rules are frequently satisfied.
Formula related(Gen& g, const ConditionalBase& kb, int atoms) {
  const int r = g.uniform(0, 4);
  const auto& c = kb[static_cast<std::size_t>(g.uniform(0, static_cast<int>(kb.size()) - 1))];
  if (r == 0) return c.ante;
  if (r == 1) return c.cons;
  if (r == 2) return Formula::conjunction({c.ante, c.cons});
  if (r == 3) return g.literal(atoms);
  return g.formula(atoms, 2);
}

// Guards against a generator whose rule premises almost never hold.
void expect_nonvacuous(int premises_held) {
  ::testing::Test::RecordProperty("premises_held", premises_held);
  EXPECT_GE(premises_held, 25);
}

}  // namespace

TEST(SystemP, ToleranceLayers) {
  const auto r = tolerance_partition(penguins());
  ASSERT_TRUE(r.consistent());
  ASSERT_EQ(r.layers.size(), 2U);
  EXPECT_EQ(r.layers[0], std::vector<Conditional>{C("bird", "fly")});
  EXPECT_FALSE(epsilon_consistent(std::vector<Conditional>{C("a", "b"), C("a", "!b")}));
  EXPECT_TRUE(epsilon_consistent(std::vector<Conditional>{}));
}

TEST(SystemP, PenguinInferences) {
  const auto kb = penguins();
  for (auto q : {C("penguin & bird", "!fly"), C("fly", "!penguin"), C("bird", "!penguin"),
                 C("bird | penguin", "fly"), C("bird | penguin", "!penguin")}) {
    EXPECT_TRUE(p_entails(kb, q)) << q.str();
  }
  EXPECT_FALSE(p_entails(kb, C("penguin", "fly")));
  EXPECT_FALSE(p_entails(std::vector<Conditional>{C("bird", "fly")}, C("!fly", "!bird")));
  EXPECT_TRUE(p_entails(kb, C("a & b", "a & b")));
}

TEST(SystemP, InconsistentBaseIsFlaggedWithoutTrivialising) {
  const std::vector<Conditional> kb{C("a", "b"), C("a", "!b")};
  const auto r = p_entailment(kb, C("c", "d"));
  EXPECT_TRUE(r.inconsistent_base);
  EXPECT_FALSE(r.entailed);
  EXPECT_TRUE(p_entails(kb, C("a", "d")));
}

TEST(SystemP, PreferentialArgumentForPenguinBird) {
  const auto args = arguments(penguins(), C("penguin & bird", "!fly"));
  ASSERT_EQ(args.size(), 1U);
  auto phi = args[0].conditionals;
  std::sort(phi.begin(), phi.end());
  auto want = std::vector<Conditional>{C("penguin", "bird"), C("penguin", "!fly")};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(phi, want);
  EXPECT_EQ(args[0].context, (std::vector<Formula>{P("penguin"), P("bird")}));
}

TEST(SystemP, MemberQueryAndImpossibleAntecedent) {
  const auto a = arguments(penguins(), C("bird", "fly"));
  ASSERT_EQ(a.size(), 1U);
  EXPECT_EQ(a[0].conditionals, std::vector<Conditional>{C("bird", "fly")});
  EXPECT_EQ(a[0].context, std::vector<Formula>{P("bird")});
  const auto v = arguments(penguins(), C("x & !x", "y"));
  ASSERT_EQ(v.size(), 1U);
  EXPECT_TRUE(v[0].conditionals.empty());
}

TEST(SystemP, DirectRebuttalOneWay) {
  const Argument a1{{C("bird", "fly")}, {P("bird")}, C("bird", "fly")};
  const Argument a2{{C("penguin", "bird"), C("penguin", "!fly")},
                    {P("penguin"), P("bird")},
                    C("penguin & bird", "!fly")};
  EXPECT_TRUE(attack_kinds(a2, a1).count(Attack::DirectRebuttal));
  EXPECT_FALSE(attack_kinds(a1, a2).count(Attack::DirectRebuttal));
}

TEST(SystemP, MatchRebuttal) {
  const Argument a1{{C("matchIsStruck", "matchLights")}, {P("matchIsStruck")},
                    C("matchIsStruck", "matchLights")};
  const Argument a2{{C("matchIsStruck & matchIsWet", "!matchLights")},
                    {P("matchIsStruck"), P("matchIsWet")},
                    C("matchIsStruck & matchIsWet", "!matchLights")};
  EXPECT_TRUE(attack_kinds(a2, a1).count(Attack::DirectRebuttal));
  EXPECT_FALSE(attack_kinds(a1, a2).count(Attack::DirectRebuttal));
}

TEST(SystemP, CanonicalUndercut) {
  const Argument target{{C("bird", "fly")}, {P("bird")}, C("bird", "fly")};
  const Argument att{{C("x", "!bird")}, {P("x")}, C("x", "!bird")};
  const auto k = attack_kinds(att, target);
  EXPECT_TRUE(k.count(Attack::CanonicalUndercut));
  EXPECT_TRUE(k.count(Attack::Undercut));
  EXPECT_TRUE(k.count(Attack::DirectUndercut));
}

TEST(SystemPProperty, AgreesWithRankedModels) {
  const RankedOracle oracle({"p", "q"}, 3);
  Gen g(401);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 2);
    const Conditional q{related(g, kb, 2), related(g, kb, 2)};
    EXPECT_EQ(p_entails(kb, q), oracle.entails(kb, q)) << q.str();
  }
}

TEST(SystemPProperty, PenguinVerdictsAgreeWithRankedModels) {
  const RankedOracle oracle({"bird", "fly", "penguin"}, 3);
  const auto kb = penguins();
  for (auto q : {C("penguin & bird", "!fly"), C("fly", "!penguin"), C("bird", "!penguin"),
                 C("bird | penguin", "fly"), C("bird | penguin", "!penguin"),
                 C("penguin", "fly"), C("!fly", "!bird")}) {
    EXPECT_EQ(p_entails(kb, q), oracle.entails(kb, q)) << q.str();
  }
}

TEST(SystemPProperty, Ref) {
  Gen g(409);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const Formula a = g.formula(4, 2);
    EXPECT_TRUE(p_entails(kb, {a, a}));
  }
}

TEST(SystemPProperty, LeftLogicalEquivalence) {
  int premises_held = 0;
  Gen g(419);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const Formula a = related(g, kb, 4);
    const Formula c = related(g, kb, 4);
    const Formula b = g.coin() ? Formula::negation(Formula::negation(a))
                               : Formula::conjunction({a, Formula::disjunction({a, g.atom(4)})});
    ASSERT_TRUE(equivalent(a, b));
    if (p_entails(kb, {a, c})) {
      ++premises_held;
      EXPECT_TRUE(p_entails(kb, {b, c}));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, RightWeakening) {
  int premises_held = 0;
  Gen g(421);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const Formula a = related(g, kb, 4);
    const Formula c = related(g, kb, 4);
    const Formula b = g.coin() ? Formula::disjunction({a, g.formula(4, 1)}) : g.formula(4, 2);
    if (entails(a, b) && p_entails(kb, {c, a})) {
      ++premises_held;
      EXPECT_TRUE(p_entails(kb, {c, b}));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, Cut) {
  int premises_held = 0;
  Gen g(431);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const Formula a = related(g, kb, 4), b = related(g, kb, 4), c = related(g, kb, 4);
    if (p_entails(kb, {a, b}) && p_entails(kb, {Formula::conjunction({a, b}), c})) {
      ++premises_held;
      EXPECT_TRUE(p_entails(kb, {a, c}));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, And) {
  int premises_held = 0;
  Gen g(433);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const Formula a = related(g, kb, 4), b = related(g, kb, 4), c = related(g, kb, 4);
    if (p_entails(kb, {a, b}) && p_entails(kb, {a, c})) {
      ++premises_held;
      EXPECT_TRUE(p_entails(kb, {a, Formula::conjunction({b, c})}));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, Or) {
  int premises_held = 0;
  Gen g(439);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const Formula a = related(g, kb, 4), b = related(g, kb, 4), c = related(g, kb, 4);
    if (p_entails(kb, {a, c}) && p_entails(kb, {b, c})) {
      ++premises_held;
      EXPECT_TRUE(p_entails(kb, {Formula::disjunction({a, b}), c}));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, CautiousMonotonicity) {
  int premises_held = 0;
  Gen g(443);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const Formula a = related(g, kb, 4), b = related(g, kb, 4), c = related(g, kb, 4);
    if (p_entails(kb, {a, b}) && p_entails(kb, {a, c})) {
      ++premises_held;
      EXPECT_TRUE(p_entails(kb, {Formula::conjunction({a, b}), c}));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, Loop) {
  int premises_held = 0;
  Gen g(449);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 4);
    const int k = g.uniform(1, 3);
    std::vector<Formula> chain;
    for (int j = 0; j <= k; ++j) chain.push_back(related(g, kb, 4));
    bool premises = p_entails(kb, {chain[static_cast<std::size_t>(k)], chain[0]});
    for (int j = 0; premises && j < k; ++j) {
      premises = p_entails(kb, {chain[static_cast<std::size_t>(j)], chain[static_cast<std::size_t>(j + 1)]});
    }
    if (premises) {
      ++premises_held;
      EXPECT_TRUE(p_entails(kb, {chain[0], chain[static_cast<std::size_t>(k)]}));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, MonotoneInTheBase) {
  int premises_held = 0;
  Gen g(457);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto kb = random_base(g, 3);
    auto bigger = kb;
    for (const auto& c : random_base(g, 3)) bigger.push_back(c);
    const Conditional q{related(g, kb, 3), related(g, kb, 3)};
    if (p_entails(kb, q)) {
      ++premises_held;
      EXPECT_TRUE(p_entails(bigger, q));
    }
  }
  expect_nonvacuous(premises_held);
}

TEST(SystemPProperty, AttackKindInclusions) {
  Gen g(461);
  for (int i = 0; i < testkit::kCases; ++i) {
    const Conditional c1{g.formula(3, 2), g.formula(3, 2)};
    const Conditional c2 = g.coin() ? Conditional{g.formula(3, 2), Formula::negation(c1.cons)}
                                    : Conditional{g.formula(3, 2), g.formula(3, 2)};
    const Argument a1{{c1}, context_of(c1), c1};
    const Argument a2{{c2}, context_of(c2), c2};
    const auto k = attack_kinds(a2, a1);
    if (k.count(Attack::DirectRebuttal)) EXPECT_TRUE(k.count(Attack::Rebuttal));
    if (k.count(Attack::CanonicalUndercut)) EXPECT_TRUE(k.count(Attack::Undercut));
  }
}
