#include <gtest/gtest.h>

#include <algorithm>

#include "darg/parser.hpp"
#include "darg/simple_logic.hpp"
#include "testkit.hpp"

using namespace darg;
using namespace darg::simple;
using testkit::Gen;

namespace {

Literal L(std::string_view s) { return as_literal(parse_formula(s)); }
Rule R(std::string_view s) { return rule_from_formula(parse_formula(s)); }

KnowledgeBase kb(std::vector<std::string_view> facts, std::vector<std::string_view> rules) {
  KnowledgeBase k;
  for (auto f : facts) k.facts.insert(L(f));
  for (auto r : rules) k.rules.insert(R(r));
  return k;
}

// Naive forward chaining, independent of the library.
std::set<Literal> oracle_closure(const KnowledgeBase& d) {
  std::set<Literal> known(d.facts.begin(), d.facts.end());
  std::set<Literal> heads;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rule& r : d.rules) {
      const bool fires = std::all_of(r.body.begin(), r.body.end(),
                                     [&](const Literal& l) { return known.count(l) > 0; });
      if (fires && !heads.count(r.head)) {
        heads.insert(r.head);
        known.insert(r.head);
        changed = true;
      }
    }
  }
  return heads;
}

KnowledgeBase random_kb(Gen& g) {
  KnowledgeBase k;
  const int nf = g.uniform(0, 3);
  for (int i = 0; i < nf; ++i) k.facts.insert(as_literal(g.literal(3)));
  const int nr = g.uniform(1, 3);
  for (int i = 0; i < nr; ++i) {
    Rule r;
    const int nb = g.uniform(1, 2);
    for (int b = 0; b < nb; ++b) r.body.push_back(as_literal(g.literal(3)));
    std::sort(r.body.begin(), r.body.end());
    r.body.erase(std::unique(r.body.begin(), r.body.end()), r.body.end());
    r.head = as_literal(g.literal(3));
    k.rules.insert(r);
  }
  return k;
}

KnowledgeBase subset(const KnowledgeBase& k, unsigned mask) {
  KnowledgeBase out;
  unsigned i = 0;
  for (const Literal& f : k.facts) {
    if (mask >> i++ & 1U) out.facts.insert(f);
  }
  for (const Rule& r : k.rules) {
    if (mask >> i++ & 1U) out.rules.insert(r);
  }
  return out;
}

}  // namespace

TEST(SimpleLogic, ChainConsequences) {
  const auto d = kb({"a", "b"}, {"a & b -> c", "c -> d"});
  EXPECT_TRUE(derives(d, L("c")));
  EXPECT_TRUE(derives(d, L("d")));
  EXPECT_FALSE(derives(d, L("a")));
  EXPECT_FALSE(derives(d, L("b")));
}

TEST(SimpleLogic, RuleShapeIsChecked) {
  EXPECT_THROW((void)R("a | b -> c"), UsageError);
  EXPECT_THROW((void)R("a -> b & c"), UsageError);
  EXPECT_EQ(R("a & !b -> c").str(), "a & !b -> c");
}

TEST(SimpleLogic, EmployeeArgumentIsMinimal) {
  const Argument a{kb({"clever(John)", "conscientious(John)"},
                      {"clever(John) & conscientious(John) -> goodEmployee(John)"}),
                   L("goodEmployee(John)")};
  EXPECT_TRUE(is_minimal(a));
  EXPECT_TRUE(derives(a.support, a.claim));
}

TEST(SimpleLogic, MetroUndercut) {
  const Argument a1{kb({"efficientMetro"}, {"efficientMetro -> useMetro"}), L("useMetro")};
  const Argument a2{kb({"strikeMetro"}, {"strikeMetro -> !efficientMetro"}), L("!efficientMetro")};
  EXPECT_EQ(attack_kinds(a2, a1), std::set<Attack>{Attack::Undercut});
  EXPECT_TRUE(attack_kinds(a1, a2).empty());
}

TEST(SimpleLogic, DeficitRebut) {
  const Argument a1{kb({"govDeficit"}, {"govDeficit -> cutGovSpending"}), L("cutGovSpending")};
  const Argument a2{kb({"weakEconomy"}, {"weakEconomy -> !cutGovSpending"}), L("!cutGovSpending")};
  EXPECT_EQ(attack_kinds(a1, a2), std::set<Attack>{Attack::Rebut});
  EXPECT_EQ(attack_kinds(a2, a1), std::set<Attack>{Attack::Rebut});
}

TEST(SimpleLogic, SelfCycleKnowledgeBase) {
  const auto d = kb({"a", "b", "c"}, {"a & c -> !a", "b -> !c", "a & c -> !b"});
  const auto args = all_arguments(d);
  ASSERT_EQ(args.size(), 3U);
  EXPECT_EQ(args[0].claim, L("!a"));
  EXPECT_EQ(args[0].support, kb({"a", "c"}, {"a & c -> !a"}));
  EXPECT_EQ(attack_kinds(args[0], args[0]), std::set<Attack>{Attack::Undercut});
}

TEST(SimpleLogic, ParaconsistentSupportsAreKept) {
  const auto d = kb({"a", "!a"}, {"a -> b", "!a -> b"});
  EXPECT_EQ(arguments_for(d, L("b")).size(), 2U);
}

TEST(SimpleLogic, EmptyKnowledgeBase) { EXPECT_TRUE(all_arguments({}).empty()); }

TEST(SimpleLogicProperty, ClosureMatchesOracle) {
  Gen g(101);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto d = random_kb(g);
    EXPECT_EQ(consequences(d), oracle_closure(d)) << d.str();
  }
}

TEST(SimpleLogicProperty, SupportsAreExactlyTheMinimalSubsets) {
  Gen g(103);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto d = random_kb(g);
    const unsigned n = static_cast<unsigned>(d.size());
    for (const Literal& goal : oracle_closure(d)) {
      std::set<KnowledgeBase> expected;
      for (unsigned m = 0; m < (1U << n); ++m) {
        const auto s = subset(d, m);
        if (!oracle_closure(s).count(goal)) continue;
        bool minimal = true;
        for (unsigned sub = (m - 1) & m; minimal && sub != m; sub = (sub - 1) & m) {
          if (oracle_closure(subset(d, sub)).count(goal)) minimal = false;
          if (sub == 0) break;
        }
        if (minimal) expected.insert(s);
      }
      std::set<KnowledgeBase> got;
      for (const auto& a : arguments_for(d, goal)) got.insert(a.support);
      EXPECT_EQ(got, expected) << d.str() << " |- " << goal.str();
    }
  }
}

TEST(SimpleLogicProperty, ConstructionIsMonotone) {
  Gen g(107);
  for (int i = 0; i < testkit::kCases; ++i) {
    const auto d = random_kb(g);
    auto bigger = d;
    const auto extra = random_kb(g);
    bigger.facts.insert(extra.facts.begin(), extra.facts.end());
    bigger.rules.insert(extra.rules.begin(), extra.rules.end());
    const auto small_args = all_arguments(d);
    const auto big_args = all_arguments(bigger);
    for (const auto& a : small_args) {
      EXPECT_NE(std::find(big_args.begin(), big_args.end(), a), big_args.end()) << a.str();
    }
  }
}
