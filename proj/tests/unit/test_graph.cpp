#include <gtest/gtest.h>

#include <algorithm>

#include "darg/error.hpp"
#include "darg/instantiate.hpp"
#include "darg/parser.hpp"
#include "testkit.hpp"

using namespace darg;
using testkit::Gen;

namespace {

Formula P(std::string_view s) { return parse_formula(s); }

ArgGraph abstract_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  ArgGraph g;
  for (int i = 1; i <= n; ++i) g.add_node({"A" + std::to_string(i), {}});
  for (auto [a, b] : edges) g.add_attack("A" + std::to_string(a), "A" + std::to_string(b));
  return g;
}

ArgGraph random_graph(Gen& g) {
  const int n = g.uniform(0, 10);
  std::vector<std::pair<int, int>> edges;
  const double density = g.uniform(5, 35) / 100.0;
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) {
      if (g.coin(a == b ? density / 3 : density)) edges.emplace_back(a, b);
    }
  }
  return abstract_graph(n, edges);
}

// Subset-enumeration semantics used as the oracle.
struct Brute {
  explicit Brute(const ArgGraph& g) : n(g.size()), att(n, std::vector<bool>(n)) {
    for (const Attack& a : g.attacks()) att[*g.index_of(a.from)][*g.index_of(a.to)] = true;
    for (unsigned m = 0; m < (1U << n); ++m) {
      if (!conflict_free(m)) continue;
      if (defended(m) == m) complete.push_back(m);
      bool stable_ext = true;
      for (unsigned y = 0; y < n && stable_ext; ++y) {
        if (!(m >> y & 1U) && !attacked_by(m, y)) stable_ext = false;
      }
      if (stable_ext) stable.push_back(m);
    }
    for (unsigned c : complete) {
      const bool maximal = std::none_of(complete.begin(), complete.end(), [&](unsigned d) {
        return d != c && (c & d) == c;
      });
      if (maximal) preferred.push_back(c);
    }
    grounded = 0;
    while (true) {
      const unsigned next = defended(grounded);
      if (next == grounded) break;
      grounded = next;
    }
  }

  bool attacked_by(unsigned s, unsigned y) const {
    for (unsigned x = 0; x < n; ++x) {
      if ((s >> x & 1U) && att[x][y]) return true;
    }
    return false;
  }
  bool conflict_free(unsigned s) const {
    for (unsigned y = 0; y < n; ++y) {
      if ((s >> y & 1U) && attacked_by(s, y)) return false;
    }
    return true;
  }
  unsigned defended(unsigned s) const {
    unsigned out = 0;
    for (unsigned y = 0; y < n; ++y) {
      bool ok = true;
      for (unsigned x = 0; x < n && ok; ++x) {
        if (att[x][y] && !attacked_by(s, x)) ok = false;
      }
      if (ok) out |= 1U << y;
    }
    return out;
  }

  unsigned n;
  std::vector<std::vector<bool>> att;
  std::vector<unsigned> complete, stable, preferred;
  unsigned grounded = 0;
};

unsigned mask_of(const ArgGraph& g, const std::vector<std::string>& ids) {
  unsigned m = 0;
  for (const auto& id : ids) m |= 1U << *g.index_of(id);
  return m;
}

std::set<unsigned> masks(const ArgGraph& g, const ExtensionSet& es) {
  std::set<unsigned> out;
  for (const auto& e : es.extensions) out.insert(mask_of(g, e));
  return out;
}

simple::KnowledgeBase self_cycle_kb() {
  simple::KnowledgeBase k;
  for (auto f : {"a", "b", "c"}) k.facts.insert(as_literal(P(f)));
  for (auto r : {"a & c -> !a", "b -> !c", "a & c -> !b"}) k.rules.insert(simple::rule_from_formula(P(r)));
  return k;
}

}  // namespace

TEST(Graph, SelfCycleGraph) {
  const ArgGraph g = generate_graph(self_cycle_kb());
  ASSERT_EQ(g.size(), 3U);
  std::vector<std::pair<std::string, std::string>> edges;
  for (const Attack& a : g.attacks()) edges.emplace_back(a.from, a.to);
  std::sort(edges.begin(), edges.end());
  const std::vector<std::pair<std::string, std::string>> want{
      {"A1", "A1"}, {"A1", "A2"}, {"A2", "A3"}, {"A3", "A1"}, {"A3", "A2"}};
  EXPECT_EQ(edges, want);
  EXPECT_TRUE(grounded_extension(g).empty());
  const std::vector<std::vector<std::string>> a3{{"A3"}};
  EXPECT_EQ(extensions(g, Semantics::Stable).extensions, a3);
  EXPECT_EQ(extensions(g, Semantics::Preferred).extensions, a3);
}

TEST(Graph, NoAttacksAcceptsEverything) {
  const ArgGraph g = abstract_graph(4, {});
  for (auto s : {Semantics::Grounded, Semantics::Complete, Semantics::Preferred, Semantics::Stable}) {
    const auto es = extensions(g, s);
    ASSERT_EQ(es.extensions.size(), 1U);
    EXPECT_EQ(es.extensions[0].size(), 4U);
  }
}

TEST(Graph, EmptyGraph) {
  const ArgGraph g;
  EXPECT_TRUE(accepted_claims(g, Semantics::Grounded, AcceptanceMode::Credulous).empty());
  EXPECT_EQ(generate_graph(simple::KnowledgeBase{}).size(), 0U);
}

TEST(Graph, EndpointsAndIdsAreChecked) {
  ArgGraph g = abstract_graph(2, {});
  EXPECT_THROW(g.add_node({"A1", {}}), UsageError);
  EXPECT_THROW(g.add_attack("A1", "A9"), UsageError);
  g.add_attack("A1", "A2", {"x"});
  g.add_attack("A1", "A2", {"w", "x"});
  ASSERT_EQ(g.attacks().size(), 1U);
  EXPECT_EQ(g.attacks()[0].kinds, (std::vector<std::string>{"w", "x"}));
}

TEST(Graph, NodeBound) {
  const ArgGraph g = abstract_graph(26, {});
  EXPECT_THROW((void)extensions(g, Semantics::Preferred), ResourceLimitError);
  EXPECT_EQ(extensions(g, Semantics::Grounded).extensions[0].size(), 26U);
}

TEST(Graph, SkepticalOverNoExtensionsIsEmpty) {
  const ArgGraph g = abstract_graph(1, {{1, 1}});
  EXPECT_TRUE(extensions(g, Semantics::Stable).extensions.empty());
  EXPECT_TRUE(accepted_claims(g, Semantics::Stable, AcceptanceMode::Skeptical).empty());
}

TEST(Graph, ClassicalFocalGraph) {
  GenerationConfig cfg;
  cfg.focal = {P("a"), P("!a")};
  const ArgGraph one = generate_graph(ClassicalBase{{P("a")}}, cfg);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_TRUE(one.attacks().empty());
  EXPECT_EQ(accepted_claims(one, Semantics::Grounded, AcceptanceMode::Credulous),
            std::vector<std::string>{"a"});
  const ArgGraph two = generate_graph(ClassicalBase{{P("a"), P("!a")}}, cfg);
  EXPECT_EQ(two.size(), 2U);
  EXPECT_TRUE(accepted_claims(two, Semantics::Grounded, AcceptanceMode::Credulous).empty());
}

TEST(Graph, DerivedFocalClaims) {
  const auto claims = focal_claims(ClassicalBase{{P("a"), P("!b")}}, {});
  const std::vector<Formula> want{P("a"), P("!b"), P("!a"), P("b"), P("!(a & !b)")};
  EXPECT_EQ(claims, want);
}

TEST(Graph, UnknownKindIsRejected) {
  GenerationConfig cfg;
  cfg.kinds = {"rebuttal"};
  EXPECT_THROW((void)generate_graph(self_cycle_kb(), cfg), UsageError);
}

TEST(GraphProperty, SemanticsMatchSubsetEnumeration) {
  Gen gen(503);
  for (int i = 0; i < testkit::kCases; ++i) {
    const ArgGraph g = random_graph(gen);
    const Brute b(g);
    EXPECT_EQ(mask_of(g, grounded_extension(g)), b.grounded);
    EXPECT_EQ(masks(g, extensions(g, Semantics::Complete)),
              std::set<unsigned>(b.complete.begin(), b.complete.end()));
    EXPECT_EQ(masks(g, extensions(g, Semantics::Preferred)),
              std::set<unsigned>(b.preferred.begin(), b.preferred.end()));
    EXPECT_EQ(masks(g, extensions(g, Semantics::Stable)),
              std::set<unsigned>(b.stable.begin(), b.stable.end()));
  }
}

TEST(GraphProperty, GroundedInCompleteAndStableArePreferred) {
  Gen gen(509);
  for (int i = 0; i < testkit::kCases; ++i) {
    const ArgGraph g = random_graph(gen);
    const unsigned grounded = mask_of(g, grounded_extension(g));
    const auto complete = masks(g, extensions(g, Semantics::Complete));
    const auto preferred = masks(g, extensions(g, Semantics::Preferred));
    EXPECT_TRUE(complete.count(grounded));
    for (unsigned c : complete) EXPECT_EQ(c & grounded, grounded);
    for (unsigned s : masks(g, extensions(g, Semantics::Stable))) EXPECT_TRUE(preferred.count(s));
    for (const ArgNode& n : g.nodes()) {
      if (!g.attacks(n.id, n.id)) continue;
      const unsigned bit = 1U << *g.index_of(n.id);
      for (unsigned c : complete) EXPECT_EQ(c & bit, 0U);
    }
  }
}

TEST(GraphProperty, GenerativeConstructionIsMonotone) {
  Gen gen(521);
  for (int i = 0; i < testkit::kCases; ++i) {
    simple::KnowledgeBase k;
    for (int f = gen.uniform(0, 3); f > 0; --f) k.facts.insert(as_literal(gen.literal(3)));
    for (int r = gen.uniform(1, 3); r > 0; --r) {
      k.rules.insert({{as_literal(gen.literal(3))}, as_literal(gen.literal(3))});
    }
    auto bigger = k;
    bigger.facts.insert(as_literal(gen.literal(3)));
    bigger.rules.insert({{as_literal(gen.literal(3))}, as_literal(gen.literal(3))});
    const ArgGraph small_g = generate_graph(k);
    const ArgGraph big_g = generate_graph(bigger);
    auto find = [&](const Payload& p) -> std::optional<std::string> {
      for (const ArgNode& n : big_g.nodes()) {
        if (n.payload == p) return n.id;
      }
      return std::nullopt;
    };
    for (const ArgNode& n : small_g.nodes()) EXPECT_TRUE(find(n.payload).has_value());
    for (const Attack& a : small_g.attacks()) {
      const auto from = find(small_g.node(a.from).payload);
      const auto to = find(small_g.node(a.to).payload);
      ASSERT_TRUE(from && to);
      EXPECT_TRUE(big_g.attacks(*from, *to));
    }
  }
}
