#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <sstream>

#include "noncomm/constructions.hpp"
#include "noncomm/matgroups.hpp"
#include "noncomm/ncgraph.hpp"
#include "oracles.hpp"

using namespace noncomm;
using namespace std::chrono_literals;

namespace {

Group named(const std::string& text) { return build(parse_descriptor(text)); }

std::vector<std::vector<bool>> adjacency_of(const Group& g) {
  std::vector<Index> verts;
  for (Index x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Index y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (!central) verts.push_back(x);
  }
  std::vector<std::vector<bool>> adj(verts.size(), std::vector<bool>(verts.size(), false));
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = 0; j < verts.size(); ++j)
      adj[i][j] = g.mul(verts[i], verts[j]) != g.mul(verts[j], verts[i]);
  return adj;
}

oracle::CentralizerData brute(const Group& g) {
  return oracle::centralizers(g.order(), [&](std::size_t a, std::size_t b) {
    return g.mul(static_cast<Index>(a), static_cast<Index>(b));
  });
}

template <typename M>
std::map<std::size_t, std::size_t> widen(const M& m) {
  return {m.begin(), m.end()};
}

std::vector<std::size_t> random_perm(std::size_t n, std::mt19937& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<Group> battery() {
  return {named("S3"), named("D8"), named("Q8"), named("A4"), named("D10"), named("semidirect(C5,C4,x^2)"),
          named("direct(C2,S3)"), sl2(3), named("S4"), gl2(3)};
}

}  // namespace

TEST(BuildGraph, S3) {
  const Group g = named("S3");
  const NCGraph a = build_graph(g);
  ASSERT_EQ(a.vertex_count(), 5u);
  for (std::size_t v = 0; v < 5; ++v) EXPECT_EQ(a.degree(v), g.element_order(a.element(v)) == 2 ? 4u : 3u);
  EXPECT_EQ(a.edge_count(), 9u);
}

TEST(BuildGraph, SL23AndD8) {
  EXPECT_EQ(build_graph(sl2(3)).vertex_count(), 22u);
  const NCGraph d = build_graph(named("D8"));
  ASSERT_EQ(d.vertex_count(), 6u);
  std::size_t non_edges = 0;
  for (std::size_t u = 0; u < 6; ++u) {
    EXPECT_EQ(d.degree(u), 4u);
    for (std::size_t v = u + 1; v < 6; ++v) non_edges += !d.adjacent(u, v);
  }
  EXPECT_EQ(non_edges, 3u);
}

TEST(BuildGraph, AbelianRejected) {
  try {
    build_graph(named("C6"));
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_STREQ(e.what(), "graph undefined for abelian groups");
  }
}

TEST(Profile, GL24) {
  const auto p = centralizer_profile(gl2(4));
  EXPECT_EQ(widen(p.w), (std::map<std::size_t, std::size_t>{{9, 60}, {12, 45}, {15, 72}}));
  EXPECT_EQ(widen(p.distinct_counts), (std::map<std::size_t, std::size_t>{{9, 10}, {12, 5}, {15, 6}}));
  EXPECT_EQ(p.element_total(), 177u);
  EXPECT_EQ(p.distinct_values(), (std::vector<Index>{9, 12, 15}));
}

TEST(Profile, SL25) {
  const auto p = centralizer_profile(sl2(5));
  EXPECT_EQ(widen(p.w), (std::map<std::size_t, std::size_t>{{4, 30}, {6, 40}, {10, 48}}));
  EXPECT_EQ(widen(p.w_prime), (std::map<std::size_t, std::size_t>{{2, 30}, {3, 40}, {5, 48}}));
  EXPECT_EQ(p.distinct_prime_values(), (std::vector<Index>{2, 3, 5}));
}

TEST(Profile, SL23ContainsFourAndSix) {
  const auto p = centralizer_profile(sl2(3));
  EXPECT_TRUE(p.w.count(4));
  EXPECT_TRUE(p.w.count(6));
}

TEST(Profile, JsonKeys) {
  const auto j = centralizer_profile(named("S3")).to_json();
  EXPECT_TRUE(j.contains("W"));
  EXPECT_TRUE(j.contains("W_prime"));
  EXPECT_TRUE(j.contains("distinct_centralizer_counts"));
}

TEST(Profile, MatchesBruteForceOracle) {
  for (const auto& g : battery()) {
    const auto data = brute(g);
    const auto p = centralizer_profile(g);
    EXPECT_EQ(widen(p.w), widen(data.w)) << g.label();
    EXPECT_EQ(widen(p.distinct_counts), widen(data.distinct)) << g.label();
    EXPECT_EQ(p.center_order, data.center);
    EXPECT_EQ(profile_from_graph(build_graph(g)), p) << g.label();
  }
}

TEST(Clique, S3IsFour) {
  const NCGraph a = build_graph(named("S3"));
  const auto r = clique_number(a);
  EXPECT_EQ(r.omega, 4u);
  EXPECT_EQ(oracle::max_clique(adjacency_of(named("S3"))), 4u);
  EXPECT_TRUE(is_clique(a, r.witness));
}

TEST(Clique, GL23IsThirteen) {
  const Group g = gl2(3);
  const NCGraph a = build_graph(g);
  const auto r = clique_number(a);
  EXPECT_EQ(r.omega, 13u);
  EXPECT_TRUE(is_noncommuting_set(g, a, r.witness));
}

TEST(Clique, SL25EqualsPartitionCount) {
  const Group g = sl2(5);
  const auto r = clique_number(build_graph(g));
  EXPECT_EQ(r.omega, 31u);
  EXPECT_EQ(maximal_abelian_partition(g).components.size(), 31u);
}

TEST(Clique, MatchesEnumerationOracleOnSmallGroups) {
  for (const auto& g : battery()) {
    if (g.order() - center(g).size() > 22) continue;
    EXPECT_EQ(clique_number(build_graph(g)).omega, oracle::max_clique(adjacency_of(g))) << g.label();
  }
}

TEST(Clique, ZeroBudgetThrowsWithBestSoFar) {
  const NCGraph a = build_graph(sl2(5));
  try {
    clique_number(a, 0ms);
    FAIL();
  } catch (const CliqueBudgetExceeded& e) {
    EXPECT_TRUE(is_clique(a, e.best().witness));
    EXPECT_EQ(e.best().omega, e.best().witness.size());
  }
}

TEST(Clique, WitnessCheck) {
  const NCGraph a = build_graph(named("S3"));
  std::vector<std::size_t> bad{0, 0};
  EXPECT_FALSE(is_clique(a, bad));
  std::vector<std::size_t> out_of_range{0, 9};
  EXPECT_FALSE(is_clique(a, out_of_range));
}

TEST(Fingerprint, S3DegreesAndRelabeling) {
  const NCGraph a = build_graph(named("S3"));
  const auto f = fingerprint(a);
  EXPECT_EQ(f.degrees, (std::map<std::size_t, std::size_t>{{3, 2}, {4, 3}}));
  std::mt19937 rng(11);
  for (int t = 0; t < 5; ++t) {
    const auto p = random_perm(a.vertex_count(), rng);
    EXPECT_TRUE(same_fingerprint(f, fingerprint(a.relabeled(p))));
  }
}

TEST(Fingerprint, SL23DiffersFromZ2xA4) {
  const auto a = fingerprint(build_graph(sl2(3)));
  const auto b = fingerprint(build_graph(named("direct(C2,A4)")));
  EXPECT_NE(a.degrees, b.degrees);
  EXPECT_FALSE(same_fingerprint(a, b));
}

TEST(GraphIso, Examples) {
  const NCGraph a = build_graph(sl2(3));
  const auto self = graphs_isomorphic(a, a);
  ASSERT_TRUE(self);
  for (std::size_t v = 0; v < a.vertex_count(); ++v) EXPECT_EQ((*self)[v], v);

  std::optional<Group> copy;
  for (const auto& g : order24_catalog())
    if (is_isomorphic(g, sl2(3))) copy = g;
  ASSERT_TRUE(copy);
  EXPECT_TRUE(graphs_isomorphic(a, build_graph(*copy)).has_value());
  EXPECT_FALSE(graphs_isomorphic(a, build_graph(named("D24"))).has_value());
  EXPECT_TRUE(graphs_isomorphic(build_graph(named("D8")), build_graph(named("Q8"))).has_value());
}

TEST(GraphIso, BoundExceeded) {
  const NCGraph a = build_graph(sl2(5));
  try {
    graphs_isomorphic(a, a);
    FAIL();
  } catch (const GroupError& e) {
    EXPECT_STREQ(e.what(), "iso bound exceeded; compare fingerprints instead");
  }
}

TEST(Export, Dimacs) {
  const NCGraph a = build_graph(named("S3"));
  std::istringstream in(to_dimacs(a));
  std::string line;
  std::size_t edges = 0;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.rfind("c", 0) == 0) continue;
    if (line.rfind("p ", 0) == 0) {
      EXPECT_EQ(line, "p edge 5 9");
      header = true;
      continue;
    }
    std::istringstream ls(line);
    char e;
    std::size_t u, v;
    ls >> e >> u >> v;
    EXPECT_EQ(e, 'e');
    EXPECT_LT(u, v);
    EXPECT_GE(u, 1u);
    EXPECT_LE(v, 5u);
    EXPECT_TRUE(a.adjacent(u - 1, v - 1));
    ++edges;
  }
  EXPECT_TRUE(header);
  EXPECT_EQ(edges, 9u);
}

TEST(Export, JsonEdgeList) {
  const Group g = named("S3");
  const auto j = to_json(build_graph(g), g);
  EXPECT_EQ(j.at("vertices").size(), 5u);
  EXPECT_EQ(j.at("edges").size(), 9u);
}

// --- properties --------------------------------------------------------------

TEST(GraphProperties, DegreeEqualsIndexOfCentralizer) {
  for (const auto& g : battery()) {
    const NCGraph a = build_graph(g);
    EXPECT_EQ(a.vertex_count(), g.order() - center(g).size());
    for (std::size_t v = 0; v < a.vertex_count(); ++v) {
      EXPECT_FALSE(a.adjacent(v, v));
      EXPECT_EQ(a.degree(v), g.order() - centralizer(g, a.element(v)).size());
    }
    EXPECT_EQ(centralizer_profile(g).element_total(), a.vertex_count());
  }
}

TEST(GraphProperties, IndependentIffPairwiseCommuting) {
  std::mt19937 rng(20240602);
  for (const auto& g : battery()) {
    const NCGraph a = build_graph(g);
    std::uniform_int_distribution<std::size_t> pick(0, a.vertex_count() - 1);
    for (int t = 0; t < 200; ++t) {
      std::set<std::size_t> s;
      const std::size_t k = 2 + t % 3;
      while (s.size() < k && s.size() < a.vertex_count()) s.insert(pick(rng));
      bool independent = true, commuting = true;
      for (auto u : s)
        for (auto v : s)
          if (u < v) {
            independent = independent && !a.adjacent(u, v);
            commuting = commuting && g.commutes(a.element(u), a.element(v));
          }
      EXPECT_EQ(independent, commuting);
    }
  }
}

TEST(GraphProperties, ACGroupCliqueEqualsDistinctCentralizers) {
  for (const auto& g : {named("S3"), named("D8"), named("A4"), named("D10"), named("semidirect(C5,C4,x^2)"), sl2(3),
                        gl2(3), sl2(4), psl2(5)}) {
    std::size_t distinct = 0;
    for (auto [k, v] : centralizer_profile(g).distinct_counts) distinct += v;
    EXPECT_EQ(clique_number(build_graph(g)).omega, distinct) << g.label();
  }
}

TEST(GraphProperties, RelabelingInvariance) {
  std::mt19937 rng(5);
  for (const auto& g : {sl2(3), named("A4"), gl2(3)}) {
    const NCGraph a = build_graph(g);
    const auto f = fingerprint(a);
    const auto w = profile_from_graph(a);
    const auto omega = clique_number(a).omega;
    for (int t = 0; t < 5; ++t) {
      const NCGraph b = a.relabeled(random_perm(a.vertex_count(), rng));
      EXPECT_TRUE(same_fingerprint(f, fingerprint(b)));
      EXPECT_EQ(profile_from_graph(b), w);
      EXPECT_EQ(clique_number(b).omega, omega);
      const auto iso = graphs_isomorphic(a, b);
      ASSERT_TRUE(iso);
    }
  }
}

// Equal order and isomorphic graphs force equal W multisets.
TEST(GraphProperties, IsomorphicGraphsShareW) {
  std::vector<Group> groups;
  for (const auto& g : order24_catalog())
    if (!is_abelian(g)) groups.push_back(g);
  groups.push_back(named("D8"));
  groups.push_back(named("Q8"));
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = i + 1; j < groups.size(); ++j) {
      if (groups[i].order() != groups[j].order()) continue;
      const NCGraph a = build_graph(groups[i]);
      const NCGraph b = build_graph(groups[j]);
      if (a.vertex_count() > kGraphIsoVertexLimit || b.vertex_count() > kGraphIsoVertexLimit) continue;
      if (!graphs_isomorphic(a, b)) continue;
      ++pairs;
      EXPECT_EQ(centralizer_profile(groups[i]).w, centralizer_profile(groups[j]).w)
          << groups[i].label() << " " << groups[j].label();
    }
  EXPECT_GE(pairs, 1u);
}
