#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "noncomm/constructions.hpp"
#include "noncomm/matgroups.hpp"
#include "oracles.hpp"

using namespace noncomm;

namespace {

Group named(const std::string& text) { return build(parse_descriptor(text)); }

Index first_of_order(const Group& g, Index order) {
  for (Index x = 0; x < g.order(); ++x)
    if (g.element_order(x) == order) return x;
  throw std::runtime_error("no element of that order");
}

Mat2 mat(const FieldPtr& f, std::uint64_t a, std::uint64_t b, std::uint64_t c, std::uint64_t d) {
  return {FieldElem::from_code(f, a), FieldElem::from_code(f, b), FieldElem::from_code(f, c), FieldElem::from_code(f, d)};
}

std::string group_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.what();
  }
  return "";
}

std::vector<Group> battery() {
  return {named("S3"), named("D8"), named("Q8"), named("A4"), named("D10"), named("C6"),
          named("semidirect(C5,C4,x^2)"), named("direct(C2,S3)"), sl2(3), named("S4")};
}

}  // namespace

TEST(Closure, Examples) {
  const Group s3 = named("S3");
  EXPECT_EQ(closure(s3, std::vector<Index>{s3.identity()}).size(), 1u);
  EXPECT_EQ(closure(s3, std::vector<Index>{first_of_order(s3, 2)}).size(), 2u);

  const auto m = sl2_matrices(3);
  const auto f = m.field;
  const std::vector<Index> gens{m.index_of(mat(f, 1, 1, 0, 1)), m.index_of(mat(f, 1, 0, 1, 1))};
  EXPECT_EQ(closure(m.group, gens).size(), 24u);
}

TEST(Center, Examples) {
  EXPECT_EQ(center(named("S3")).size(), 1u);
  EXPECT_EQ(center(sl2(3)).size(), 2u);
  EXPECT_EQ(center(gl2(4)).size(), 3u);
}

TEST(Centralizer, Examples) {
  const Group s3 = named("S3");
  EXPECT_EQ(centralizer(s3, s3.identity()).size(), 6u);

  const Group g = sl2(3);
  bool has4 = false;
  for (Index x = 0; x < g.order(); ++x) has4 = has4 || centralizer(g, x).size() == 4;
  EXPECT_TRUE(has4);

  const auto m = sl2_matrices(5);
  EXPECT_EQ(centralizer(m.group, m.index_of(mat(m.field, 1, 1, 0, 1))).size(), 10u);
}

TEST(DerivedSubgroup, Examples) {
  EXPECT_EQ(derived_subgroup(named("C6")).size(), 1u);
  EXPECT_EQ(derived_subgroup(named("S3")).size(), 3u);
  const Group g = gl2(4);
  const Subgroup d = derived_subgroup(g);
  EXPECT_EQ(d.size(), 60u);
  EXPECT_TRUE(is_isomorphic(subgroup_as_group(g, d, "G'"), sl2(4)).has_value());
}

TEST(Quotient, Examples) {
  const Group s3 = named("S3");
  EXPECT_TRUE(is_isomorphic(quotient(s3, trivial_subgroup(s3)), s3).has_value());

  const Group g = sl2(3);
  const Group q = quotient(g, center(g));
  EXPECT_EQ(q.order(), 12u);
  EXPECT_TRUE(is_isomorphic(q, named("A4")).has_value());

  const Group h = gl2(5);
  const Group p = quotient(h, center(h));
  EXPECT_EQ(p.order(), 120u);
  EXPECT_TRUE(is_isomorphic(p, pgl2(5)).has_value());

  const Subgroup order2 = closure(s3, std::vector<Index>{first_of_order(s3, 2)});
  EXPECT_EQ(group_error([&] { quotient(s3, order2); }), "not normal");
}

TEST(Predicates, Examples) {
  EXPECT_TRUE(is_nilpotent(named("D8")));
  EXPECT_FALSE(is_nilpotent(sl2(3)));
  EXPECT_TRUE(is_solvable(sl2(3)));
  EXPECT_FALSE(is_solvable(sl2(5)));
  EXPECT_TRUE(is_abelian(named("C6")));
  EXPECT_FALSE(is_abelian(named("S3")));
  EXPECT_FALSE(is_nilpotent(named("S3")));
  EXPECT_TRUE(is_nilpotent(named("direct(C3,Q8)")));
}

TEST(Sylow, Examples) {
  EXPECT_EQ(sylow(named("S3"), 3).count, 1u);
  EXPECT_EQ(sylow(sl2(3), 3).count, 4u);
  EXPECT_EQ(sylow(sl2(5), 5).count, 6u);
  EXPECT_EQ(sylow(sl2(5), 5).representative.size(), 5u);
  EXPECT_THROW(sylow(named("S3"), 5), GroupError);
}

TEST(Isomorphism, Examples) {
  const Group s3 = named("S3");
  const auto self = is_isomorphic(s3, s3);
  ASSERT_TRUE(self);
  EXPECT_TRUE(is_isomorphism(s3, s3, *self));
  EXPECT_TRUE(is_isomorphic(sl2(2), s3).has_value());
  EXPECT_FALSE(is_isomorphic(sl2(3), named("direct(C2,A4)")).has_value());
  EXPECT_FALSE(is_isomorphic(named("D8"), named("Q8")).has_value());
  EXPECT_EQ(group_error([] { is_isomorphic(gl2(7), gl2(7)); }), "isomorphism bound exceeded");
}

TEST(DirectProduct, Examples) {
  const Group s3 = named("S3");
  EXPECT_TRUE(internal_direct_product(s3, whole_group(s3), trivial_subgroup(s3)));

  const Group g4 = gl2(4);
  EXPECT_TRUE(internal_direct_product(g4, derived_subgroup(g4), center(g4)));
  const Group g5 = gl2(5);
  const Subgroup d5 = derived_subgroup(g5);
  EXPECT_EQ(intersection(d5, center(g5)).size(), 2u);
  EXPECT_FALSE(internal_direct_product(g5, d5, center(g5)));
}

TEST(Lattice, CountsMatchSubsetOracle) {
  for (const auto& [text, expected] : std::vector<std::pair<std::string, std::size_t>>{{"C6", 4}, {"S3", 6}, {"A4", 10}}) {
    const Group g = named(text);
    const std::size_t brute = oracle::count_subgroups(g.order(), g.identity(),
                                                      [&](std::size_t a, std::size_t b) {
                                                        return g.mul(static_cast<Index>(a), static_cast<Index>(b));
                                                      });
    EXPECT_EQ(brute, expected) << text;
    EXPECT_EQ(subgroup_lattice(g).size(), expected) << text;
  }
  // D8 and Q8 checked against the oracle as well (10 and 6 subgroups).
  for (const auto* text : {"D8", "Q8"}) {
    const Group g = named(text);
    const std::size_t brute = oracle::count_subgroups(g.order(), g.identity(), [&](std::size_t a, std::size_t b) {
      return g.mul(static_cast<Index>(a), static_cast<Index>(b));
    });
    EXPECT_EQ(subgroup_lattice(g).size(), brute) << text;
  }
}

TEST(Lattice, BoundExceeded) {
  EXPECT_EQ(group_error([] { subgroup_lattice(sl2(7)); }), "lattice bound exceeded");
}

TEST(FromTable, RejectsInvalidTables) {
  // Not a Latin square.
  EXPECT_THROW(Group::from_table("bad", {"a", "b"}, {0, 0, 0, 1}), GroupError);
  // Latin square with identity 0 that is not associative (order 5 loop).
  const std::vector<Index> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  EXPECT_THROW(Group::from_table("loop", {"e", "a", "b", "c", "d"}, loop), GroupError);
  EXPECT_THROW(Group::from_table("dup", {"a", "a"}, {0, 1, 1, 0}), GroupError);
}

// --- properties --------------------------------------------------------------

TEST(GroupProperties, LagrangeOnLattices) {
  for (const auto& g : battery()) {
    if (g.order() > 200) continue;
    for (const auto& s : subgroup_lattice(g)) EXPECT_EQ(g.order() % s.size(), 0u) << g.label();
  }
}

TEST(GroupProperties, QuotientOrderAndCenterPullback) {
  for (const auto& g : battery()) {
    const Subgroup z = center(g);
    const auto qm = quotient_map(g, z);
    EXPECT_EQ(qm.group.order() * z.size(), g.order());
    const Subgroup zq = center(qm.group);
    const Subgroup pre = preimage(qm, zq);
    EXPECT_TRUE(is_subset(z, pre));
    for (auto x : pre.members()) EXPECT_TRUE(zq.contains(qm.coset_of[x]));
  }
}

TEST(GroupProperties, CentralizerContainsCyclicTimesCenter) {
  for (const auto& g : battery()) {
    const Subgroup z = center(g);
    for (Index x = 0; x < g.order(); ++x) {
      std::vector<Index> gens(z.members().begin(), z.members().end());
      gens.push_back(x);
      EXPECT_TRUE(is_subset(closure(g, gens), centralizer(g, x)));
    }
  }
}

TEST(GroupProperties, IsomorphismReflexiveSymmetricVerified) {
  std::mt19937 rng(7);
  const auto groups = battery();
  for (const auto& g : groups) {
    const auto self = is_isomorphic(g, g);
    ASSERT_TRUE(self) << g.label();
    EXPECT_TRUE(is_isomorphism(g, g, *self));
  }
  for (std::size_t i = 0; i < groups.size(); ++i)
    for (std::size_t j = 0; j < groups.size(); ++j) {
      const auto ab = is_isomorphic(groups[i], groups[j]);
      const auto ba = is_isomorphic(groups[j], groups[i]);
      EXPECT_EQ(ab.has_value(), ba.has_value());
      if (ab) EXPECT_TRUE(is_isomorphism(groups[i], groups[j], *ab));
    }
  // A group and a randomly relabeled copy are isomorphic.
  for (const auto& g : groups) {
    const Index n = g.order();
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Index> inv(n);
    for (Index i = 0; i < n; ++i) inv[perm[i]] = i;
    std::vector<Index> table(static_cast<std::size_t>(n) * n);
    std::vector<std::string> keys(n);
    for (Index a = 0; a < n; ++a) {
      keys[a] = "k" + std::to_string(a);
      for (Index b = 0; b < n; ++b) table[a * n + b] = inv[g.mul(perm[a], perm[b])];
    }
    const Group h = Group::from_table("shuffled", keys, table);
    const auto map = is_isomorphic(g, h);
    ASSERT_TRUE(map) << g.label();
    EXPECT_TRUE(is_isomorphism(g, h, *map));
  }
}

TEST(GroupProperties, SylowCountsCongruentAndDividing) {
  for (const auto& g : battery()) {
    for (auto p : prime_factors(g.order())) {
      const auto info = sylow(g, p);
      std::uint64_t pa = 1;
      while (g.order() % (pa * p) == 0) pa *= p;
      EXPECT_EQ(info.representative.size(), pa) << g.label();
      EXPECT_EQ(info.count % p, 1u) << g.label() << " p=" << p;
      EXPECT_EQ((g.order() / pa) % info.count, 0u) << g.label();
    }
  }
}

TEST(GroupProperties, DerivedSeriesOfSL23) {
  const auto series = derived_series(sl2(3));
  ASSERT_GE(series.size(), 3u);
  EXPECT_EQ(series[0].size(), 24u);
  EXPECT_EQ(series[1].size(), 8u);
  EXPECT_EQ(series.back().size(), 1u);
}
