#include <gtest/gtest.h>

#include "noncomm/constructions.hpp"
#include "noncomm/matgroups.hpp"
#include "oracles.hpp"

using namespace noncomm;

namespace {

Group named(const std::string& text) { return build(parse_descriptor(text)); }

oracle::CentralizerData brute_centralizers(const Group& g) {
  return oracle::centralizers(g.order(), [&](std::size_t a, std::size_t b) {
    return g.mul(static_cast<Index>(a), static_cast<Index>(b));
  });
}

std::string group_error(const std::function<void()>& f) {
  try {
    f();
  } catch (const GroupError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Build, Examples) {
  EXPECT_EQ(named("C1").order(), 1u);
  const Group s3 = named("S3");
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_FALSE(is_abelian(s3));
  EXPECT_EQ(named("D8").order(), 8u);
  EXPECT_EQ(named("Q8").order(), 8u);
  EXPECT_EQ(named("A4").order(), 12u);
  EXPECT_EQ(named("S4").order(), 24u);
  EXPECT_EQ(named("direct(C2,A4)").order(), 24u);
}

// Z5 ⋊ Z4 with x -> x^2: every conjugate of the complement meets it trivially.
TEST(Build, SemidirectF20IsFrobenius) {
  const Group f = named("semidirect(C5,C4,x^2)");
  ASSERT_EQ(f.order(), 20u);
  Index h = 0;
  for (Index x = 0; x < f.order(); ++x)
    if (f.element_order(x) == 4) {
      h = x;
      break;
    }
  std::set<Index> base;
  for (Index y = f.identity(), k = 0; k < 4; ++k, y = f.mul(y, h)) base.insert(y);
  std::size_t conjugates_outside = 0;
  for (Index g = 0; g < f.order(); ++g) {
    std::set<Index> conj;
    for (auto y : base) conj.insert(f.mul(f.mul(f.inverse(g), y), g));
    if (conj == base) continue;
    ++conjugates_outside;
    std::vector<Index> common;
    std::set_intersection(base.begin(), base.end(), conj.begin(), conj.end(), std::back_inserter(common));
    EXPECT_EQ(common, std::vector<Index>{f.identity()});
  }
  EXPECT_EQ(conjugates_outside, 16u);
}

TEST(Build, BadAction) {
  EXPECT_EQ(group_error([] { named("semidirect(C5,C3,x^2)"); }), "bad action");
  EXPECT_EQ(group_error([] { named("semidirect(C6,C2,x^2)"); }), "bad action");
  EXPECT_THROW(parse_descriptor("X7"), GroupError);
  EXPECT_THROW(parse_descriptor("direct(C2"), GroupError);
  EXPECT_THROW(named("S8"), GroupError);
}

TEST(Descriptor, TextRoundTrip) {
  for (const auto* text : {"C7", "D10", "Dic12", "S4", "A5", "direct(C2,S3)", "semidirect(C5,C4,x^2)",
                           "semidirect(Q8,C3,[y,xy])", "semidirect(C3,D8,[x^2],[x])"}) {
    const auto d = parse_descriptor(text);
    EXPECT_EQ(parse_descriptor(d.str()).str(), d.str()) << text;
    EXPECT_EQ(build(parse_descriptor(d.str())).order(), build(d).order());
  }
}

TEST(Order24Catalog, FifteenPairwiseNonIsomorphic) {
  const auto cat = order24_catalog();
  ASSERT_EQ(cat.size(), 15u);
  std::size_t abelian = 0;
  for (const auto& g : cat) {
    EXPECT_EQ(g.order(), 24u);
    if (is_abelian(g)) ++abelian;
  }
  EXPECT_EQ(abelian, 3u);
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j)
      EXPECT_FALSE(is_isomorphic(cat[i], cat[j]).has_value()) << cat[i].label() << " ~ " << cat[j].label();
}

TEST(Order24Catalog, UniqueSL23Signature) {
  std::vector<std::string> hits;
  for (const auto& g : order24_catalog()) {
    const auto data = brute_centralizers(g);
    if (data.center == 2 && data.w.count(4) && data.w.count(6)) hits.push_back(g.label());
  }
  ASSERT_EQ(hits.size(), 1u);
  for (const auto& g : order24_catalog())
    if (g.label() == hits[0]) EXPECT_TRUE(is_isomorphic(g, sl2(3)).has_value());
}

TEST(Order24Catalog, Z2xA4CentralizerOrders) {
  const auto data = brute_centralizers(named("direct(C2,A4)"));
  std::set<std::size_t> sizes;
  for (auto [k, v] : data.w) sizes.insert(k);
  EXPECT_EQ(sizes, (std::set<std::size_t>{6, 8}));
}

TEST(Order6Catalog, CyclicAndSymmetric) {
  const auto cat = order6_catalog();
  ASSERT_EQ(cat.size(), 2u);
  EXPECT_NE(is_abelian(cat[0]), is_abelian(cat[1]));
  EXPECT_THROW(catalog_for_order(25), GroupError);
}

TEST(ConstructionProperties, DirectProductCenterIsProductOfCenters) {
  const auto cat = order24_catalog();
  for (const auto& a : {named("S3"), named("Q8"), named("C4")})
    for (const auto& b : {named("C3"), named("D8"), named("A4")}) {
      const Group p = direct_product({a, b}, "AxB");
      EXPECT_EQ(p.order(), a.order() * b.order());
      EXPECT_EQ(center(p).size(), center(a).size() * center(b).size());
    }
  for (const auto& d : order24_descriptors()) {
    if (d.kind != GroupDescriptor::Kind::direct) continue;
    std::size_t expected = 1;
    for (const auto& f : d.parts) expected *= center(build(f)).size();
    EXPECT_EQ(center(build(d)).size(), expected) << d.str();
  }
}

TEST(ConstructionProperties, DicyclicHasUniqueInvolution) {
  for (unsigned n = 2; n <= 6; ++n) {
    const Group g = build(GroupDescriptor::dicyclic(4 * n));
    std::size_t involutions = 0;
    for (Index x = 0; x < g.order(); ++x) involutions += g.element_order(x) == 2;
    EXPECT_EQ(involutions, 1u) << "Dic" << 4 * n;
  }
}

TEST(ConstructionProperties, SemidirectOrderIsProduct) {
  for (const auto* text : {"semidirect(C5,C4,x^2)", "semidirect(C7,C3,x^2)", "semidirect(C3,C8,x^2)"}) {
    const auto d = parse_descriptor(text);
    EXPECT_EQ(build(d).order(), build(d.parts[0]).order() * build(d.parts[1]).order());
  }
}
