#include <algorithm>
#include <set>

#include "noncomm/classify.hpp"
#include "noncomm/constructions.hpp"
#include "noncomm/matgroups.hpp"

namespace noncomm {
namespace {

using Counts = std::map<Index, std::size_t>;

Json counts_json(const Counts& m) {
  Json j = Json::object();
  for (const auto& [k, c] : m) j[std::to_string(k)] = c;
  return j;
}

Json sorted_values(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return Json(v);
}

bool is_consecutive_triple(std::vector<std::uint64_t> v) {
  std::sort(v.begin(), v.end());
  return v.size() == 3 && v[1] == v[0] + 1 && v[2] == v[1] + 1;
}

// Non-abelian groups of the same order as SL(2,q), q >= 4, used to check
// that the graph singles out SL(2,q) up to isomorphism.
std::vector<Group> rival_groups(std::uint64_t q) {
  using D = GroupDescriptor;
  auto b = [](const D& d) { return build(d); };
  switch (q) {
    case 4:
      return {b(D::alternating(5)), b(D::direct({D::cyclic(5), D::alternating(4)})),
              b(D::direct({D::cyclic(3), D::dihedral(20)})), b(D::direct({D::cyclic(10), D::symmetric(3)})),
              b(D::dihedral(60)), b(D::dicyclic(60))};
    case 5:
      return {b(D::symmetric(5)),
              b(D::direct({D::cyclic(2), D::alternating(5)})),
              b(D::direct({D::cyclic(5), D::symmetric(4)})),
              b(D::direct({D::cyclic(5), D::semidirect(D::dicyclic(8), D::cyclic(3), {{"y", "xy"}})})),
              b(D::dihedral(120)),
              b(D::dicyclic(120))};
    case 7:
      return {pgl2(7), direct_product({b(D::cyclic(2)), psl2(7)}, "direct(C2,PSL(2,7))"),
              b(D::direct({D::cyclic(7), D::cyclic(2), D::symmetric(4)})), b(D::dihedral(336))};
    case 8:
      return {direct_product({b(D::cyclic(3)), psl2(7)}, "direct(C3,PSL(2,7))"),
              b(D::direct({D::cyclic(21), D::symmetric(4)})), b(D::dihedral(504))};
    case 9:
      return {b(D::symmetric(6)), b(D::direct({D::cyclic(2), D::alternating(6)})), pgl2(9), b(D::dihedral(720))};
    default:
      return {};
  }
}

struct Basics {
  Index n = 0;
  Index z = 0;
  std::vector<Bitset> rows;
  Subgroup center;
  NCGraph graph;
  CentralizerProfile profile;
};

Basics bookkeeping(const Group& m, VerdictReport& r) {
  Basics b{m.order(), 0, commutation_rows(m), center(m), NCGraph::build(m), {}};
  b.z = static_cast<Index>(b.center.size());
  b.profile = centralizer_profile(m, b.rows);
  r.check("vertex_count", b.n - b.z, b.graph.vertex_count());
  bool degree_ok = true;
  for (std::size_t v = 0; v < b.graph.vertex_count(); ++v)
    degree_ok = degree_ok && b.graph.degree(v) == b.n - b.rows[b.graph.element(v)].count();
  r.check_true("degree_identity", degree_ok);
  r.check("W_element_total", b.n - b.z, b.profile.element_total());
  r.check_true("profile_from_graph_agrees", profile_from_graph(b.graph) == b.profile);
  r.data["profile"] = b.profile.to_json();
  return b;
}

// Two distinct centralizers of the Sylow-covering order: the contradiction
// to a unique Sylow subgroup of G/Z(G).
void nilpotency_steps(const Group& m, const Basics& b, Index sylow_centralizer_order, std::uint64_t q,
                      VerdictReport& r) {
  r.check("nilpotent", false, is_nilpotent(m));
  std::set<Bitset> seen;
  std::vector<Index> reps;
  for (Index x = 0; x < b.n; ++x)
    if (b.rows[x].count() == sylow_centralizer_order && seen.insert(b.rows[x]).second) reps.push_back(x);
  r.check("sylow_centralizer_count", q + 1, reps.size());
  Json w = Json::object();
  if (reps.size() >= 2) w = {{"x", m.key(reps[0])}, {"y", m.key(reps[1])}, {"centralizer_order", sylow_centralizer_order}};
  r.data["nilpotency_witness"] = w;
  r.check_true("distinct_equal_order_centralizers", reps.size() >= 2);
  const Group quo = quotient(m, b.center);
  const auto p = prime_factors(q).front();
  r.check("quotient_sylow_count", q + 1, sylow(quo, p).count);
}

void ns34_steps(const Basics& b, VerdictReport& r) {
  const Index quo = b.n / b.z;
  r.check_true("ns3_excluded", quo != 360 || b.z % 3 != 0);
  r.check_true("ns4_excluded", quo != 720 || b.z % 3 != 0);
}

void omega_steps(const Group& m, const Basics& b, std::optional<std::size_t> expected,
                 std::optional<std::size_t> partition_components, const PipelineOptions& options, VerdictReport& r) {
  std::size_t distinct = 0;
  for (const auto& [k, c] : b.profile.distinct_counts) distinct += c;
  if (b.graph.vertex_count() > options.omega_vertex_bound) {
    auto fp = fingerprint(b.graph);
    r.data["omega"] = "skipped: vertex count above exact-solver bound";
    r.data["fingerprint"] = fp.to_json();
    return;
  }
  try {
    const auto cr = clique_number(b.graph, options.clique_budget);
    r.data["omega"] = cr.omega;
    Json witness = Json::array();
    for (auto v : cr.witness) witness.push_back(m.key(b.graph.element(v)));
    r.data["omega_witness"] = witness;
    if (expected) r.check("omega", *expected, cr.omega);
    r.check("omega_equals_distinct_centralizers", distinct, cr.omega);
    if (partition_components) r.check("omega_equals_partition_components", *partition_components, cr.omega);
    r.check_true("omega_witness_noncommuting", is_noncommuting_set(m, b.graph, cr.witness));
  } catch (const CliqueBudgetExceeded& e) {
    r.data["omega_lower_bound"] = e.best().omega;
    r.check("omega", expected ? Json(*expected) : Json(distinct), "budget exhausted");
  }
}

void partition_steps(const Group& m, std::uint64_t q, VerdictReport& r, std::size_t& components) {
  const auto pr = maximal_abelian_partition(m);
  components = pr.components.size();
  r.data["partition"] = pr.to_json();
  r.check_true("partition_covers", pr.covers);
  r.check("partition_q", q, pr.q ? Json(*pr.q) : Json());
  r.check("partition_sylow_count", q + 1, pr.sylow_count);
  r.check("partition_split_tori_count", q * (q + 1) / 2, pr.split_tori_count);
  r.check("partition_nonsplit_tori_count", q * (q - 1) / 2, pr.nonsplit_tori_count);
}

void rival_steps(const Group& m, const Basics& b, const std::vector<Group>& rivals, const PipelineOptions& options,
                 VerdictReport& r) {
  const auto rs = rival_scan(m.order(), b.graph, rivals, options.iso_vertex_bound);
  r.data["rivals"] = rs.to_json();
  bool all_isomorphic = true;
  for (const auto& label : rs.matches())
    for (const auto& g : rivals)
      if (g.label() == label) all_isomorphic = all_isomorphic && is_isomorphic(g, m).has_value();
  r.check_true("rival_matches_isomorphic_to_M", all_isomorphic);
}

}  // namespace

VerdictReport verify_theorem_sl(std::uint64_t q, const PipelineOptions& options) {
  static const std::set<std::uint64_t> allowed{2, 3, 4, 5, 7, 8, 9};
  if (!allowed.count(q)) throw GroupError("q must be one of 2, 3, 4, 5, 7, 8, 9");
  VerdictReport r;
  const Group m = sl2(q);
  r.data["group"] = m.label();
  r.check("order", q * (q * q - 1), m.order());
  const Index z_expected = q % 2 ? 2 : 1;
  r.check("center_order", z_expected, center(m).size());
  const Basics b = bookkeeping(m, r);

  std::vector<std::uint64_t> w_values, w_prime;
  Counts distinct;
  if (q == 2) {
    w_values = {2, 3};
    distinct = {{2, 3}, {3, 1}};
  } else if (q == 3) {
    w_values = {4, 6};
    distinct = {{4, 3}, {6, 4}};
  } else if (q % 2) {
    w_values = {q - 1, q + 1, 2 * q};
    w_prime = {(q - 1) / 2, (q + 1) / 2, q};
    distinct = {{Index(q - 1), q * (q + 1) / 2}, {Index(q + 1), q * (q - 1) / 2}, {Index(2 * q), q + 1}};
  } else {
    w_values = {q - 1, q, q + 1};
    w_prime = w_values;
    distinct = {{Index(q - 1), q * (q + 1) / 2}, {Index(q + 1), q * (q - 1) / 2}, {Index(q), q + 1}};
  }
  std::vector<std::uint64_t> computed_w(b.profile.w.size()), computed_wp(b.profile.w_prime.size());
  std::transform(b.profile.w.begin(), b.profile.w.end(), computed_w.begin(), [](auto& kv) { return kv.first; });
  std::transform(b.profile.w_prime.begin(), b.profile.w_prime.end(), computed_wp.begin(),
                 [](auto& kv) { return kv.first; });
  r.check("W_distinct_values", sorted_values(w_values), Json(computed_w));
  if (!w_prime.empty()) r.check("W_prime_distinct_values", sorted_values(w_prime), Json(computed_wp));
  r.check("distinct_centralizer_counts", counts_json(distinct), counts_json(b.profile.distinct_counts));

  r.check_true("is_ac", is_ac_group(m, b.rows).is_ac);
  nilpotency_steps(m, b, static_cast<Index>(q * b.z), q, r);
  r.check("solvable", q <= 3, is_solvable(m));

  if (q == 2) {
    const Group s3 = build(GroupDescriptor::symmetric(3));
    r.check_true("isomorphic_to_S3", is_isomorphic(m, s3).has_value());
    const auto rs = rival_scan(6, b.graph, order6_catalog(), options.iso_vertex_bound);
    r.data["rivals"] = rs.to_json();
    r.check("rival_matches", Json::array({"S3"}), Json(rs.matches()));
    omega_steps(m, b, 4, std::nullopt, options, r);
    return r;
  }
  if (q == 3) {
    r.check("centralizer_6_count", 16, b.profile.w.count(6) ? b.profile.w.at(6) : 0);
    r.check("centralizer_4_count", 6, b.profile.w.count(4) ? b.profile.w.at(4) : 0);
    r.check("sylow3_count", 4, sylow(m, 3).count);
    const Group quo = quotient(m, b.center);
    r.check_true("quotient_isomorphic_to_A4", is_isomorphic(quo, build(GroupDescriptor::alternating(4))).has_value());
    const auto catalog = order24_catalog();
    const auto rs = rival_scan(24, b.graph, catalog, options.iso_vertex_bound);
    r.data["rivals"] = rs.to_json();
    const auto matches = rs.matches();
    r.check("rival_match_count", 1, matches.size());
    bool iso = false;
    for (const auto& g : catalog)
      if (matches.size() == 1 && g.label() == matches.front()) iso = is_isomorphic(g, m).has_value();
    r.check_true("rival_match_isomorphic_to_M", iso);
    omega_steps(m, b, std::nullopt, std::nullopt, options, r);
    return r;
  }

  // q > 3: the solvable cases are ruled out by the shape of W.
  r.check("W_distinct_count", 3, b.profile.w.size());
  r.check_true("quotient_order_not_24", b.n / b.z != 24);
  r.check_true("W_prime_pairwise_prime_power_free", pairwise_prime_power_free(w_prime));

  const auto c = schmidt_nonsolvable_case(m);
  r.data["classification"] = c.to_json();
  r.check("schmidt_case", "NS1", c.schmidt_case);
  r.check("field_order", q, c.field_order ? Json(*c.field_order) : Json());
  r.check_true("schmidt_witnesses_verified", c.witnesses_verified);
  if (q % 2) {
    r.check_true("pgl_excluded", !is_consecutive_triple(w_prime));
  } else {
    r.check_true("isomorphic_to_psl", is_isomorphic(m, psl2(q)).has_value());
  }
  ns34_steps(b, r);

  std::size_t components = 0;
  partition_steps(m, q, r, components);
  omega_steps(m, b, q * q + q + 1, components, options, r);
  rival_steps(m, b, rival_groups(q), options, r);
  return r;
}

VerdictReport verify_theorem_gl(std::uint64_t q, const PipelineOptions& options) {
  if (q <= 3) throw GroupError("theorem requires q > 3");
  static const std::set<std::uint64_t> allowed{4, 5, 7, 8, 9};
  if (!allowed.count(q)) throw GroupError("q must be one of 4, 5, 7, 8, 9");
  VerdictReport r;
  const Group m = gl2(q);
  r.data["group"] = m.label();
  r.check("order", (q * q - 1) * (q * q - q), m.order());
  r.check("center_order", q - 1, center(m).size());
  const Basics b = bookkeeping(m, r);

  std::vector<std::uint64_t> computed_w, computed_wp;
  for (const auto& [k, c] : b.profile.w) computed_w.push_back(k);
  for (const auto& [k, c] : b.profile.w_prime) computed_wp.push_back(k);
  r.check("W_distinct_values", sorted_values({(q - 1) * (q - 1), q * q - 1, q * (q - 1)}), Json(computed_w));
  r.check("W_prime_distinct_values", sorted_values({q - 1, q, q + 1}), Json(computed_wp));
  const Counts distinct{{Index((q - 1) * (q - 1)), q * (q + 1) / 2},
                        {Index(q * q - 1), q * (q - 1) / 2},
                        {Index(q * (q - 1)), q + 1}};
  r.check("distinct_centralizer_counts", counts_json(distinct), counts_json(b.profile.distinct_counts));

  r.check_true("is_ac", is_ac_group(m, b.rows).is_ac);
  nilpotency_steps(m, b, static_cast<Index>(q * (q - 1)), q, r);
  r.check("solvable", false, is_solvable(m));
  r.check("W_distinct_count", 3, b.profile.w.size());
  r.check_true("quotient_order_not_24", b.n / b.z != 24);
  r.check_true("prime_power_incompatibility", pairwise_prime_power_free(std::vector<std::uint64_t>{q - 1, q, q + 1}));

  const Group quo = quotient(m, b.center);
  r.check_true("quotient_isomorphic_to_pgl", is_isomorphic(quo, pgl2(q)).has_value());
  const Subgroup d = derived_subgroup(m);
  r.check("derived_order", q * (q * q - 1), d.size());
  r.check_true("derived_isomorphic_to_sl", is_isomorphic(subgroup_as_group(m, d, "G'"), sl2(q)).has_value());

  const auto c = schmidt_nonsolvable_case(m);
  r.data["classification"] = c.to_json();
  r.check("schmidt_case", "NS2", c.schmidt_case);
  r.check("field_order", q, c.field_order ? Json(*c.field_order) : Json());
  r.check_true("schmidt_witnesses_verified", c.witnesses_verified);
  ns34_steps(b, r);

  r.check("direct_product_derived_center", q % 2 == 0, internal_direct_product(m, d, b.center));
  r.check("derived_center_intersection_order", q % 2 ? 2 : 1, intersection(d, b.center).size());

  std::size_t components = 0;
  partition_steps(m, q, r, components);
  omega_steps(m, b, q * q + q + 1, components, options, r);
  return r;
}

// --- rival scan --------------------------------------------------------------

std::vector<std::string> RivalReport::matches() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.matched) out.push_back(e.label);
  return out;
}

Json RivalReport::to_json() const {
  Json j;
  j["order"] = order;
  j["target"] = target;
  Json es = Json::array();
  for (const auto& e : entries) {
    Json x;
    x["label"] = e.label;
    x["abelian"] = e.abelian;
    x["fingerprint_equal"] = e.fingerprint_equal;
    x["graph_isomorphic"] = e.graph_isomorphic ? Json(*e.graph_isomorphic) : Json();
    x["matched"] = e.matched;
    es.push_back(x);
  }
  j["entries"] = es;
  j["matches"] = matches();
  return j;
}

RivalReport rival_scan(Index order, const NCGraph& target, const std::vector<Group>& catalog,
                       std::size_t iso_vertex_bound) {
  RivalReport rep;
  rep.order = order;
  rep.target = target.label();
  const auto target_fp = fingerprint(target);
  for (const auto& g : catalog) {
    if (g.order() != order) throw GroupError("catalog group " + g.label() + " has the wrong order");
    RivalEntry e;
    e.label = g.label();
    e.abelian = is_abelian(g);
    if (!e.abelian) {
      const auto graph = NCGraph::build(g);
      e.fingerprint_equal = same_fingerprint(target_fp, fingerprint(graph));
      if (e.fingerprint_equal && graph.vertex_count() <= iso_vertex_bound && target.vertex_count() <= iso_vertex_bound) {
        e.graph_isomorphic = graphs_isomorphic(target, graph, iso_vertex_bound).has_value();
        e.matched = *e.graph_isomorphic;
      } else {
        e.matched = e.fingerprint_equal;
      }
    }
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace noncomm
