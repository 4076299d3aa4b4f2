#include "noncomm/matgroups.hpp"

#include <algorithm>
#include <memory>
#include <set>

#include "noncomm/classify.hpp"
#include "noncomm/parallel.hpp"

namespace noncomm {
namespace {

using Entries = std::array<std::uint32_t, 4>;

struct MatrixData {
  FieldTables tables;
  std::vector<Entries> entries;
  std::vector<std::uint64_t> codes;  // sorted, parallel to entries

  std::uint64_t code(const Entries& e) const {
    const std::uint64_t q = tables.q;
    return ((std::uint64_t{e[0]} * q + e[1]) * q + e[2]) * q + e[3];
  }
  Entries product(const Entries& x, const Entries& y) const {
    const auto& t = tables;
    return {t.plus(t.times(x[0], y[0]), t.times(x[1], y[2])), t.plus(t.times(x[0], y[1]), t.times(x[1], y[3])),
            t.plus(t.times(x[2], y[0]), t.times(x[3], y[2])), t.plus(t.times(x[2], y[1]), t.times(x[3], y[3]))};
  }
  Index find(std::uint64_t c) const {
    const auto it = std::lower_bound(codes.begin(), codes.end(), c);
    if (it == codes.end() || *it != c) throw GroupError("product left the matrix group");
    return static_cast<Index>(it - codes.begin());
  }
  Index mul(Index a, Index b) const { return find(code(product(entries[a], entries[b]))); }
  bool commutes(Index a, Index b) const { return product(entries[a], entries[b]) == product(entries[b], entries[a]); }
};

std::string entry_str(const FieldPtr& f, std::uint32_t code) { return FieldElem::from_code(f, code).str(); }

MatrixGroup build_matrix_group(std::uint64_t q, bool special) {
  const FieldPtr field = field_of_order(q);
  const std::uint64_t order = special ? pgl2_order(q) : (q * q - 1) * (q * q - q);
  if (order > kMatrixGroupLimit) throw GroupError("q out of range");

  auto data = std::make_shared<MatrixData>();
  data->tables = FieldTables::build(field);
  const auto& t = data->tables;
  const auto qq = static_cast<std::uint32_t>(q);
  data->entries.reserve(order);
  for (std::uint32_t a = 0; a < qq; ++a)
    for (std::uint32_t b = 0; b < qq; ++b)
      for (std::uint32_t c = 0; c < qq; ++c)
        for (std::uint32_t d = 0; d < qq; ++d) {
          const std::uint32_t det = t.minus(t.times(a, d), t.times(b, c));
          if (special ? det == 1 : det != 0) data->entries.push_back({a, b, c, d});
        }
  for (const auto& e : data->entries) data->codes.push_back(data->code(e));

  const std::size_t n = data->entries.size();
  std::vector<std::string> keys(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = data->entries[i];
    keys[i] = "[[" + entry_str(field, e[0]) + "," + entry_str(field, e[1]) + "],[" + entry_str(field, e[2]) + "," +
              entry_str(field, e[3]) + "]]";
  }
  const std::string label = std::string(special ? "SL" : "GL") + "(2," + std::to_string(q) + ")";
  const Index identity = data->find(data->code({1, 0, 0, 1}));

  auto make = [&]() {
    if (n <= Group::kTableLimit) {
      std::vector<Index> table(n * n);
      parallel_for(n, [&](std::size_t a) {
        for (std::size_t b = 0; b < n; ++b)
          table[a * n + b] = data->mul(static_cast<Index>(a), static_cast<Index>(b));
      });
      return Group::from_table(label, std::move(keys), std::move(table));
    }
    return Group::from_function(
        label, std::move(keys), identity, [data](Index a, Index b) { return data->mul(a, b); },
        [data](Index a, Index b) { return data->commutes(a, b); });
  };
  return MatrixGroup{make(), field, data->entries};
}

}  // namespace

std::string Mat2::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Mat2 operator*(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

FieldPtr field_of_order(std::uint64_t q) {
  const auto pp = prime_power_decompose(q);
  if (pp.p == 0 || q > 81) throw GroupError("q out of range");
  return make_field(pp.p, pp.n);
}

Mat2 MatrixGroup::matrix(Index i) const {
  const auto& e = entries.at(i);
  return {FieldElem::from_code(field, e[0]), FieldElem::from_code(field, e[1]), FieldElem::from_code(field, e[2]),
          FieldElem::from_code(field, e[3])};
}

Index MatrixGroup::index_of(const Mat2& m) const {
  const Entries e{static_cast<std::uint32_t>(m.a.code()), static_cast<std::uint32_t>(m.b.code()),
                  static_cast<std::uint32_t>(m.c.code()), static_cast<std::uint32_t>(m.d.code())};
  const auto it = std::lower_bound(entries.begin(), entries.end(), e);
  if (it == entries.end() || *it != e) throw GroupError("matrix is not an element of " + group.label());
  return static_cast<Index>(it - entries.begin());
}

MatrixGroup gl2_matrices(std::uint64_t q) { return build_matrix_group(q, false); }
MatrixGroup sl2_matrices(std::uint64_t q) { return build_matrix_group(q, true); }

Group gl2(std::uint64_t q) { return gl2_matrices(q).group; }
Group sl2(std::uint64_t q) { return sl2_matrices(q).group; }

Group pgl2(std::uint64_t q) {
  const Group g = gl2(q);
  return quotient(g, center(g)).relabel("PGL(2," + std::to_string(q) + ")");
}

Group psl2(std::uint64_t q) {
  const Group g = sl2(q);
  return quotient(g, center(g)).relabel("PSL(2," + std::to_string(q) + ")");
}

std::uint64_t pgl2_order(std::uint64_t q) { return q * (q * q - 1); }
std::uint64_t psl2_order(std::uint64_t q) { return pgl2_order(q) / (q % 2 ? 2 : 1); }

nlohmann::ordered_json PartitionReport::to_json() const {
  nlohmann::ordered_json j;
  j["component_count"] = components.size();
  j["center_order"] = center_order;
  auto counts = nlohmann::ordered_json::object();
  for (const auto& [order, count] : order_counts) counts[std::to_string(order)] = count;
  j["order_counts"] = counts;
  j["covers"] = covers;
  if (q) {
    j["q"] = *q;
    j["divisor"] = divisor;
    j["sylow_count"] = sylow_count;
    j["split_tori_count"] = split_tori_count;
    j["nonsplit_tori_count"] = nonsplit_tori_count;
    j["component_orders"] = component_orders;
  }
  return j;
}

namespace {

// Fills the PSL/PGL(2,q) fields when the component orders, relative to the
// center, fit {q, (q-1)/d, (q+1)/d} with |G/Z| = q(q^2-1)/d.
void match_projective_pattern(PartitionReport& report, std::uint64_t n) {
  const std::uint64_t quotient_order = n / report.center_order;
  for (std::uint64_t q = 2; q * q * q <= 8 * quotient_order + 8; ++q) {
    if (!is_prime_power(q)) continue;
    for (std::uint64_t d : {std::uint64_t{1}, std::uint64_t{q % 2 ? 2u : 1u}}) {
      if (pgl2_order(q) / d != quotient_order) continue;
      const std::array<std::uint64_t, 3> expected{q, (q - 1) / d, (q + 1) / d};
      std::array<std::size_t, 3> counts{};
      bool fits = true;
      for (const auto& c : report.components) {
        const std::uint64_t r = c.size() / report.center_order;
        const auto it = std::find(expected.begin(), expected.end(), r);
        if (it == expected.end()) {
          fits = false;
          break;
        }
        ++counts[it - expected.begin()];
      }
      if (!fits) continue;
      report.q = q;
      report.divisor = d;
      report.sylow_count = counts[0];
      report.split_tori_count = counts[1];
      report.nonsplit_tori_count = counts[2];
      report.component_orders = {expected[0] * report.center_order, expected[1] * report.center_order,
                                 expected[2] * report.center_order};
      return;
    }
  }
}

}  // namespace

PartitionReport maximal_abelian_partition(const Group& g) {
  const auto rows = commutation_rows(g);
  const Index n = g.order();
  const auto ac = is_ac_group(g, rows);
  if (!ac.is_ac) throw GroupError("not an AC-group");

  PartitionReport report;
  Bitset central(n);
  for (Index x = 0; x < n; ++x)
    if (rows[x].count() == n) central.set(x);
  report.center_order = static_cast<Index>(central.count());

  std::map<Bitset, Index> seen;
  std::vector<Index> owner(n, static_cast<Index>(-1));
  for (Index x = 0; x < n; ++x) {
    if (central.test(x)) continue;
    if (!seen.emplace(rows[x], x).second) continue;
    std::vector<Index> members;
    for (auto y = rows[x].first(); y < n; y = rows[x].next(y)) members.push_back(static_cast<Index>(y));
    report.components.emplace_back(std::move(members));
  }

  // Disjoint outside Z(G) and covering G \ Z(G).
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    for (auto y : report.components[c].members()) {
      if (central.test(y)) continue;
      if (owner[y] != static_cast<Index>(-1))
        throw GroupError("centralizers overlap outside the center at element " + g.key(y));
      owner[y] = static_cast<Index>(c);
    }
  }
  for (Index x = 0; x < n; ++x)
    if (!central.test(x) && owner[x] == static_cast<Index>(-1))
      throw GroupError("element not covered by any centralizer: " + g.key(x));
  report.covers = true;

  for (const auto& c : report.components) ++report.order_counts[static_cast<Index>(c.size())];

  match_projective_pattern(report, n);
  return report;
}

PartitionReport projective_partition(std::uint64_t q, bool general) {
  const Group m = general ? gl2(q) : sl2(q);
  const auto rows = commutation_rows(m);
  if (!is_ac_group(m, rows).is_ac) throw GroupError("not an AC-group");
  const Index n = m.order();
  const auto qm = quotient_map(m, center(m));
  const Index k = qm.group.order();

  PartitionReport report;
  std::set<Bitset> seen;
  for (Index x = 0; x < n; ++x) {
    if (rows[x].count() == n || !seen.insert(rows[x]).second) continue;
    std::set<Index> image;
    for (auto y = rows[x].first(); y < n; y = rows[x].next(y)) image.insert(qm.coset_of[y]);
    report.components.emplace_back(std::vector<Index>(image.begin(), image.end()));
  }

  const Index e = qm.group.identity();
  std::vector<Index> owner(k, static_cast<Index>(-1));
  for (std::size_t c = 0; c < report.components.size(); ++c) {
    const auto& comp = report.components[c];
    if (closure(qm.group, comp.members()) != comp) throw GroupError("centralizer image is not a subgroup");
    for (auto y : comp.members()) {
      if (y == e) continue;
      if (owner[y] != static_cast<Index>(-1))
        throw GroupError("centralizer images overlap at element " + qm.group.key(y));
      owner[y] = static_cast<Index>(c);
    }
  }
  for (Index y = 0; y < k; ++y)
    if (y != e && owner[y] == static_cast<Index>(-1))
      throw GroupError("element not covered by any centralizer image: " + qm.group.key(y));
  report.covers = true;

  for (const auto& c : report.components) ++report.order_counts[static_cast<Index>(c.size())];
  match_projective_pattern(report, k);
  return report;
}

}  // namespace noncomm
