#include "noncomm/ncgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "noncomm/parallel.hpp"

namespace noncomm {
namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t combine(std::uint64_t seed, std::uint64_t value) { return mix(seed ^ mix(value)); }

std::size_t distinct_count(const std::vector<std::uint64_t>& colors) {
  return std::set<std::uint64_t>(colors.begin(), colors.end()).size();
}

}  // namespace

NCGraph NCGraph::build(const Group& g) { return build(g, commutation_rows(g)); }

NCGraph NCGraph::build(const Group& g, const std::vector<Bitset>& commutation) {
  const Index n = g.order();
  NCGraph graph;
  graph.label_ = g.label();
  graph.group_order_ = n;
  for (Index x = 0; x < n; ++x)
    if (commutation[x].count() != n) graph.elements_.push_back(x);
  if (graph.elements_.empty()) throw GroupError("graph undefined for abelian groups");
  graph.center_order_ = static_cast<Index>(n - graph.elements_.size());
  const std::size_t v = graph.elements_.size();
  graph.adjacency_.assign(v, Bitset(v));
  parallel_for(v, [&](std::size_t i) {
    const auto& row = commutation[graph.elements_[i]];
    for (std::size_t j = 0; j < v; ++j)
      if (!row.test(graph.elements_[j])) graph.adjacency_[i].set(j);
  });
  return graph;
}

std::size_t NCGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : adjacency_) twice += row.count();
  return twice / 2;
}

NCGraph NCGraph::relabeled(std::span<const std::size_t> perm) const {
  const std::size_t v = vertex_count();
  if (perm.size() != v) throw GroupError("relabeling has wrong length");
  std::vector<char> hit(v, 0);
  for (auto p : perm) {
    if (p >= v || hit[p]) throw GroupError("relabeling is not a permutation");
    hit[p] = 1;
  }
  NCGraph out;
  out.label_ = label_;
  out.group_order_ = group_order_;
  out.center_order_ = center_order_;
  out.elements_.resize(v);
  out.adjacency_.assign(v, Bitset(v));
  for (std::size_t i = 0; i < v; ++i) {
    out.elements_[i] = elements_[perm[i]];
    for (std::size_t j = 0; j < v; ++j)
      if (adjacency_[perm[i]].test(perm[j])) out.adjacency_[i].set(j);
  }
  return out;
}

// --- centralizer multisets -------------------------------------------------

std::size_t CentralizerProfile::element_total() const {
  std::size_t t = 0;
  for (const auto& [k, c] : w) t += c;
  return t;
}

std::vector<Index> CentralizerProfile::distinct_values() const {
  std::vector<Index> out;
  for (const auto& [k, c] : w) out.push_back(k);
  return out;
}

std::vector<Index> CentralizerProfile::distinct_prime_values() const {
  std::vector<Index> out;
  for (const auto& [k, c] : w_prime) out.push_back(k);
  return out;
}

nlohmann::ordered_json CentralizerProfile::to_json() const {
  auto as_object = [](const std::map<Index, std::size_t>& m) {
    auto j = nlohmann::ordered_json::object();
    for (const auto& [k, c] : m) j[std::to_string(k)] = c;
    return j;
  };
  nlohmann::ordered_json j;
  j["group_order"] = group_order;
  j["center_order"] = center_order;
  j["W"] = as_object(w);
  j["W_prime"] = as_object(w_prime);
  j["distinct_centralizer_counts"] = as_object(distinct_counts);
  j["element_total"] = element_total();
  return j;
}

CentralizerProfile centralizer_profile(const Group& g) { return centralizer_profile(g, commutation_rows(g)); }

CentralizerProfile centralizer_profile(const Group& g, const std::vector<Bitset>& commutation) {
  const Index n = g.order();
  CentralizerProfile prof;
  prof.group_order = n;
  Index z = 0;
  for (Index x = 0; x < n; ++x)
    if (commutation[x].count() == n) ++z;
  if (z == n) throw GroupError("graph undefined for abelian groups");
  prof.center_order = z;
  std::set<Bitset> seen;
  for (Index x = 0; x < n; ++x) {
    const auto c = static_cast<Index>(commutation[x].count());
    if (c == n) continue;
    ++prof.w[c];
    ++prof.w_prime[c / z];
    if (seen.insert(commutation[x]).second) ++prof.distinct_counts[c];
  }
  return prof;
}

CentralizerProfile profile_from_graph(const NCGraph& graph) {
  CentralizerProfile prof;
  prof.group_order = graph.group_order();
  prof.center_order = graph.center_order();
  const std::size_t v = graph.vertex_count();
  std::set<Bitset> seen;
  for (std::size_t x = 0; x < v; ++x) {
    const auto c = static_cast<Index>(graph.group_order() - graph.degree(x));
    ++prof.w[c];
    ++prof.w_prime[c / prof.center_order];
    Bitset closed(v);
    for (std::size_t y = 0; y < v; ++y)
      if (!graph.adjacent(x, y)) closed.set(y);
    if (seen.insert(closed).second) ++prof.distinct_counts[c];
  }
  return prof;
}

// --- fingerprint -----------------------------------------------------------

std::vector<std::uint64_t> refinement_colors(const NCGraph& graph, std::size_t* rounds) {
  const std::size_t v = graph.vertex_count();
  std::vector<std::uint64_t> colors(v);
  for (std::size_t x = 0; x < v; ++x) colors[x] = combine(0x51ed27, graph.degree(x));
  std::size_t classes = distinct_count(colors);
  std::size_t r = 0;
  while (true) {
    std::vector<std::uint64_t> next(v);
    parallel_for(v, [&](std::size_t x) {
      std::vector<std::uint64_t> nb;
      const auto& row = graph.neighbors(x);
      for (auto y = row.first(); y < v; y = row.next(y)) nb.push_back(colors[y]);
      std::sort(nb.begin(), nb.end());
      std::uint64_t h = combine(colors[x], nb.size());
      for (auto c : nb) h = combine(h, c);
      next[x] = h;
    });
    ++r;
    const std::size_t next_classes = distinct_count(next);
    colors = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  if (rounds) *rounds = r;
  return colors;
}

Fingerprint fingerprint(const NCGraph& graph) {
  Fingerprint fp;
  fp.vertex_count = graph.vertex_count();
  for (std::size_t x = 0; x < graph.vertex_count(); ++x) ++fp.degrees[graph.degree(x)];
  const auto colors = refinement_colors(graph, &fp.rounds);
  std::map<std::uint64_t, std::size_t> hist;
  for (auto c : colors) ++hist[c];
  fp.color_classes.assign(hist.begin(), hist.end());
  return fp;
}

bool same_fingerprint(const Fingerprint& a, const Fingerprint& b) {
  if (a.vertex_count != b.vertex_count || a.degrees != b.degrees || a.color_classes != b.color_classes) return false;
  if (a.omega && b.omega && *a.omega != *b.omega) return false;
  return true;
}

nlohmann::ordered_json Fingerprint::to_json() const {
  nlohmann::ordered_json j;
  j["vertex_count"] = vertex_count;
  auto deg = nlohmann::ordered_json::object();
  for (const auto& [d, c] : degrees) deg[std::to_string(d)] = c;
  j["degrees"] = deg;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& [h, s] : color_classes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    classes.push_back({{"color", buf}, {"size", s}});
  }
  j["color_classes"] = classes;
  j["rounds"] = rounds;
  if (omega) j["omega"] = *omega;
  return j;
}

// --- isomorphism -----------------------------------------------------------

namespace {

class GraphIsoSearch {
 public:
  GraphIsoSearch(const NCGraph& a, const NCGraph& b, std::vector<std::uint64_t> ca, std::vector<std::uint64_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)) {
    const std::size_t v = a_.vertex_count();
    std::map<std::uint64_t, std::size_t> class_size;
    for (auto c : ca_) ++class_size[c];
    order_.resize(v);
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return class_size[ca_[x]] < class_size[ca_[y]]; });
    map_.assign(v, v);
    used_.assign(v, 0);
  }

  std::optional<std::vector<std::size_t>> run() {
    if (descend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (std::size_t w = 0; w < b_.vertex_count(); ++w) {
      if (used_[w] || cb_[w] != ca_[u]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t p = order_[k];
        ok = a_.adjacent(u, p) == b_.adjacent(w, map_[p]);
      }
      if (!ok) continue;
      map_[u] = w;
      used_[w] = 1;
      if (descend(depth + 1)) return true;
      used_[w] = 0;
    }
    map_[u] = a_.vertex_count();
    return false;
  }

  const NCGraph& a_;
  const NCGraph& b_;
  std::vector<std::uint64_t> ca_, cb_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> graphs_isomorphic(const NCGraph& g1, const NCGraph& g2,
                                                          std::size_t vertex_bound) {
  if (g1.vertex_count() > vertex_bound || g2.vertex_count() > vertex_bound)
    throw GroupError("iso bound exceeded; compare fingerprints instead");
  if (g1.vertex_count() != g2.vertex_count()) return std::nullopt;
  if (!same_fingerprint(fingerprint(g1), fingerprint(g2))) return std::nullopt;
  auto map = GraphIsoSearch(g1, g2, refinement_colors(g1), refinement_colors(g2)).run();
  if (!map) return std::nullopt;
  const std::size_t v = g1.vertex_count();
  for (std::size_t x = 0; x < v; ++x)
    for (std::size_t y = 0; y < v; ++y)
      if (g1.adjacent(x, y) != g2.adjacent((*map)[x], (*map)[y])) return std::nullopt;
  return map;
}

// --- export ----------------------------------------------------------------

std::string to_dimacs(const NCGraph& graph) {
  std::string out = "c non-commuting graph of " + graph.label() + "\n";
  out += "p edge " + std::to_string(graph.vertex_count()) + " " + std::to_string(graph.edge_count()) + "\n";
  const std::size_t v = graph.vertex_count();
  for (std::size_t x = 0; x < v; ++x) {
    const auto& row = graph.neighbors(x);
    for (auto y = row.next(x); y < v; y = row.next(y))
      out += "e " + std::to_string(x + 1) + " " + std::to_string(y + 1) + "\n";
  }
  return out;
}

nlohmann::ordered_json to_json(const NCGraph& graph, const Group& g) {
  nlohmann::ordered_json j;
  j["label"] = graph.label();
  j["group_order"] = graph.group_order();
  j["center_order"] = graph.center_order();
  j["vertex_count"] = graph.vertex_count();
  j["edge_count"] = graph.edge_count();
  auto vertices = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < graph.vertex_count(); ++v)
    vertices.push_back({{"vertex", v + 1}, {"element", graph.element(v)}, {"key", g.key(graph.element(v))}});
  j["vertices"] = vertices;
  auto edges = nlohmann::ordered_json::array();
  const std::size_t v = graph.vertex_count();
  for (std::size_t x = 0; x < v; ++x) {
    const auto& row = graph.neighbors(x);
    for (auto y = row.next(x); y < v; y = row.next(y)) edges.push_back({x + 1, y + 1});
  }
  j["edges"] = edges;
  return j;
}

}  // namespace noncomm
