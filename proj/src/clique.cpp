#include <algorithm>

#include "noncomm/ncgraph.hpp"

namespace noncomm {
namespace {

// Vertices in reverse order of removal when repeatedly deleting a vertex of
// minimum remaining degree (ties: smallest index). High-core vertices come
// first, which keeps the candidate sets of early branches small.
std::vector<std::size_t> degeneracy_order(const NCGraph& graph) {
  const std::size_t v = graph.vertex_count();
  std::vector<std::size_t> deg(v);
  for (std::size_t x = 0; x < v; ++x) deg[x] = graph.degree(x);
  std::vector<char> removed(v, 0);
  std::vector<std::size_t> order;
  order.reserve(v);
  for (std::size_t step = 0; step < v; ++step) {
    std::size_t best = v;
    for (std::size_t x = 0; x < v; ++x)
      if (!removed[x] && (best == v || deg[x] < deg[best])) best = x;
    removed[best] = 1;
    order.push_back(best);
    const auto& row = graph.neighbors(best);
    for (auto y = row.first(); y < v; y = row.next(y))
      if (!removed[y]) --deg[y];
  }
  std::reverse(order.begin(), order.end());
  return order;
}

class CliqueSearch {
 public:
  CliqueSearch(const NCGraph& graph, std::chrono::milliseconds budget)
      : n_(graph.vertex_count()), deadline_(std::chrono::steady_clock::now() + budget) {
    order_ = degeneracy_order(graph);
    std::vector<std::size_t> pos(n_);
    for (std::size_t i = 0; i < n_; ++i) pos[order_[i]] = i;
    adj_.assign(n_, Bitset(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      const auto& row = graph.neighbors(order_[i]);
      for (auto y = row.first(); y < n_; y = row.next(y)) adj_[i].set(pos[y]);
    }
  }

  CliqueResult run() {
    Bitset all(n_);
    for (std::size_t i = 0; i < n_; ++i) all.set(i);
    std::vector<std::size_t> current;
    expand(current, all);
    return result();
  }

  CliqueResult result() const {
    CliqueResult r;
    r.omega = best_.size();
    for (auto i : best_) r.witness.push_back(order_[i]);
    std::sort(r.witness.begin(), r.witness.end());
    return r;
  }

 private:
  // Greedy sequential coloring of p in index order. Fills vertices and their
  // color numbers so that colors are non-decreasing along the list.
  void color(const Bitset& p, std::vector<std::size_t>& verts, std::vector<std::size_t>& colors) const {
    Bitset uncolored = p;
    std::size_t k = 0;
    while (!uncolored.none()) {
      ++k;
      Bitset q = uncolored;
      for (auto x = q.first(); x < n_; x = q.next(x)) {
        q.subtract(adj_[x]);
        uncolored.reset(x);
        verts.push_back(x);
        colors.push_back(k);
      }
    }
  }

  void expand(std::vector<std::size_t>& current, Bitset p) {
    if ((nodes_++ & 1023) == 0 && std::chrono::steady_clock::now() >= deadline_) throw CliqueBudgetExceeded(result());
    std::vector<std::size_t> verts, colors;
    color(p, verts, colors);
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current.size() + colors[i] <= best_.size()) return;
      const std::size_t x = verts[i];
      current.push_back(x);
      Bitset next = p;
      next &= adj_[x];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(current, std::move(next));
      }
      current.pop_back();
      p.reset(x);
    }
  }

  std::size_t n_;
  std::chrono::steady_clock::time_point deadline_;
  std::vector<std::size_t> order_;
  std::vector<Bitset> adj_;
  std::vector<std::size_t> best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

bool is_clique(const NCGraph& graph, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= graph.vertex_count()) return false;
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (vertices[i] == vertices[j] || !graph.adjacent(vertices[i], vertices[j])) return false;
  }
  return true;
}

bool is_noncommuting_set(const Group& g, const NCGraph& graph, std::span<const std::size_t> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.commutes(graph.element(vertices[i]), graph.element(vertices[j]))) return false;
  return true;
}

CliqueResult clique_number(const NCGraph& graph, std::chrono::milliseconds budget) {
  if (graph.vertex_count() > kCliqueVertexLimit) throw GroupError("graph too large for exact clique search");
  CliqueResult r = CliqueSearch(graph, budget).run();
  if (!is_clique(graph, r.witness)) throw GroupError("clique witness failed verification");
  return r;
}

}  // namespace noncomm
