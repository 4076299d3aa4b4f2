#include <algorithm>
#include <map>
#include <numeric>

#include "noncomm/groups.hpp"

namespace noncomm {
namespace {

constexpr Index kUnset = static_cast<Index>(-1);

// (element order, centralizer order): preserved by every isomorphism.
using Invariant = std::pair<Index, Index>;

std::vector<Invariant> invariants(const Group& g) {
  const auto rows = commutation_rows(g);
  std::vector<Invariant> inv(g.order());
  for (Index x = 0; x < g.order(); ++x) inv[x] = {g.element_order(x), static_cast<Index>(rows[x].count())};
  return inv;
}

// Generators chosen to keep the backtracking narrow: start from the rarest
// invariant class, then add whichever element enlarges the closure most.
std::vector<Index> search_generators(const Group& g, const std::vector<Invariant>& inv) {
  std::map<Invariant, std::size_t> class_size;
  for (const auto& v : inv) ++class_size[v];
  std::vector<Index> order(g.order());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
    const auto ca = class_size[inv[a]], cb = class_size[inv[b]];
    if (ca != cb) return ca < cb;
    return g.element_order(a) > g.element_order(b);
  });

  std::vector<Index> gens;
  Subgroup current = trivial_subgroup(g);
  for (auto x : order) {
    if (x == g.identity()) continue;
    gens.push_back(x);
    current = closure(g, gens);
    break;
  }
  while (current.size() < g.order()) {
    std::size_t best_size = 0;
    Index best = kUnset;
    for (auto x : order) {
      if (current.contains(x)) continue;
      auto trial = gens;
      trial.push_back(x);
      const std::size_t s = closure(g, trial).size();
      if (s > best_size) {
        best_size = s;
        best = x;
        if (s == g.order()) break;
      }
    }
    gens.push_back(best);
    current = closure(g, gens);
  }
  return gens;
}

class IsoSearch {
 public:
  IsoSearch(const Group& g, const Group& h, std::vector<Index> gens, std::vector<std::vector<Index>> candidates)
      : g_(g), h_(h), gens_(std::move(gens)), candidates_(std::move(candidates)), images_(gens_.size()) {}

  std::optional<std::vector<Index>> run() {
    if (gens_.empty()) return std::vector<Index>{h_.identity()};
    if (descend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool descend(std::size_t depth) {
    for (auto candidate : candidates_[depth]) {
      images_[depth] = candidate;
      const std::size_t mapped = extend(depth);
      if (mapped == 0) continue;
      if (depth + 1 == gens_.size()) {
        if (mapped == g_.order() && is_isomorphism(g_, h_, map_)) return true;
        continue;
      }
      if (descend(depth + 1)) return true;
    }
    return false;
  }

  // Builds the map on <gens[0..depth]> by breadth-first products. Returns the
  // number of mapped elements, or 0 on an inconsistency.
  std::size_t extend(std::size_t depth) {
    map_.assign(g_.order(), kUnset);
    used_.assign(h_.order(), 0);
    std::vector<Index> queue{g_.identity()};
    map_[g_.identity()] = h_.identity();
    used_[h_.identity()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const Index x = queue[i];
      for (std::size_t j = 0; j <= depth; ++j) {
        const Index y = g_.mul(x, gens_[j]);
        const Index hy = h_.mul(map_[x], images_[j]);
        if (map_[y] == kUnset) {
          if (used_[hy]) return 0;
          map_[y] = hy;
          used_[hy] = 1;
          queue.push_back(y);
        } else if (map_[y] != hy) {
          return 0;
        }
      }
    }
    return queue.size();
  }

  const Group& g_;
  const Group& h_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<Index> images_;
  std::vector<Index> map_;
  std::vector<char> used_;
};

}  // namespace

bool is_isomorphism(const Group& g, const Group& h, std::span<const Index> map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  std::vector<char> hit(h.order(), 0);
  for (auto y : map) {
    if (y >= h.order() || hit[y]) return false;
    hit[y] = 1;
  }
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

std::optional<std::vector<Index>> is_isomorphic(const Group& g, const Group& h, Index bound) {
  if (g.order() > bound || h.order() > bound) throw GroupError("isomorphism bound exceeded");
  if (g.order() != h.order()) return std::nullopt;

  const auto inv_g = invariants(g);
  const auto inv_h = invariants(h);
  auto sorted_g = inv_g, sorted_h = inv_h;
  std::sort(sorted_g.begin(), sorted_g.end());
  std::sort(sorted_h.begin(), sorted_h.end());
  if (sorted_g != sorted_h) return std::nullopt;

  auto gens = search_generators(g, inv_g);
  std::vector<std::vector<Index>> candidates;
  for (auto x : gens) {
    std::vector<Index> c;
    for (Index y = 0; y < h.order(); ++y)
      if (inv_h[y] == inv_g[x]) c.push_back(y);
    candidates.push_back(std::move(c));
  }
  return IsoSearch(g, h, std::move(gens), std::move(candidates)).run();
}

}  // namespace noncomm
