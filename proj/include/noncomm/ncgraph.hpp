#pragma once

// The non-commuting graph of a finite group: vertices are the non-central
// elements, joined when they do not commute. Also the invariants read off
// it: degrees, the centralizer multisets W and W', the clique number, and a
// color-refinement fingerprint.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "noncomm/bitset.hpp"
#include "noncomm/groups.hpp"

namespace noncomm {

class NCGraph {
 public:
  /// Throws GroupError("graph undefined for abelian groups").
  static NCGraph build(const Group& g);
  static NCGraph build(const Group& g, const std::vector<Bitset>& commutation);

  const std::string& label() const { return label_; }
  Index group_order() const { return group_order_; }
  Index center_order() const { return center_order_; }
  std::size_t vertex_count() const { return elements_.size(); }
  /// Element index of vertex v.
  Index element(std::size_t v) const { return elements_[v]; }
  std::span<const Index> elements() const { return elements_; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }
  std::size_t edge_count() const;

  /// Vertex i of the result is vertex perm[i] of this graph; the element
  /// back-map moves with it.
  NCGraph relabeled(std::span<const std::size_t> perm) const;

 private:
  std::string label_;
  Index group_order_ = 0;
  Index center_order_ = 0;
  std::vector<Index> elements_;
  std::vector<Bitset> adjacency_;
};

inline NCGraph build_graph(const Group& g) { return NCGraph::build(g); }

struct CentralizerProfile {
  Index group_order = 0;
  Index center_order = 0;
  /// |C(x)| -> number of non-central x with that centralizer order.
  std::map<Index, std::size_t> w;
  /// |C(x)|/|Z| -> number of non-central x.
  std::map<Index, std::size_t> w_prime;
  /// |C(x)| -> number of distinct centralizer subgroups of that order.
  std::map<Index, std::size_t> distinct_counts;

  std::size_t element_total() const;
  std::vector<Index> distinct_values() const;
  std::vector<Index> distinct_prime_values() const;
  nlohmann::ordered_json to_json() const;

  friend bool operator==(const CentralizerProfile&, const CentralizerProfile&) = default;
};

CentralizerProfile centralizer_profile(const Group& g);
CentralizerProfile centralizer_profile(const Group& g, const std::vector<Bitset>& commutation);
/// The same profile recovered from the graph alone: |C(x)| = |G| - deg(x),
/// and C(x) \ Z(G) = {x} ∪ non-neighbors of x.
CentralizerProfile profile_from_graph(const NCGraph& graph);

struct CliqueResult {
  std::size_t omega = 0;
  /// Vertex indices, ascending.
  std::vector<std::size_t> witness;
};

class CliqueBudgetExceeded : public std::runtime_error {
 public:
  explicit CliqueBudgetExceeded(CliqueResult best)
      : std::runtime_error("clique budget exhausted"), best_(std::move(best)) {}
  const CliqueResult& best() const { return best_; }

 private:
  CliqueResult best_;
};

inline constexpr std::size_t kCliqueVertexLimit = 1000;

/// Exact maximum clique by branch and bound with greedy-coloring bounds over
/// a degeneracy ordering. The witness is checked pairwise adjacent before
/// returning. Throws CliqueBudgetExceeded with the best clique found when the
/// budget runs out, and GroupError when the graph exceeds kCliqueVertexLimit.
CliqueResult clique_number(const NCGraph& graph, std::chrono::milliseconds budget = std::chrono::seconds(300));

/// True when the vertices are pairwise adjacent.
bool is_clique(const NCGraph& graph, std::span<const std::size_t> vertices);
/// True when the witness elements pairwise fail to commute in g.
bool is_noncommuting_set(const Group& g, const NCGraph& graph, std::span<const std::size_t> vertices);

struct Fingerprint {
  std::size_t vertex_count = 0;
  /// degree -> number of vertices
  std::map<std::size_t, std::size_t> degrees;
  /// Stable color-refinement classes as (color hash, class size), sorted.
  std::vector<std::pair<std::uint64_t, std::size_t>> color_classes;
  std::size_t rounds = 0;
  std::optional<std::size_t> omega;

  nlohmann::ordered_json to_json() const;
};

Fingerprint fingerprint(const NCGraph& graph);
/// Equal vertex counts, degree multisets and color classes; omega is compared
/// only when both sides carry it.
bool same_fingerprint(const Fingerprint& a, const Fingerprint& b);

/// Stable refinement color of each vertex (comparable across graphs).
std::vector<std::uint64_t> refinement_colors(const NCGraph& graph, std::size_t* rounds = nullptr);

inline constexpr std::size_t kGraphIsoVertexLimit = 64;

/// Vertex bijection g1 -> g2 preserving adjacency, verified edge by edge, or
/// nullopt. Throws GroupError("iso bound exceeded; compare fingerprints
/// instead") above the vertex bound.
std::optional<std::vector<std::size_t>> graphs_isomorphic(const NCGraph& g1, const NCGraph& g2,
                                                          std::size_t vertex_bound = kGraphIsoVertexLimit);

/// DIMACS: "p edge n m" then 1-based "e u v" lines with u < v.
std::string to_dimacs(const NCGraph& graph);
nlohmann::ordered_json to_json(const NCGraph& graph, const Group& g);

}  // namespace noncomm
