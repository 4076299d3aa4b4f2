#pragma once

// Finite groups with indexed elements.
//
// A Group is an immutable value: copies share the same underlying data.
// Elements are indices 0..order-1 with a canonical string key each. Groups
// of order <= kTableLimit carry a materialized multiplication table; larger
// groups evaluate products on demand through a callback supplied by the
// constructor (matrix multiplication for the matrix groups).
//
// Every search below breaks ties by the smallest element index, so all
// results are reproducible.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "noncomm/bitset.hpp"

namespace noncomm {

using Index = std::uint32_t;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sorted set of element indices of some parent group. The parent is not
/// stored; every operation takes the parent explicitly.
class Subgroup {
 public:
  Subgroup() = default;
  explicit Subgroup(std::vector<Index> members);

  std::span<const Index> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Index x) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  /// Orders by size, then lexicographically by members.
  friend bool operator<(const Subgroup& a, const Subgroup& b);

 private:
  std::vector<Index> members_;
};

class Group {
 public:
  using MulFn = std::function<Index(Index, Index)>;
  using CommuteFn = std::function<bool(Index, Index)>;

  static constexpr Index kTableLimit = 4096;

  /// table[a * order + b] = a*b. Validates the Latin-square property,
  /// identity, and associativity (exhaustive for order <= 64, sampled
  /// otherwise). When generators is empty a generating set is chosen greedily.
  static Group from_table(std::string label, std::vector<std::string> keys, std::vector<Index> table,
                          std::vector<Index> generators = {});

  /// On-demand multiplication. commute may provide a faster test than two
  /// products; it defaults to comparing mul(a,b) with mul(b,a).
  static Group from_function(std::string label, std::vector<std::string> keys, Index identity, MulFn mul,
                             CommuteFn commute = {}, std::vector<Index> generators = {});

  const std::string& label() const;
  Index order() const;
  Index identity() const;
  Index inverse(Index a) const;
  Index element_order(Index a) const;
  Index mul(Index a, Index b) const;
  bool commutes(Index a, Index b) const;
  bool has_table() const;

  const std::string& key(Index a) const;
  const std::vector<std::string>& keys() const;
  /// Deterministic generating set (empty only for the trivial group).
  std::span<const Index> generators() const;

  /// Same group data under a new label.
  Group relabel(std::string label) const;

 private:
  struct Data;
  explicit Group(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;
};

// --- subgroups -------------------------------------------------------------

Subgroup trivial_subgroup(const Group& g);
Subgroup whole_group(const Group& g);

/// Smallest subgroup containing the generators (breadth-first saturation).
Subgroup closure(const Group& g, std::span<const Index> generators);
/// As closure, but gives up once the size exceeds limit.
std::optional<Subgroup> closure_bounded(const Group& g, std::span<const Index> generators, std::size_t limit);

/// Greedy generating set of s, scanning members in index order.
std::vector<Index> generators_of(const Group& g, const Subgroup& s);

Subgroup intersection(const Subgroup& a, const Subgroup& b);
bool is_subset(const Subgroup& a, const Subgroup& b);

Subgroup center(const Group& g);
Subgroup centralizer(const Group& g, Index x);
Subgroup normalizer(const Group& g, const Subgroup& s);
bool is_normal(const Group& g, const Subgroup& s);
/// Smallest normal subgroup of `within` containing the given elements.
Subgroup normal_closure(const Group& g, const Subgroup& within, std::span<const Index> elements);

Subgroup derived_subgroup(const Group& g);
/// Derived subgroup of s, computed inside the parent g.
Subgroup derived_subgroup(const Group& g, const Subgroup& s);
std::vector<Subgroup> derived_series(const Group& g);

/// The subgroup renumbered as a standalone group (members keep their order).
Group subgroup_as_group(const Group& g, const Subgroup& s, std::string label);

struct QuotientMap {
  Group group;
  /// coset_of[x] = index of xN in the quotient.
  std::vector<Index> coset_of;
  /// Minimal member index of each coset.
  std::vector<Index> representatives;
};

/// Throws GroupError("not normal").
QuotientMap quotient_map(const Group& g, const Subgroup& n);
Group quotient(const Group& g, const Subgroup& n);
/// Preimage in g of a subgroup of the quotient.
Subgroup preimage(const QuotientMap& q, const Subgroup& s);

bool is_abelian(const Group& g);
bool is_abelian(const Group& g, const Subgroup& s);
bool is_solvable(const Group& g);
bool is_nilpotent(const Group& g);

struct SylowInfo {
  std::uint64_t p = 0;
  std::size_t count = 0;
  Subgroup representative;
};

/// Throws GroupError when p does not divide |g|.
SylowInfo sylow(const Group& g, std::uint64_t p);

/// A, B normal, A ∩ B trivial and |A||B| = |G|.
bool internal_direct_product(const Group& g, const Subgroup& a, const Subgroup& b);

/// All subgroups sorted by (size, members). Throws
/// GroupError("lattice bound exceeded") when |g| > bound.
std::vector<Subgroup> subgroup_lattice(const Group& g, Index bound = 200);

/// Row x holds C(x) as a bitset over element indices.
std::vector<Bitset> commutation_rows(const Group& g);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);
bool is_prime_power(std::uint64_t n);

// --- isomorphism -----------------------------------------------------------

/// Checks that map (indexed by elements of g) is a bijective homomorphism
/// onto h by testing every product.
bool is_isomorphism(const Group& g, const Group& h, std::span<const Index> map);

/// Generator-backtracking isomorphism search. Returns a verified map from
/// elements of g to elements of h, or nullopt. Throws
/// GroupError("isomorphism bound exceeded") when either order exceeds bound.
std::optional<std::vector<Index>> is_isomorphic(const Group& g, const Group& h, Index bound = 2000);

}  // namespace noncomm
