#pragma once

// Standard small groups built from descriptors, and the catalogs of rival
// groups used to test uniqueness of non-commuting graphs at orders 6 and 24.
//
// Descriptor text syntax (also accepted by the CLI):
//   C<n> | Z<n>            cyclic of order n
//   D<2n>                  dihedral of order 2n
//   Dic<4n> | Q8           dicyclic of order 4n (Q8 = Dic8)
//   S<n> | A<n>            symmetric / alternating on n points
//   direct(A,B,...)        direct product
//   semidirect(N,H,act...) N ⋊ H
//
// Canonical generators, which action words refer to:
//   C<n>: 1          D<2n>: r, s          Dic<4n>: a, x
//   S<n>: (1 2 ... n), (1 2)              A<n>: (1 2 k) for k = 3..n
//   direct: generators of each factor in turn
//   semidirect: generators of N, then of H
//
// A semidirect action lists, for each generator of H, the images of N's
// generators as words in letters x, y, z, w (N's generators in order),
// each optionally raised to an integer power: "x^2", "xy", "x^-1", "e".
// With one generator on each side the word may be given bare:
// "semidirect(C5,C4,x^2)". Otherwise use one bracket group per generator
// of H: "semidirect(Q8,C3,[y,xy])", "semidirect(C3,D8,[x^2],[x])".

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "noncomm/groups.hpp"

namespace noncomm {

struct GroupDescriptor {
  enum class Kind { cyclic, dihedral, dicyclic, symmetric, alternating, direct, semidirect };

  Kind kind = Kind::cyclic;
  /// cyclic: order; dihedral/dicyclic: total order; symmetric/alternating: degree.
  unsigned param = 1;
  /// direct: the factors; semidirect: {N, H}.
  std::vector<GroupDescriptor> parts;
  /// semidirect: per generator of H, the image words of N's generators.
  std::vector<std::vector<std::string>> action;

  static GroupDescriptor cyclic(unsigned n);
  static GroupDescriptor dihedral(unsigned order);
  static GroupDescriptor dicyclic(unsigned order);
  static GroupDescriptor symmetric(unsigned degree);
  static GroupDescriptor alternating(unsigned degree);
  static GroupDescriptor direct(std::vector<GroupDescriptor> factors);
  static GroupDescriptor semidirect(GroupDescriptor n, GroupDescriptor h, std::vector<std::vector<std::string>> action);

  /// Canonical text form; parse_descriptor(str()) round-trips.
  std::string str() const;
  nlohmann::ordered_json to_json() const;
};

/// Throws GroupError on malformed input.
GroupDescriptor parse_descriptor(std::string_view text);

/// Direct product of already built groups, first factor most significant.
/// Keys are "(k1,k2,...)". Throws GroupError when the order exceeds the
/// table limit.
Group direct_product(const std::vector<Group>& factors, std::string label);

/// Throws GroupError("bad action") when a semidirect action is not a
/// homomorphism into Aut(N).
Group build(const GroupDescriptor& desc);

/// The 15 groups of order 24. Pairwise non-isomorphism is checked on every
/// call; a failure throws instead of deduplicating.
std::vector<Group> order24_catalog();
std::vector<GroupDescriptor> order24_descriptors();

/// C6 and S3.
std::vector<Group> order6_catalog();

/// Catalog for the given order (6 or 24); throws GroupError otherwise.
std::vector<Group> catalog_for_order(Index order);

}  // namespace noncomm
