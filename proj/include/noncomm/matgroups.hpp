#pragma once

// GL(2,q), SL(2,q) and their projective quotients, plus the partition of an
// AC-group into distinct centralizers of non-central elements.
//
// Matrices are enumerated in lexicographic order of (a, b, c, d), each entry
// ordered by its field element code, which fixes every element index.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "noncomm/ffield.hpp"
#include "noncomm/groups.hpp"

namespace noncomm {

/// Row-major 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  FieldElem a, b, c, d;

  FieldElem det() const { return a * d - b * c; }
  /// "[[a,b],[c,d]]" with entries in polynomial-coefficient form.
  std::string str() const;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& x, const Mat2& y);

/// Largest group order the matrix constructors will enumerate.
inline constexpr std::uint64_t kMatrixGroupLimit = 2'000'000;

/// GF(q) for a prime power 2 <= q <= 81; throws GroupError("q out of range").
FieldPtr field_of_order(std::uint64_t q);

struct MatrixGroup {
  Group group;
  FieldPtr field;
  /// Entry codes (a, b, c, d) per element index.
  std::vector<std::array<std::uint32_t, 4>> entries;

  Mat2 matrix(Index i) const;
  /// Throws GroupError when the matrix is not an element.
  Index index_of(const Mat2& m) const;
};

MatrixGroup gl2_matrices(std::uint64_t q);
MatrixGroup sl2_matrices(std::uint64_t q);

Group gl2(std::uint64_t q);
Group sl2(std::uint64_t q);
Group pgl2(std::uint64_t q);
Group psl2(std::uint64_t q);

/// q(q^2-1) and q(q^2-1)/gcd(2,q-1).
std::uint64_t pgl2_order(std::uint64_t q);
std::uint64_t psl2_order(std::uint64_t q);

struct PartitionReport {
  /// Distinct centralizers of non-central elements, ordered by their
  /// smallest non-central member.
  std::vector<Subgroup> components;
  /// Subgroup order -> number of components with that order.
  std::map<Index, std::size_t> order_counts;
  Index center_order = 1;
  /// Components pairwise meet in Z(G) and their union is G.
  bool covers = false;

  /// Filled when the component orders match the PSL/PGL(2,q) pattern: the
  /// field size q, the divisor d (1 for PGL, gcd(2,q-1) for PSL), and the
  /// counts of components of order q, (q-1)/d and (q+1)/d (relative to Z(G)).
  std::optional<std::uint64_t> q;
  std::uint64_t divisor = 1;
  std::size_t sylow_count = 0;
  std::size_t split_tori_count = 0;
  std::size_t nonsplit_tori_count = 0;
  std::array<std::uint64_t, 3> component_orders{};

  nlohmann::ordered_json to_json() const;
};

/// Throws GroupError("not an AC-group") for non-AC input and a GroupError
/// naming a witness element when the centralizers fail to partition G.
PartitionReport maximal_abelian_partition(const Group& g);

/// Partition of PSL(2,q) (general = false) or PGL(2,q) (general = true) by
/// the images C_M(x)/Z(M) of the distinct centralizers of the AC cover
/// M = SL(2,q) or GL(2,q). Components are subgroups of psl2(q) or pgl2(q)
/// with the same element indices, pairwise meeting in the identity.
PartitionReport projective_partition(std::uint64_t q, bool general);

}  // namespace noncomm
