#pragma once

// AC-group detection, Schmidt's case lists for solvable and non-solvable
// AC-groups, Frobenius quotient detection, and the end-to-end verification
// pipelines for GL(2,q) and SL(2,q).
//
// Case tags: S1..S5 for solvable groups, NS1..NS4 for non-solvable ones.
// NS3 and NS4 involve a covering group of A6 that is never constructed, so
// they are only ever reported as "NS3*" / "NS4*" from order arithmetic.

#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "noncomm/groups.hpp"
#include "noncomm/ncgraph.hpp"
#include "noncomm/report.hpp"

namespace noncomm {

struct AcResult {
  bool is_ac = true;
  /// On failure: x non-central and y, z in C(x) with yz != zy.
  std::optional<std::array<Index, 3>> witness;

  Json to_json(const Group& g) const;
};

AcResult is_ac_group(const Group& g);
AcResult is_ac_group(const Group& g, const std::vector<Bitset>& commutation);

struct TransferResult {
  /// (*) holds for every vertex and AC-ness carries over.
  bool ok = false;
  bool g_is_ac = false;
  bool h_is_ac = false;
  /// First vertex of A_G whose centralizer image is wrong.
  std::optional<std::size_t> witness_vertex;

  Json to_json() const;
};

/// Checks that iso, a vertex bijection A_G -> A_H, carries C_G(x)\Z(G) onto
/// C_H(iso(x))\Z(H) for every vertex x. Throws GroupError when iso is not a
/// bijection between the vertex sets.
TransferResult ac_transfer_check(const Group& g, const Group& h, std::span<const std::size_t> iso);

struct FrobeniusStructure {
  /// Preimages in G of the kernel and complement of G/Z(G).
  Subgroup kernel;
  Subgroup complement;
  Index kernel_index = 0;      // |F:Z(G)|
  Index complement_index = 0;  // |K:Z(G)|
};

/// Frobenius kernel and complement of q itself, found through the subgroup
/// lattice: the first complement in lattice order wins.
std::optional<std::pair<Subgroup, Subgroup>> frobenius_decomposition(const Group& q, Index lattice_bound = 200);
/// Independent check of the Frobenius conditions for (kernel, complement)
/// in q.
bool verify_frobenius(const Group& q, const Subgroup& kernel, const Subgroup& complement);

/// Throws GroupError("lattice bound exceeded") when |G/Z(G)| is too large.
std::optional<FrobeniusStructure> frobenius_structure(const Group& g, Index lattice_bound = 200);

struct ClassifyOptions {
  std::chrono::milliseconds clique_budget = std::chrono::seconds(300);
  Index lattice_bound = 200;
  Index iso_bound = 2000;
};

struct ClassificationReport {
  std::string label;
  bool is_ac = false;
  bool solvable = false;
  bool nilpotent = false;
  /// Asserted case, or "classification failure".
  std::string schmidt_case;
  /// Every case whose conditions hold, in case order.
  std::vector<std::string> matches;
  /// Named witnesses per matching case.
  Json witnesses = Json::object();
  /// Field order r^m for the non-solvable cases.
  std::optional<std::uint64_t> field_order;
  /// Expected (case formula) and computed clique number for the asserted case.
  std::optional<std::size_t> omega_expected;
  std::optional<std::size_t> omega_computed;
  /// All witnesses passed the independent re-check.
  bool witnesses_verified = false;
  std::vector<std::string> notes;

  bool failed() const { return schmidt_case == "classification failure"; }
  Json to_json() const;
};

/// Preconditions (checked, GroupError otherwise): non-abelian, solvable, AC.
ClassificationReport schmidt_solvable_case(const Group& g, const ClassifyOptions& options = {});
/// Preconditions (checked, GroupError otherwise): non-solvable, AC.
ClassificationReport schmidt_nonsolvable_case(const Group& g, const ClassifyOptions& options = {});
/// AC test and dispatch on solvability. Non-AC groups get schmidt_case "not AC".
ClassificationReport classify(const Group& g, const ClassifyOptions& options = {});

/// Clique number of A_G: the exact solver up to kCliqueVertexLimit vertices.
std::size_t omega_of(const Group& g, std::chrono::milliseconds budget);

// --- arithmetic used by the theorem proofs -----------------------------------

/// a and b are both powers p^i, p^j (i, j >= 1) of one prime p.
bool share_prime_power(std::uint64_t a, std::uint64_t b);
/// No two of the values are powers of a common prime.
bool pairwise_prime_power_free(std::span<const std::uint64_t> values);

// --- pipelines -------------------------------------------------------------

struct PipelineOptions {
  std::chrono::milliseconds clique_budget = std::chrono::seconds(300);
  /// Largest graph for which the pipelines run the exact clique solver.
  std::size_t omega_vertex_bound = 600;
  std::size_t iso_vertex_bound = kGraphIsoVertexLimit;
};

/// q in {2,3,4,5,7,8,9}; throws GroupError otherwise.
VerdictReport verify_theorem_sl(std::uint64_t q, const PipelineOptions& options = {});
/// q in {4,5,7,8,9}; throws GroupError("theorem requires q > 3") for q <= 3.
VerdictReport verify_theorem_gl(std::uint64_t q, const PipelineOptions& options = {});

struct RivalEntry {
  std::string label;
  bool abelian = false;
  bool fingerprint_equal = false;
  /// Exact graph isomorphism result; empty when not run.
  std::optional<bool> graph_isomorphic;
  bool matched = false;
};

struct RivalReport {
  Index order = 0;
  std::string target;
  std::vector<RivalEntry> entries;

  std::vector<std::string> matches() const;
  Json to_json() const;
};

/// Compares every non-abelian catalog group with the target graph:
/// fingerprints first, then exact isomorphism for ties within the vertex
/// bound. Above the bound a fingerprint tie counts as a match.
RivalReport rival_scan(Index order, const NCGraph& target, const std::vector<Group>& catalog,
                       std::size_t iso_vertex_bound = kGraphIsoVertexLimit);

}  // namespace noncomm
